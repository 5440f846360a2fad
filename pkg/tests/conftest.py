"""Shared strategies and helpers for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from ietrel.iet import Iet
from ietrel.intervals import IntervalSet
from ietrel.rotation import DisjointRotationSpec
from ietrel.sampling import random_iet, random_rotation_spec
from ietrel.scalars import ONE, ZERO, QuadExt

DISCS = (2, 3, 5)


def q(rat, coef=0, disc=0) -> QuadExt:
    return QuadExt(Fraction(rat), Fraction(coef), disc)


@st.composite
def rationals(draw, max_num=60, max_den=12) -> Fraction:
    num = draw(st.integers(-max_num, max_num))
    den = draw(st.integers(1, max_den))
    return Fraction(num, den)


@st.composite
def quads(draw, disc=None) -> QuadExt:
    d = disc if disc is not None else draw(st.sampled_from(DISCS))
    rat = draw(rationals())
    coef = draw(rationals(max_num=12, max_den=8))
    return QuadExt(rat, coef if coef else 0, d if coef else 0)


def seeded_iets(max_intervals=6, denominator=8):
    """Deterministic random IETs, one per seed."""
    return st.integers(0, 2**20).map(
        lambda s: random_iet(random.Random(s), max_intervals, denominator)
    )


def seeded_specs() -> st.SearchStrategy[DisjointRotationSpec]:
    return st.integers(0, 2**20).map(
        lambda s: random_rotation_spec(random.Random(s))
    )


@st.composite
def interval_sets(draw, grid=16) -> IntervalSet:
    cuts = draw(st.sets(st.integers(0, grid), min_size=0, max_size=6))
    spans = []
    points = sorted(cuts)
    for a, b in zip(points, points[1:]):
        if draw(st.booleans()):
            spans.append((q(Fraction(a, grid)), q(Fraction(b, grid))))
    return IntervalSet(spans)


def grid_points(grid=64):
    """Sample points of [0, 1) on a rational grid."""
    return st.integers(0, grid - 1).map(lambda k: q(Fraction(k, grid)))


def assert_tiles_unit_interval(f: Iet) -> None:
    """The image intervals of f, sorted, must partition [0, 1)."""
    images = sorted((lo + t, hi + t) for lo, hi, t in f.pieces())
    cursor = ZERO
    for lo, hi in images:
        assert lo == cursor
        assert lo < hi
        cursor = hi
    assert cursor == ONE
