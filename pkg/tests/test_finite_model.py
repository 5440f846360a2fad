"""Commutator structure of permutation pairs with displaced overlap."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ietrel.errors import InvariantError, PreconditionError
from ietrel.finite_model import (
    CASE_LABELS,
    CommutatorInstance,
    check_hypotheses,
    classify_point,
    compose_maps,
    compute_T,
    enumerate_instances,
    identity_map,
    invert_map,
    orbit_sizes,
    random_instance,
    support_of,
)

FIXED_CASES = {"outside", "I", "III", "Vb"}
MOVES = {"II": ("A", "B"), "Va": ("B", "A"), "VI": ("B", "C"),
         "IVa": ("C", "A"), "IVb": ("C", "B")}


def _region(p: int, inst: CommutatorInstance) -> str:
    if p in inst.A:
        return "A"
    if p in inst.B:
        return "B"
    if p in inst.C:
        return "C"
    return "outside"


# -- map plumbing --------------------------------------------------------------


def test_map_plumbing():
    p = (1, 2, 0)
    q = (0, 2, 1)
    assert compose_maps(p, q) == (1, 0, 2)  # p after q
    assert invert_map(p) == (2, 0, 1)
    assert identity_map(3) == (0, 1, 2)
    assert support_of((1, 0, 2)) == {0, 1}
    assert support_of(identity_map(4)) == frozenset()


def test_orbit_sizes():
    assert orbit_sizes((1, 2, 0, 3)) == (3, 1)
    assert orbit_sizes(identity_map(3)) == (1, 1, 1)
    assert orbit_sizes((1, 0, 3, 2)) == (2, 2)


# -- the three-point worked example --------------------------------------------


def test_three_point_example():
    inst = CommutatorInstance.build(h=(1, 0, 2), phi=(2, 1, 0))
    assert inst.A == {0}
    assert inst.B == {1}
    assert inst.C == {2}
    assert inst.k == (0, 2, 1)
    assert check_hypotheses(inst)
    t = compute_T(inst)
    assert t == (1, 2, 0)
    assert orbit_sizes(t) == (3,)
    assert compose_maps(t, compose_maps(t, t)) == identity_map(3)
    assert classify_point(0, inst) == ("II", 1)
    assert classify_point(1, inst) == ("VI", 2)
    assert classify_point(2, inst) == ("IVa", 0)


def test_build_rejects_mismatched_sizes():
    with pytest.raises(PreconditionError):
        CommutatorInstance.build(h=(1, 0), phi=(2, 1, 0))


# -- degenerate overlaps --------------------------------------------------------


def test_empty_B_makes_T_trivial():
    # h swaps {0, 1}; phi moves exactly that pair away, so supp h = A
    inst = CommutatorInstance.build(h=(1, 0, 2, 3), phi=(2, 3, 0, 1))
    assert check_hypotheses(inst)
    assert inst.B == frozenset()
    assert compute_T(inst) == identity_map(4)
    assert all(classify_point(p, inst)[1] == p for p in range(4))


def test_empty_A_makes_k_equal_h():
    # disjoint supports: phi never touches supp h
    inst = CommutatorInstance.build(h=(1, 0, 2, 3), phi=(0, 1, 3, 2))
    assert inst.A == frozenset()
    assert inst.k == inst.h
    assert compute_T(inst) == identity_map(4)


def test_hypothesis_violation_is_detected():
    # phi maps 0 back into supp h, so A and C overlap
    inst = CommutatorInstance.build(h=(1, 2, 0), phi=(1, 0, 2))
    assert not check_hypotheses(inst)


def test_classify_rejects_doctored_sets():
    # a genuine instance never sends A into C; force it by lying about C
    good = CommutatorInstance.build(h=(1, 0, 2), phi=(2, 1, 0))
    bad = CommutatorInstance(h=good.h, phi=good.phi, A=frozenset({0}),
                             B=frozenset(), C=frozenset({1}), k=good.k)
    with pytest.raises(InvariantError):
        classify_point(0, bad)


# -- case table ------------------------------------------------------------------


def _assert_case_table(inst: CommutatorInstance) -> None:
    t = compute_T(inst)
    for p in range(inst.m):
        label, image = classify_point(p, inst)
        assert label in CASE_LABELS
        assert t[p] == image
        if label in FIXED_CASES:
            assert image == p
            assert _region(p, inst) == ("outside" if label == "outside"
                                        else {"I": "A", "III": "C", "Vb": "B"}[label])
        else:
            src, dst = MOVES[label]
            assert _region(p, inst) == src
            assert _region(image, inst) == dst
        # the one forbidden transition
        assert not (p in inst.A and image in inst.C)


def test_case_table_on_small_enumeration():
    count = 0
    for inst in enumerate_instances(4):
        _assert_case_table(inst)
        count += 1
    assert count == 96


@given(st.integers(0, 10_000), st.integers(3, 24))
@settings(max_examples=60, deadline=None)
def test_case_table_on_random_instances(seed, m):
    inst = random_instance(m, random.Random(seed))
    assert check_hypotheses(inst)
    assert inst.A
    _assert_case_table(inst)


@given(st.integers(0, 10_000), st.integers(3, 24))
@settings(max_examples=40, deadline=None)
def test_commutator_has_order_dividing_six(seed, m):
    inst = random_instance(m, random.Random(seed))
    t = compute_T(inst)
    assert all(size in (1, 2, 3) for size in orbit_sizes(t))


# -- generators -------------------------------------------------------------------


def test_random_instance_is_deterministic_per_seed():
    a = random_instance(8, random.Random(7))
    b = random_instance(8, random.Random(7))
    assert (a.h, a.phi) == (b.h, b.phi)
    with pytest.raises(PreconditionError):
        random_instance(2, random.Random(0))


def test_enumeration_counts():
    assert sum(1 for _ in enumerate_instances(3)) == 6
    assert sum(1 for _ in enumerate_instances(4)) == 96
    assert sum(1 for _ in enumerate_instances(5)) == 1380


def test_enumeration_contains_the_worked_example():
    pairs = {(inst.h, inst.phi) for inst in enumerate_instances(3)}
    assert ((1, 0, 2), (2, 1, 0)) in pairs
    for inst in enumerate_instances(3):
        assert check_hypotheses(inst)
        assert inst.A
        assert support_of(inst.h)
        assert support_of(inst.phi)
