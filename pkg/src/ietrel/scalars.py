"""Exact arithmetic in a real quadratic extension Q(sqrt(D)).

A scalar is rat + coef*sqrt(disc) with rational rat, coef.  All scalars in
one computation share a single square-free discriminant disc >= 2; pure
rationals are the degenerate case coef = 0 and combine freely with any
context.  Every predicate (sign, ordering, floor) is decided exactly with
integer arithmetic; floats appear only in diagnostic renderings.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache

from .errors import ContextMismatchError, ParseError

__all__ = ["QuadExt", "as_scalar", "ZERO", "ONE"]


@lru_cache(maxsize=None)
def _require_valid_disc(disc: int) -> None:
    if disc < 2:
        raise ValueError(f"discriminant must be >= 2, got {disc}")
    p = 2
    while p * p <= disc:
        if disc % (p * p) == 0:
            raise ValueError(f"discriminant must be square-free, got {disc}")
        p += 1


def _sign3(an: int, bn: int, disc: int) -> int:
    # Sign of an + bn*sqrt(disc), exactly.  When the two terms have opposite
    # signs the comparison reduces to an^2 vs bn^2*disc; equality there would
    # force sqrt(disc) rational, impossible for square-free disc >= 2.
    if bn == 0:
        return (an > 0) - (an < 0)
    if an == 0:
        return (bn > 0) - (bn < 0)
    sa = 1 if an > 0 else -1
    sb = 1 if bn > 0 else -1
    if sa == sb:
        return sa
    lhs = an * an
    rhs = bn * bn * disc
    s = (lhs > rhs) - (lhs < rhs)
    return s if sa > 0 else -s


class QuadExt:
    """Immutable exact scalar (an + bn*sqrt(disc)) / den.

    The triple is kept with den >= 1, gcd(an, bn, den) = 1, and disc = 0
    exactly when bn = 0, so equality of values is equality of triples.
    """

    __slots__ = ("an", "bn", "den", "disc")

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    def __init__(self, rat=0, coef=0, disc: int = 0):
        if isinstance(rat, float) or isinstance(coef, float):
            raise TypeError("QuadExt components must be exact (int or Fraction)")
        a = Fraction(rat)
        b = Fraction(coef)
        an = a.numerator * b.denominator
        bn = b.numerator * a.denominator
        den = a.denominator * b.denominator
        _init_normalized(self, an, bn, den, disc)

    # -- constructors ---------------------------------------------------

    @classmethod
    def sqrt(cls, disc: int) -> "QuadExt":
        """The scalar sqrt(disc)."""
        return cls(0, 1, disc)

    @classmethod
    def parse(cls, text: str, disc: int | None = None) -> "QuadExt":
        """Parse 'p/q', 'p/q+r/s*sqrt(D)' or 'r/s*sqrt(D)' (signs optional,
        whitespace insignificant).  With an ambient disc given, a mismatched
        D in the text is a context error."""
        s = re.sub(r"\s+", "", text)
        if not s:
            raise ParseError("empty scalar")
        starts = [0] + [i for i in range(1, len(s)) if s[i] in "+-"]
        if len(starts) > 2:
            raise ParseError(f"malformed scalar {text!r}")
        rat = None
        coef = None
        found_disc = 0
        for a, b in zip(starts, starts[1:] + [len(s)]):
            term = s[a:b]
            sign = 1
            if term and term[0] in "+-":
                sign = -1 if term[0] == "-" else 1
                term = term[1:]
            m = _ROOT_TERM.match(term)
            if m:
                if coef is not None:
                    raise ParseError(f"two root terms in scalar {text!r}")
                coef = sign * _parse_fraction(m.group(1) or "1", text)
                found_disc = int(m.group(2))
            elif _RAT_TERM.match(term):
                if rat is not None:
                    raise ParseError(f"two rational terms in scalar {text!r}")
                rat = sign * _parse_fraction(term, text)
            else:
                raise ParseError(f"malformed scalar term {term!r} in {text!r}")
        if coef is not None and coef != 0:
            try:
                _require_valid_disc(found_disc)
            except ValueError as exc:
                raise ParseError(str(exc)) from None
            if disc is not None and found_disc != disc:
                raise ContextMismatchError(
                    f"scalar {text!r} uses sqrt({found_disc}) under context D={disc}"
                )
        return cls(rat or 0, coef or 0, found_disc if coef else 0)

    # -- context --------------------------------------------------------

    @property
    def rat(self) -> Fraction:
        return Fraction(self.an, self.den)

    @property
    def coef(self) -> Fraction:
        return Fraction(self.bn, self.den)

    @property
    def is_rational(self) -> bool:
        return self.bn == 0

    def _merged_disc(self, other: "QuadExt") -> int:
        if self.disc and other.disc and self.disc != other.disc:
            raise ContextMismatchError(
                f"incompatible contexts sqrt({self.disc}) and sqrt({other.disc})"
            )
        return self.disc or other.disc

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        d = self._merged_disc(other)
        return _make(
            self.an * other.den + other.an * self.den,
            self.bn * other.den + other.bn * self.den,
            self.den * other.den,
            d,
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        d = self._merged_disc(other)
        return _make(
            self.an * other.den - other.an * self.den,
            self.bn * other.den - other.bn * self.den,
            self.den * other.den,
            d,
        )

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other.__sub__(self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        d = self._merged_disc(other)
        return _make(
            self.an * other.an + self.bn * other.bn * d,
            self.an * other.bn + self.bn * other.an,
            self.den * other.den,
            d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division by zero scalar")
        d = self._merged_disc(other)
        # 1/x = den*(an - bn*sqrt(d)) / (an^2 - bn^2*d)
        norm = other.an * other.an - other.bn * other.bn * d
        inv = _make(other.den * other.an, -other.den * other.bn, norm, d)
        return self * inv

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other.__truediv__(self)

    def __neg__(self):
        return _raw(-self.an, -self.bn, self.den, self.disc)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __bool__(self):
        return self.an != 0 or self.bn != 0

    # -- order ----------------------------------------------------------

    def sign(self) -> int:
        return _sign3(self.an, self.bn, self.disc)

    def _cmp(self, other: "QuadExt") -> int:
        d = self._merged_disc(other)
        return _sign3(
            self.an * other.den - other.an * self.den,
            self.bn * other.den - other.bn * self.den,
            d,
        )

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (
            self.an == other.an
            and self.bn == other.bn
            and self.den == other.den
            and self.disc == other.disc
        )

    def __lt__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self._cmp(other) < 0

    def __le__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self._cmp(other) <= 0

    def __gt__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self._cmp(other) > 0

    def __ge__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self._cmp(other) >= 0

    def __hash__(self):
        if self.bn == 0:
            return hash(Fraction(self.an, self.den))
        return hash((self.an, self.bn, self.den, self.disc))

    # -- integer part ---------------------------------------------------

    def floor(self) -> int:
        """Exact floor, via integer square-root brackets for the root term."""
        if self.bn == 0:
            return self.an // self.den
        s = math.isqrt(self.bn * self.bn * self.disc)
        if self.bn > 0:
            # bn*sqrt(disc) lies in [s, s+1), and the value is irrational,
            # so no integer sits strictly inside the bracket.
            return (self.an + s) // self.den
        return (self.an - s - 1) // self.den

    def mod_one(self) -> "QuadExt":
        """Fractional part, always in [0, 1)."""
        return self - self.floor()

    # -- renderings -----------------------------------------------------

    def __float__(self):
        val = self.an
        if self.bn:
            val = self.an + self.bn * math.sqrt(self.disc)
        return val / self.den

    def to_float(self) -> float:
        return float(self)

    def __str__(self):
        if self.bn == 0:
            return str(self.rat)
        root = f"{abs(self.coef)}*sqrt({self.disc})"
        if self.an == 0:
            return root if self.bn > 0 else "-" + root
        sign = "+" if self.bn > 0 else "-"
        return f"{self.rat}{sign}{root}"

    def __repr__(self):
        return f"QuadExt({str(self)!r})"


def _init_normalized(obj: QuadExt, an: int, bn: int, den: int, disc: int) -> None:
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if den < 0:
        an, bn, den = -an, -bn, -den
    if bn == 0:
        disc = 0
    else:
        _require_valid_disc(disc)
    g = math.gcd(math.gcd(abs(an), abs(bn)), den)
    object.__setattr__(obj, "an", an // g)
    object.__setattr__(obj, "bn", bn // g)
    object.__setattr__(obj, "den", den // g)
    object.__setattr__(obj, "disc", disc)


def _raw(an: int, bn: int, den: int, disc: int) -> QuadExt:
    # Internal: trusts that the triple is already normalized.
    obj = object.__new__(QuadExt)
    object.__setattr__(obj, "an", an)
    object.__setattr__(obj, "bn", bn)
    object.__setattr__(obj, "den", den)
    object.__setattr__(obj, "disc", disc)
    return obj


def _make(an: int, bn: int, den: int, disc: int) -> QuadExt:
    obj = object.__new__(QuadExt)
    _init_normalized(obj, an, bn, den, disc)
    return obj


def _coerce(x) -> QuadExt | None:
    if isinstance(x, QuadExt):
        return x
    if isinstance(x, int):
        return _raw(x, 0, 1, 0)
    if isinstance(x, Fraction):
        return _raw(x.numerator, 0, x.denominator, 0)
    return None


def as_scalar(x) -> QuadExt:
    """Coerce an int, Fraction or QuadExt to QuadExt."""
    v = _coerce(x)
    if v is None:
        raise TypeError(f"cannot interpret {x!r} as an exact scalar")
    return v


def _parse_fraction(text: str, whole: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r} in {whole!r}: {exc}") from None


_RAT_TERM = re.compile(r"^\d+(?:/\d+)?$")
_ROOT_TERM = re.compile(r"^(?:(\d+(?:/\d+)?)\*)?sqrt\((\d+)\)$")

ZERO = QuadExt(0)
ONE = QuadExt(1)
