"""Exact planar geometry over the rationals.

Every scalar is a ``fractions.Fraction`` (arbitrary precision, canonical
form: positive denominator, gcd 1), so all predicates here are exact
equality tests and nothing is ever rounded.  Identities verified by the
engine modules reduce to ``==`` between Fractions.

Lines are stored as homogeneous triples (a, b, c) for the locus
a*x + b*y + c = 0, normalized so the first nonzero coefficient of (a, b)
is +1.  That makes line equality, parallelism and duplicate detection
plain field comparisons.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import (
    CoincidentLines,
    CoincidesWithDenominatorEnd,
    DuplicateLines,
    IdenticalPoints,
    InvalidRational,
    NotCollinear,
    ParallelLines,
)

# The universal scalar type of the kernel.
Rational = Fraction

RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int, "p/q" string, or Fraction to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def parse_rational(text: str) -> Fraction:
    """Parse the wire format "p/q" (or "p"), denominator positive.

    Raises InvalidRational for anything else, including "1/0".
    """
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise InvalidRational(f"not a rational string: {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise InvalidRational(f"zero denominator: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_rational(value: Fraction) -> str:
    """Serialize to "p/q", or "p" when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Point:
    """Exact point in the plane."""

    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", as_rational(self.x))
        object.__setattr__(self, "y", as_rational(self.y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def scaled(self, k: RationalLike) -> "Point":
        k = as_rational(k)
        return Point(self.x * k, self.y * k)


@dataclass(frozen=True)
class Line:
    """Line a*x + b*y + c = 0, canonicalized on construction.

    The first nonzero coefficient among (a, b) is forced to +1, so two
    Line values describe the same locus iff they are equal as tuples.
    """

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        a = as_rational(self.a)
        b = as_rational(self.b)
        c = as_rational(self.c)
        if a != 0:
            b, c, a = b / a, c / a, Fraction(1)
        elif b != 0:
            c, b = c / b, Fraction(1)
        else:
            raise ValueError("degenerate line: a = b = 0")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    def value_at(self, p: Point) -> Fraction:
        """Exact value of a*x + b*y + c at p; zero iff p lies on the line."""
        return self.a * p.x + self.b * p.y + self.c

    def contains(self, p: Point) -> bool:
        return self.value_at(p) == 0

    def is_parallel_to(self, other: "Line") -> bool:
        """True for parallel or coincident lines (equal direction)."""
        return self.a * other.b - other.a * self.b == 0


@dataclass(frozen=True)
class AffineMap:
    """Invertible affine transform (x, y) -> (m11 x + m12 y + tx, m21 x + m22 y + ty)."""

    m11: Fraction
    m12: Fraction
    m21: Fraction
    m22: Fraction
    tx: Fraction
    ty: Fraction

    def __post_init__(self):
        for name in ("m11", "m12", "m21", "m22", "tx", "ty"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.m11 * self.m22 - self.m12 * self.m21 == 0:
            raise ValueError("affine map is not invertible (zero determinant)")

    @staticmethod
    def identity() -> "AffineMap":
        return AffineMap(1, 0, 0, 1, 0, 0)


def affine_apply(map_: AffineMap, p: Point) -> Point:
    return Point(map_.m11 * p.x + map_.m12 * p.y + map_.tx,
                 map_.m21 * p.x + map_.m22 * p.y + map_.ty)


def line_through(p: Point, q: Point) -> Line:
    """The unique line containing two distinct points."""
    if p == q:
        raise IdenticalPoints(f"no unique line through coincident points {p}")
    return Line(p.y - q.y, q.x - p.x, p.x * q.y - q.x * p.y)


def intersect_lines(l1: Line, l2: Line) -> Point:
    """Exact intersection point of two non-parallel lines."""
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        if l1 == l2:
            raise CoincidentLines(f"lines coincide: {l1}")
        raise ParallelLines(f"parallel lines {l1} and {l2}")
    x = (l1.b * l2.c - l2.b * l1.c) / det
    y = (l2.a * l1.c - l1.a * l2.c) / det
    return Point(x, y)


def signed_area2(p: Point, q: Point, r: Point) -> Fraction:
    """Twice the signed area of triangle pqr (positive when ccw)."""
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def is_collinear(p: Point, q: Point, r: Point) -> bool:
    return signed_area2(p, q, r) == 0


def distance_squared(p: Point, q: Point) -> Fraction:
    """Squared Euclidean distance; exact, unlike the distance itself."""
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def directed_ratio(x: Point, a: Point, b: Point) -> Fraction:
    """Signed ratio r of directed segments XA/XB: (A - X) = r * (B - X).

    All three points must be collinear and X must differ from B.  The
    ratio is negative exactly when X lies strictly between A and B.  It
    is computed from whichever coordinate of (B - X) is nonzero; when
    both are usable the two quotients must agree, which is asserted as a
    free self-check.
    """
    if x == b:
        raise CoincidesWithDenominatorEnd(
            f"ratio point {x} coincides with the denominator end")
    if not is_collinear(x, a, b):
        raise NotCollinear(f"{x}, {a}, {b} are not collinear")
    dxb = b.x - x.x
    dyb = b.y - x.y
    if dxb != 0:
        ratio = (a.x - x.x) / dxb
        assert dyb == 0 or ratio == (a.y - x.y) / dyb
        return ratio
    return (a.y - x.y) / dyb


def point_from_ratio(a: Point, b: Point, ratio: RationalLike) -> Point:
    """The unique X on line AB with directed_ratio(X, A, B) = ratio.

    Solving (A - X) = r (B - X) gives X = (A - r B) / (1 - r); r = 1 has
    no solution (X escapes to infinity).
    """
    r = as_rational(ratio)
    if r == 1:
        raise ValueError("no finite point realizes directed ratio 1")
    x = Point((a.x - r * b.x) / (1 - r), (a.y - r * b.y) / (1 - r))
    assert directed_ratio(x, a, b) == r
    return x


def are_concurrent(lines: Sequence[Line]) -> bool:
    """True iff all lines pass through one common point.

    Requires at least two pairwise-distinct lines; families containing a
    parallel pair return False (parallelism is not a point here).
    """
    if len(lines) < 2:
        raise ValueError("concurrency needs at least two lines")
    if len(set(lines)) != len(lines):
        raise DuplicateLines("duplicate line in concurrency test")
    first = lines[0]
    partner = next((l for l in lines[1:] if not first.is_parallel_to(l)), None)
    if partner is None:
        return False
    common = intersect_lines(first, partner)
    return all(l.contains(common) for l in lines)
