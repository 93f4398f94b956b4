"""Cevian products for polygons inscribed in a circle.

Vertices live on the circle x^2 + y^2 = r^2 and are kept rational via
the tangent half-angle parametrization

    u  ->  ( r(1 - u^2)/(1 + u^2),  2ru/(1 + u^2) ),

a bijection from the rationals onto the rational circle points minus
(-r, 0).  Through each vertex A_i runs a line d_i; it crosses the t
side-lines A_j A_{j+1}, j = i+s .. i+s+t-1 (with 2s + t = n), and meets
the circle again at a second point M'_i.  The identity verified here:
the squared product of the signed side ratios at the crossings equals
the product over i of the squared chord ratios |M'_i A_{i+s}|^2 /
|M'_i A_{i+s+t}|^2.  Squares are used because the chord "ratio" relates
non-collinear segments, where only the magnitude is well-defined; when
all d_i pass through one common point the sign is pinned down by the
plain cevian product and equals (-1)^n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import (
    CoincidentLines,
    DegenerateConfig,
    InvariantViolation,
    NotConcurrent,
    ParallelLines,
    Tangent,
)
from .geometry import (
    Line,
    Point,
    RationalLike,
    as_rational,
    directed_ratio,
    distance_squared,
    intersect_lines,
    line_through,
)
from .ceva import Factor, idx_shift, sides_hit, _validate_st


def circle_point(u: RationalLike, r: RationalLike) -> Point:
    """Rational point of parameter u on the circle x^2 + y^2 = r^2."""
    u = as_rational(u)
    r = as_rational(r)
    if r <= 0:
        raise ValueError(f"radius must be positive, got {r}")
    den = 1 + u * u
    return Point(r * (1 - u * u) / den, 2 * r * u / den)


def second_intersection(line: Line, known: Point, r: RationalLike) -> Point:
    """The other point where a secant meets the circle x^2 + y^2 = r^2.

    ``known`` must lie on both the line and the circle.  With one
    rational root of the substituted quadratic in hand, the second root
    is rational by the sum-of-roots relation, so no square root is ever
    taken.  Raises Tangent when the line only touches at ``known``.
    """
    r = as_rational(r)
    if not line.contains(known):
        raise ValueError("known point is not on the line")
    if known.x * known.x + known.y * known.y != r * r:
        raise ValueError("known point is not on the circle")
    # Parametrize as known + t * (-b, a); the quadratic in t has roots
    # 0 and -2(known . dir)/|dir|^2.
    dir_x = -line.b
    dir_y = line.a
    dot = known.x * dir_x + known.y * dir_y
    if dot == 0:
        raise Tangent(f"line {line} is tangent at {known}")
    t = -2 * dot / (dir_x * dir_x + dir_y * dir_y)
    return Point(known.x + t * dir_x, known.y + t * dir_y)


@dataclass(frozen=True)
class SecondParam:
    """Vertex line given by a second circle parameter: d_i joins A_i to
    the circle point of parameter v."""

    v: Fraction

    def __post_init__(self):
        object.__setattr__(self, "v", as_rational(self.v))


@dataclass(frozen=True)
class ThroughPoint:
    """Vertex line given by an arbitrary second point off the vertex."""

    point: Point


LineSpec = Union[SecondParam, ThroughPoint]


@dataclass(frozen=True)
class InscribedConfig:
    """Inscribed n-gon with one line per vertex and an (s, t) split.

    params must be strictly increasing, which orders the vertices by
    angle along the circle (the parameter is monotone in the half-angle
    tangent).  Construction validates structure and general position:
    every required side crossing exists away from the side's endpoints,
    no d_i is tangent, and no second circle point M'_i lands on a vertex
    used by the chord ratios.
    """

    radius: Fraction
    params: tuple[Fraction, ...]
    line_specs: tuple[LineSpec, ...]
    s: int
    t: int

    def __post_init__(self):
        object.__setattr__(self, "radius", as_rational(self.radius))
        object.__setattr__(self, "params",
                           tuple(as_rational(u) for u in self.params))
        object.__setattr__(self, "line_specs", tuple(self.line_specs))
        if self.radius <= 0:
            raise InvariantViolation(f"radius must be positive, got {self.radius}")
        n = len(self.params)
        _validate_st(n, self.s, self.t)
        if any(a >= b for a, b in zip(self.params, self.params[1:])):
            raise InvariantViolation("circle parameters must be strictly increasing")
        if len(self.line_specs) != n:
            raise InvariantViolation(
                f"need one line spec per vertex, got {len(self.line_specs)}")
        for i, spec in enumerate(self.line_specs, start=1):
            if isinstance(spec, SecondParam):
                if spec.v in self.params:
                    raise InvariantViolation(
                        f"line {i}: second parameter {spec.v} is a vertex parameter")
            elif isinstance(spec, ThroughPoint):
                if spec.point == circle_point(self.params[i - 1], self.radius):
                    raise InvariantViolation(
                        f"line {i}: through-point coincides with vertex {i}")
            else:
                raise InvariantViolation(f"line {i}: unknown spec {spec!r}")
        _resolve(self)  # general-position validation

    @property
    def n(self) -> int:
        return len(self.params)

    @property
    def vertices(self) -> tuple[Point, ...]:
        return tuple(circle_point(u, self.radius) for u in self.params)

    def vertex(self, i: int) -> Point:
        """1-based cyclic vertex access; any integer index wraps mod n."""
        return self.vertices[(i - 1) % self.n]


def _crossing(vertices: Sequence[Point], d_i: Line, i: int, j: int) -> Point:
    """Crossing of d_i with side-line A_j A_{j+1}, vertex-avoidance checked."""
    n = len(vertices)
    a_j = vertices[j - 1]
    a_jn = vertices[idx_shift(j, 1, n) - 1]
    side = line_through(a_j, a_jn)
    try:
        m = intersect_lines(d_i, side)
    except (ParallelLines, CoincidentLines) as exc:
        raise DegenerateConfig(DegenerateConfig.PARALLEL, i, j, str(exc)) from exc
    if m == a_j or m == a_jn:
        raise DegenerateConfig(DegenerateConfig.HITS_VERTEX, i, j,
                               "crossing lands on a side endpoint")
    return m


def _resolve(cfg: InscribedConfig) -> tuple[tuple[Point, ...], tuple[Line, ...],
                                            tuple[Point, ...]]:
    """Vertices, vertex lines d_i, and second circle points M'_i.

    Raises Tangent or DegenerateConfig if the configuration cannot
    support every ratio the identity needs.
    """
    vertices = cfg.vertices
    n = cfg.n
    lines: list[Line] = []
    m_primes: list[Point] = []
    for i, spec in enumerate(cfg.line_specs, start=1):
        a_i = vertices[i - 1]
        if isinstance(spec, SecondParam):
            other = circle_point(spec.v, cfg.radius)
            d_i = line_through(a_i, other)
            m_prime = other
        else:
            d_i = line_through(a_i, spec.point)
            m_prime = second_intersection(d_i, a_i, cfg.radius)
        # Chord ratios divide by |M' A_{i+s+1}| and |M' A_{i+s+t}|, and
        # the numerator vertex A_{i+s} must be avoided as well.
        for k in {idx_shift(i, cfg.s, n), idx_shift(i, cfg.s + 1, n),
                  idx_shift(i, cfg.s + cfg.t, n)}:
            if m_prime == vertices[k - 1]:
                raise DegenerateConfig(DegenerateConfig.HITS_VERTEX, i, k,
                                       "second circle point is a vertex")
        for j in sides_hit(i, cfg.s, cfg.t, n):
            _crossing(vertices, d_i, i, j)
        lines.append(d_i)
        m_primes.append(m_prime)
    return vertices, tuple(lines), tuple(m_primes)


def vertex_lines(cfg: InscribedConfig) -> tuple[Line, ...]:
    """The resolved lines d_1 .. d_n."""
    return _resolve(cfg)[1]


def second_points(cfg: InscribedConfig) -> tuple[Point, ...]:
    """The second circle points M'_1 .. M'_n."""
    return _resolve(cfg)[2]


def inscribed_side_product(cfg: InscribedConfig) -> tuple[Fraction, list[Factor]]:
    """Signed product of the side ratios at all n*t crossings, with the
    per-crossing factors."""
    vertices, lines, _ = _resolve(cfg)
    n = cfg.n
    factors = []
    for i in range(1, n + 1):
        for j in sides_hit(i, cfg.s, cfg.t, n):
            m = _crossing(vertices, lines[i - 1], i, j)
            value = directed_ratio(m, vertices[j - 1],
                                   vertices[idx_shift(j, 1, n) - 1])
            factors.append(Factor(i, j, value))
    product = math.prod((f.value for f in factors), start=Fraction(1))
    return product, factors


def inscribed_chord_product_squared(cfg: InscribedConfig) -> Fraction:
    """Product over i of |M'_i A_{i+s}|^2 / |M'_i A_{i+s+t}|^2.

    This is the square of the chord-ratio product; squared distances
    keep it rational and exact.
    """
    vertices, _, m_primes = _resolve(cfg)
    n = cfg.n
    product = Fraction(1)
    for i in range(1, n + 1):
        near = vertices[idx_shift(i, cfg.s, n) - 1]
        far = vertices[idx_shift(i, cfg.s + cfg.t, n) - 1]
        mp = m_primes[i - 1]
        product *= distance_squared(mp, near) / distance_squared(mp, far)
    return product


def similar_triangles_relation(cfg: InscribedConfig, i: int) -> bool:
    """Exact check of the inscribed-angle factorization at vertex i.

    At the first crossing M = d_i x side-line A_{i+s} A_{i+s+1}, the
    pairs of triangles cut by the chord through A_i and M'_i are
    similar (whether M falls inside or outside the circle), giving

        |M A_{i+s}|^2 / |M A_{i+s+1}|^2
            = (|M' A_{i+s}|^2 / |M' A_{i+s+1}|^2)
            * (|A_i A_{i+s}|^2 / |A_i A_{i+s+1}|^2).

    Returns the exact comparison, true for every valid configuration.
    """
    vertices, lines, m_primes = _resolve(cfg)
    n = cfg.n
    j = idx_shift(i, cfg.s, n)  # validates i in 1..n
    a_i = vertices[i - 1]
    a_j = vertices[j - 1]
    a_jn = vertices[idx_shift(j, 1, n) - 1]
    m = _crossing(vertices, lines[i - 1], i, j)
    m_prime = m_primes[i - 1]
    lhs = distance_squared(m, a_j) / distance_squared(m, a_jn)
    rhs = (distance_squared(m_prime, a_j) / distance_squared(m_prime, a_jn)) \
        * (distance_squared(a_i, a_j) / distance_squared(a_i, a_jn))
    return lhs == rhs


def chord_telescoping_squared(cfg: InscribedConfig) -> Fraction:
    """Product over i of |A_i A_{i+s}|^2 / |A_i A_{i+s+t}|^2.

    Because i+s+t = i-s mod n, every chord appears once in a numerator
    and once in a denominator, so the product is exactly 1.
    """
    vertices = cfg.vertices
    n = cfg.n
    product = Fraction(1)
    for i in range(1, n + 1):
        near = vertices[idx_shift(i, cfg.s, n) - 1]
        far = vertices[idx_shift(i, cfg.s + cfg.t, n) - 1]
        a_i = vertices[i - 1]
        product *= distance_squared(a_i, near) / distance_squared(a_i, far)
    return product


@dataclass(frozen=True)
class InscribedReport:
    """Both sides of the squared identity plus the raw signed product."""

    lhs: Fraction
    lhs_squared: Fraction
    rhs_squared: Fraction
    holds: bool
    m_prime_points: tuple[Point, ...]
    factors: tuple[Factor, ...]


def inscribed_identity_report(cfg: InscribedConfig) -> InscribedReport:
    """Verify lhs^2 = rhs^2 exactly for an inscribed configuration."""
    lhs, factors = inscribed_side_product(cfg)
    rhs_squared = inscribed_chord_product_squared(cfg)
    return InscribedReport(lhs, lhs * lhs, rhs_squared,
                           lhs * lhs == rhs_squared,
                           second_points(cfg), tuple(factors))


def concurrent_secants_check(cfg: InscribedConfig) -> InscribedReport:
    """Specialization where every d_i passes through one common point.

    Requires all line specs to be ThroughPoint with the same point.  In
    that case the signed side product is pinned to (-1)^n and the chord
    product has magnitude exactly 1; ``holds`` demands both on top of
    the squared identity.
    """
    if not all(isinstance(spec, ThroughPoint) for spec in cfg.line_specs):
        raise NotConcurrent("every vertex line must be specified through a point")
    if len({spec.point for spec in cfg.line_specs}) != 1:
        raise NotConcurrent("vertex lines do not share one common point")
    report = inscribed_identity_report(cfg)
    expected = Fraction(-1) ** cfg.n
    holds = (report.holds and report.lhs == expected
             and report.rhs_squared == 1)
    return InscribedReport(report.lhs, report.lhs_squared, report.rhs_squared,
                           holds, report.m_prime_points, report.factors)


def inscribed_opposite_side_check(cfg: InscribedConfig) -> InscribedReport:
    """The t = 1 instance: n is odd and each d_i crosses exactly the one
    side opposite its vertex."""
    if cfg.t != 1:
        raise InvariantViolation(f"single-crossing case needs t = 1, got t={cfg.t}")
    return inscribed_identity_report(cfg)
