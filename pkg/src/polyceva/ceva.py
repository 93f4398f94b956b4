"""Cevian product identities over an n-gon with a pivot point.

Setup: vertices A_1..A_n (1-based, cyclic), a pivot M, and parameters
s, t >= 1 with 2s + t = n.  The line through A_i and M crosses the t
consecutive side-lines A_j A_{j+1} for j = i+s .. i+s+t-1 (indices mod
n); each crossing M_ij contributes the signed ratio M_ij A_j / M_ij
A_{j+1}.  The product of all n*t ratios is exactly (-1)^n, which this
module computes and checks with exact rational arithmetic.  The n = 3,
s = t = 1 case is Ceva's classical theorem.

The converse fails: `build_converse_counterexample` constructs, for any
pentagon in general position, five cevians whose ratio product is -1
even though the lines are not concurrent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    AxisAligned,
    CoincidentLines,
    DegenerateConfig,
    DivisionByZero,
    DuplicateLines,
    InvariantViolation,
    ParallelLines,
)
from .geometry import (
    Point,
    Line,
    are_concurrent,
    directed_ratio,
    intersect_lines,
    line_through,
    point_from_ratio,
)


def idx_shift(i: int, k: int, n: int) -> int:
    """Apply the cyclic successor permutation k times to a 1-based index.

    k may be negative; the result is always in 1..n.
    """
    if n < 1 or not 1 <= i <= n:
        raise ValueError(f"index {i} out of range 1..{n}")
    return (i - 1 + k) % n + 1


def sides_hit(i: int, s: int, t: int, n: int) -> list[int]:
    """Side indices j whose line A_j A_{j+1} is crossed by the cevian at A_i.

    These are the t consecutive sides starting at j = i + s.
    """
    if 2 * s + t != n:
        raise ValueError(f"need 2s + t = n, got s={s}, t={t}, n={n}")
    return [idx_shift(i, s + d, n) for d in range(t)]


def _validate_st(n: int, s: int, t: int) -> None:
    if n < 3:
        raise InvariantViolation(f"polygon needs at least 3 vertices, got {n}")
    if s < 1 or t < 1:
        raise InvariantViolation(f"s and t must be positive, got s={s}, t={t}")
    if 2 * s + t != n:
        raise InvariantViolation(f"2s + t = n violated: s={s}, t={t}, n={n}")


def _cevian_foot(vertices: Sequence[Point], pivot: Point, i: int, j: int) -> Point:
    """Intersection of line A_i M with side-line A_j A_{j+1}, with the
    degeneracy checks the ratio at that point needs."""
    n = len(vertices)
    a_i = vertices[i - 1]
    a_j = vertices[j - 1]
    a_jn = vertices[idx_shift(j, 1, n) - 1]
    cevian = line_through(a_i, pivot)
    side = line_through(a_j, a_jn)
    try:
        foot = intersect_lines(cevian, side)
    except (ParallelLines, CoincidentLines) as exc:
        raise DegenerateConfig(DegenerateConfig.PARALLEL, i, j, str(exc)) from exc
    if foot == a_j or foot == a_jn:
        raise DegenerateConfig(DegenerateConfig.HITS_VERTEX, i, j,
                               "cevian crossing lands on a side endpoint")
    return foot


@dataclass(frozen=True)
class CevaConfig:
    """An n-gon, a pivot, and an (s, t) split with 2s + t = n.

    Construction validates both the structural invariants (distinct
    vertices, pivot off the vertex set, valid split) and general
    position: every required cevian-side crossing must exist and avoid
    the side's endpoints.  A valid config therefore makes every ratio in
    the product well-defined.
    """

    vertices: tuple[Point, ...]
    pivot: Point
    s: int
    t: int

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        n = len(self.vertices)
        _validate_st(n, self.s, self.t)
        if len(set(self.vertices)) != n:
            raise InvariantViolation("vertices must be pairwise distinct")
        if self.pivot in self.vertices:
            raise InvariantViolation("pivot coincides with a vertex")
        for i in range(1, n + 1):
            for j in sides_hit(i, self.s, self.t, n):
                _cevian_foot(self.vertices, self.pivot, i, j)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def vertex(self, i: int) -> Point:
        """1-based cyclic vertex access; any integer index wraps mod n."""
        return self.vertices[(i - 1) % self.n]


@dataclass(frozen=True)
class Factor:
    """One ratio of the product: cevian vertex i, side j, signed value."""

    i: int
    j: int
    value: Fraction


@dataclass(frozen=True)
class ProductReport:
    """Factored product with its expected value and the exact verdict."""

    factors: tuple[Factor, ...]
    product: Fraction
    expected: Fraction
    holds: bool

    @staticmethod
    def from_factors(factors: Sequence[Factor], expected: Fraction) -> "ProductReport":
        product = math.prod((f.value for f in factors), start=Fraction(1))
        return ProductReport(tuple(factors), product, expected,
                             product == expected)


def cevian_intersection(cfg: CevaConfig, i: int, j: int) -> Point:
    """The crossing M_ij of cevian A_i M with side-line A_j A_{j+1}.

    j must be one of sides_hit(i, s, t, n).
    """
    if j not in sides_hit(i, cfg.s, cfg.t, cfg.n):
        raise ValueError(f"side {j} is not crossed by the cevian at vertex {i}")
    return _cevian_foot(cfg.vertices, cfg.pivot, i, j)


def ceva_product(cfg: CevaConfig) -> ProductReport:
    """The full signed ratio product over all n*t cevian crossings.

    Equals (-1)^n exactly for every valid configuration.
    """
    n = cfg.n
    factors = []
    for i in range(1, n + 1):
        for j in sides_hit(i, cfg.s, cfg.t, n):
            foot = _cevian_foot(cfg.vertices, cfg.pivot, i, j)
            value = directed_ratio(foot, cfg.vertex(j), cfg.vertex(j + 1))
            factors.append(Factor(i, j, value))
    return ProductReport.from_factors(factors, Fraction(-1) ** n)


def classic_ceva_product(triangle: Sequence[Point], pivot: Point) -> ProductReport:
    """Ceva's theorem: the three cevians of a triangle through one point
    cut the opposite sides in ratios whose product is exactly -1."""
    if len(triangle) != 3:
        raise InvariantViolation("classic case needs exactly 3 vertices")
    return ceva_product(CevaConfig(tuple(triangle), pivot, 1, 1))


def opposite_vertex_product(polygon: Sequence[Point], pivot: Point) -> ProductReport:
    """Odd n-gon, one crossing per side: each side-line A_i A_{i+1} is cut
    at M_i by the line joining the pivot to the opposite vertex.

    The product of the n ratios M_i A_i / M_i A_{i+1} is exactly -1.
    Factors are listed in side order, so factors[i-1] is the ratio on
    side i.  This is the s = (n-1)/2, t = 1 case of `ceva_product`.
    """
    n = len(polygon)
    if n % 2 == 0:
        raise InvariantViolation(f"needs an odd number of vertices, got {n}")
    _validate_st(n, (n - 1) // 2, 1)
    report = ceva_product(CevaConfig(tuple(polygon), pivot, (n - 1) // 2, 1))
    by_side = sorted(report.factors, key=lambda f: f.j)
    return ProductReport(tuple(by_side), report.product, report.expected,
                         report.holds)


def all_sides_product(polygon: Sequence[Point], pivot: Point) -> ProductReport:
    """Every cevian crosses every side not touching its own vertex:
    the s = 1, t = n - 2 case.  Product is (-1)^n."""
    n = len(polygon)
    return ceva_product(CevaConfig(tuple(polygon), pivot, 1, n - 2))


def normalized_line_value(x: Fraction, y: Fraction, vertex: Point,
                          pivot: Point) -> Fraction:
    """Value at (x, y) of the two-point form of the line vertex-pivot:

        (x - a)/(X - a) - (y - b)/(Y - b)

    with pivot (a, b) and vertex (X, Y).  Zero exactly on the line.
    Defined only when the vertex shares no coordinate with the pivot.
    """
    if vertex.x == pivot.x or vertex.y == pivot.y:
        raise AxisAligned(
            f"vertex {vertex} shares a coordinate with pivot {pivot}")
    return (x - pivot.x) / (vertex.x - pivot.x) - (y - pivot.y) / (vertex.y - pivot.y)


def line_value_antisymmetry(cfg: CevaConfig, r: int, q: int) -> bool:
    """Check the exact swap identity of the normalized line form.

    Writing D(u, v) for the value of the A_v-pivot line form at A_u and
    P(u) = (X_u - a)(Y_u - b), the identity

        D(r, q) / D(q, r) = -P(r) / P(q)

    holds whenever no vertex of cfg shares a coordinate with the pivot
    and A_q is off the line A_r-pivot.  Returns the (always true) exact
    comparison rather than assuming it.
    """
    if r == q:
        raise ValueError("indices must differ")
    for v in cfg.vertices:
        if v.x == cfg.pivot.x or v.y == cfg.pivot.y:
            raise AxisAligned(
                f"vertex {v} shares a coordinate with pivot {cfg.pivot}")
    a_r = cfg.vertex(r)
    a_q = cfg.vertex(q)
    d_rq = normalized_line_value(a_r.x, a_r.y, a_q, cfg.pivot)
    d_qr = normalized_line_value(a_q.x, a_q.y, a_r, cfg.pivot)
    if d_qr == 0:
        raise DivisionByZero(f"vertex {q} lies on the cevian line at vertex {r}")
    p_r = (a_r.x - cfg.pivot.x) * (a_r.y - cfg.pivot.y)
    p_q = (a_q.x - cfg.pivot.x) * (a_q.y - cfg.pivot.y)
    return d_rq / d_qr == -p_r / p_q


@dataclass(frozen=True)
class Counterexample:
    """Five cevians of a pentagon with ratio product -1 yet not concurrent.

    meet_points[i-1] is M_i on side-line A_i A_{i+1} and ratios[i-1] its
    signed ratio; cevians[i-1] is the line drawn through vertex A_i.
    """

    vertices: tuple[Point, ...]
    pivot: Point
    cevians: tuple[Line, ...]
    meet_points: tuple[Point, ...]
    ratios: tuple[Fraction, ...]
    K: Fraction
    branch: str
    product: Fraction
    concurrent: bool


def build_converse_counterexample(pentagon: Sequence[Point], pivot: Point,
                                  seed: int = 0) -> Counterexample:
    """Constructively refute the converse of the product identity.

    The cevians from A_1, A_2, A_3 through the pivot meet the side-lines
    A_3A_4, A_4A_5, A_5A_1 at M_3, M_4, M_5; call the product of their
    three ratios K.  M_1 is then placed on line A_1A_2 at ratio 1/K, or
    at 2/K when the line A_4 M_1 would pass through the pivot, and M_2
    on line A_2A_3 at ratio -1 or -1/2 respectively.  The five ratios
    multiply to exactly -1 by construction, while A_4 M_1 misses the
    pivot, so the five cevians A_1M_3, A_2M_4, A_3M_5, A_4M_1, A_5M_2
    cannot share a point.

    The construction is deterministic; ``seed`` is accepted for wire
    compatibility and reserved for optional perturbation.
    """
    del seed
    if len(pentagon) != 5:
        raise InvariantViolation("counterexample needs exactly 5 vertices")
    vertices = tuple(pentagon)
    if len(set(vertices)) != 5:
        raise InvariantViolation("vertices must be pairwise distinct")
    if pivot in vertices:
        raise InvariantViolation("pivot coincides with a vertex")

    def vtx(i: int) -> Point:
        return vertices[(i - 1) % 5]

    # Feet of the three genuine cevians: vertex i cuts side i + 2.
    feet: dict[int, Point] = {}
    for i in (1, 2, 3):
        j = idx_shift(i, 2, 5)
        feet[j] = _cevian_foot(vertices, pivot, i, j)
    k_value = Fraction(1)
    for j in (3, 4, 5):
        k_value *= directed_ratio(feet[j], vtx(j), vtx(j + 1))

    # Branch choice: ratio 1/K unless the resulting A_4 M_1 hits the pivot
    # (or the ratio degenerates); then 2/K with the compensating -1/2.
    chosen = None
    for branch, r1, r2 in (("1/K", 1 / k_value, Fraction(-1)),
                           ("2/K", 2 / k_value, Fraction(-1, 2))):
        if r1 == 1:
            continue
        m1 = point_from_ratio(vtx(1), vtx(2), r1)
        if m1 == vtx(4):
            continue
        line_a4_m1 = line_through(vtx(4), m1)
        if line_a4_m1.contains(pivot):
            continue
        chosen = (branch, r1, r2, m1, line_a4_m1)
        break
    if chosen is None:
        raise DegenerateConfig(
            DegenerateConfig.HITS_VERTEX, detail="both ratio branches degenerate")
    branch, r1, r2, m1, line_a4_m1 = chosen

    m2 = point_from_ratio(vtx(2), vtx(3), r2)
    if m2 == vtx(5):
        raise DegenerateConfig(
            DegenerateConfig.HITS_VERTEX,
            detail="compensating point coincides with vertex 5")

    meet_points = (m1, m2, feet[3], feet[4], feet[5])
    ratios = tuple(directed_ratio(meet_points[i - 1], vtx(i), vtx(i + 1))
                   for i in range(1, 6))
    product = math.prod(ratios, start=Fraction(1))
    assert product == -1

    # The first three cevians pass through the pivot by construction.
    cevians = (line_through(vtx(1), pivot),
               line_through(vtx(2), pivot),
               line_through(vtx(3), pivot),
               line_a4_m1,
               line_through(vtx(5), m2))
    try:
        concurrent = are_concurrent(cevians)
    except DuplicateLines as exc:
        raise DegenerateConfig(DegenerateConfig.PARALLEL,
                               detail="two cevians coincide") from exc
    return Counterexample(vertices, pivot, cevians, meet_points, ratios,
                          k_value, branch, product, concurrent)
