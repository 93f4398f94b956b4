"""Engine tests for inscribed polygons: parametrized circle points,
second intersections, and the squared product identity."""

from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from polyceva.errors import InvariantViolation, NotConcurrent, Tangent
from polyceva.geometry import (
    AffineMap,
    Line,
    Point,
    affine_apply,
    distance_squared,
    line_through,
)
from polyceva.ceva import idx_shift
from polyceva.circle import (
    InscribedConfig,
    SecondParam,
    ThroughPoint,
    chord_telescoping_squared,
    circle_point,
    concurrent_secants_check,
    inscribed_chord_product_squared,
    inscribed_identity_report,
    inscribed_opposite_side_check,
    inscribed_side_product,
    second_intersection,
    second_points,
    similar_triangles_relation,
    vertex_lines,
)
from polyceva.fuzz import GenParams, gen_inscribed_config

from _float_oracle import float_side_product

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=10)
radii = st.fractions(min_value=F(1, 5), max_value=6, max_denominator=8)

PENTAGON_US = (F(-2), F(-1, 2), F(0), F(1, 2), F(2))
PENTAGON_VS = (F(3), F(5), F(-3), F(7), F(1, 3))


def pentagon_config() -> InscribedConfig:
    return InscribedConfig(F(1), PENTAGON_US,
                           tuple(SecondParam(v) for v in PENTAGON_VS), 2, 1)


def inscribed_triangle_with_common_point() -> InscribedConfig:
    us = (F(-1, 3), F(1, 5), F(4))
    pts = [circle_point(u, F(1)) for u in us]
    pivot = Point(sum(p.x for p in pts) / 3, sum(p.y for p in pts) / 3)
    return InscribedConfig(F(1), us, tuple(ThroughPoint(pivot) for _ in us), 1, 1)


class TestCirclePoint:
    def test_param_zero(self):
        assert circle_point(0, 1) == Point(F(1), F(0))

    def test_param_one(self):
        assert circle_point(1, 1) == Point(F(0), F(1))

    def test_three_four_five(self):
        assert circle_point(F(1, 2), 1) == Point(F(3, 5), F(4, 5))

    def test_radius_must_be_positive(self):
        with pytest.raises(ValueError):
            circle_point(F(1, 2), 0)

    @given(rationals, radii)
    def test_on_circle(self, u, r):
        p = circle_point(u, r)
        assert p.x * p.x + p.y * p.y == r * r


class TestSecondIntersection:
    def test_both_on_circle(self):
        line = line_through(Point(F(1), F(0)), Point(F(0), F(1)))
        assert second_intersection(line, Point(F(1), F(0)), 1) == Point(F(0), F(1))

    def test_tangent(self):
        with pytest.raises(Tangent):
            second_intersection(Line(1, 0, -1), Point(F(1), F(0)), 1)

    def test_hand_solved_diagonal_secant(self):
        # Through (3/5, 4/5) with direction (1, -1): substituting the
        # parametric point into x^2 + y^2 = 1 gives 2u(u - 1/5) = 0, so
        # the second point is (4/5, 3/5).
        start = Point(F(3, 5), F(4, 5))
        line = line_through(start, Point(F(3, 5) + 1, F(4, 5) - 1))
        assert second_intersection(line, start, 1) == Point(F(4, 5), F(3, 5))

    def test_known_point_validated(self):
        with pytest.raises(ValueError):
            second_intersection(Line(1, 0, -1), Point(F(0), F(0)), 1)
        with pytest.raises(ValueError):
            second_intersection(Line(0, 1, 0), Point(F(1), F(1)), 1)

    @given(rationals, rationals, radii)
    def test_involution(self, u, v, r):
        if u == v:
            return
        a = circle_point(u, r)
        b = circle_point(v, r)
        line = line_through(a, b)
        assert second_intersection(line, a, r) == b
        assert second_intersection(line, b, r) == a


class TestInscribedConfigValidation:
    def test_params_must_increase(self):
        with pytest.raises(InvariantViolation):
            InscribedConfig(F(1), (F(1), F(0), F(2)),
                            tuple(SecondParam(F(7)) for _ in range(3)), 1, 1)

    def test_second_param_not_a_vertex(self):
        with pytest.raises(InvariantViolation):
            InscribedConfig(F(1), (F(0), F(1), F(2)),
                            (SecondParam(F(1)),) * 3, 1, 1)

    def test_through_point_not_the_vertex(self):
        with pytest.raises(InvariantViolation):
            InscribedConfig(F(1), (F(0), F(1), F(2)),
                            (ThroughPoint(Point(F(1), F(0))),) * 3, 1, 1)

    def test_split_checked(self):
        with pytest.raises(InvariantViolation):
            InscribedConfig(F(1), PENTAGON_US,
                            tuple(SecondParam(v) for v in PENTAGON_VS), 1, 1)

    def test_spec_count(self):
        with pytest.raises(InvariantViolation):
            InscribedConfig(F(1), PENTAGON_US,
                            tuple(SecondParam(v) for v in PENTAGON_VS[:4]), 2, 1)

    def test_radius_positive(self):
        with pytest.raises(InvariantViolation):
            InscribedConfig(F(-1), PENTAGON_US,
                            tuple(SecondParam(v) for v in PENTAGON_VS), 2, 1)

    def test_tangent_line_rejected(self):
        # The vertical through (1, 0) is tangent to the unit circle.
        with pytest.raises(Tangent):
            InscribedConfig(F(1), (F(0), F(1), F(2)),
                            (ThroughPoint(Point(F(1), F(5))),
                             SecondParam(F(9)), SecondParam(F(-5))), 1, 1)

    def test_vertices_in_circular_order(self):
        cfg = pentagon_config()
        assert len(cfg.vertices) == 5
        assert cfg.vertex(6) == cfg.vertex(1)


class TestSideProduct:
    def test_concurrent_lines_give_signed_unit(self):
        cfg = inscribed_triangle_with_common_point()
        product, factors = inscribed_side_product(cfg)
        assert product == -1
        assert len(factors) == 3

    def test_pentagon_fixture(self):
        product, factors = inscribed_side_product(pentagon_config())
        assert product == -27
        assert len(factors) == 5

    def test_float_cross_check(self):
        cfg = pentagon_config()
        product, _ = inscribed_side_product(cfg)
        verts = [(float(p.x), float(p.y)) for p in cfg.vertices]
        others = [(float(circle_point(v, 1).x), float(circle_point(v, 1).y))
                  for v in PENTAGON_VS]
        assert abs(float_side_product(verts, others, 2, 1) - float(product)) < 1e-9


class TestChordProduct:
    def test_concurrent_chord_magnitude_is_one(self):
        assert inscribed_chord_product_squared(
            inscribed_triangle_with_common_point()) == 1

    def test_pentagon_fixture_matches_square_of_lhs(self):
        cfg = pentagon_config()
        lhs, _ = inscribed_side_product(cfg)
        assert inscribed_chord_product_squared(cfg) == lhs * lhs == 729

    def test_random_configs(self):
        params = GenParams(seed=53, n_min=3, n_max=7)
        for trial in range(20):
            cfg = gen_inscribed_config(params, trial)
            lhs, _ = inscribed_side_product(cfg)
            assert inscribed_chord_product_squared(cfg) == lhs * lhs


class TestSimilarTrianglesRelation:
    def test_pentagon_fixture_all_vertices(self):
        cfg = pentagon_config()
        assert all(similar_triangles_relation(cfg, i) for i in range(1, 6))

    def test_exterior_first_crossing(self):
        # The first crossing for vertex 1 falls outside the circle here;
        # the factorization must hold in that case too.
        cfg = InscribedConfig(F(1), (F(-5, 2), F(-1, 3), F(0)),
                              (SecondParam(F(5)), SecondParam(F(-4)),
                               SecondParam(F(-1, 2))), 1, 1)
        vertices = cfg.vertices
        lines = vertex_lines(cfg)
        side = line_through(vertices[1], vertices[2])
        from polyceva.geometry import intersect_lines
        crossing = intersect_lines(lines[0], side)
        assert crossing.x ** 2 + crossing.y ** 2 > 1
        assert all(similar_triangles_relation(cfg, i) for i in range(1, 4))

    def test_interior_first_crossing(self):
        cfg = inscribed_triangle_with_common_point()
        assert all(similar_triangles_relation(cfg, i) for i in range(1, 4))

    def test_random_configs(self):
        params = GenParams(seed=59, n_min=3, n_max=7)
        for trial in range(15):
            cfg = gen_inscribed_config(params, trial)
            assert all(similar_triangles_relation(cfg, i)
                       for i in range(1, cfg.n + 1))


class TestChordTelescoping:
    def test_pentagon_fixture(self):
        assert chord_telescoping_squared(pentagon_config()) == 1

    def test_triangle_each_chord_up_and_down(self):
        cfg = inscribed_triangle_with_common_point()
        assert chord_telescoping_squared(cfg) == 1

    def test_index_pairing_cancels_by_hand(self):
        # Independent oracle: expand the chord pairing for n=5, s=2.
        # Numerators pair {i, i+2}; denominators pair {i, i+3} = {i-2, i}.
        # As unordered pairs the two multisets coincide, so everything
        # cancels.
        n, s, t = 5, 2, 1
        numerators = [frozenset({i, idx_shift(i, s, n)}) for i in range(1, n + 1)]
        denominators = [frozenset({i, idx_shift(i, s + t, n)}) for i in range(1, n + 1)]
        assert sorted(numerators, key=sorted) == sorted(denominators, key=sorted)
        cfg = pentagon_config()
        vertices = cfg.vertices
        chord = {pair: distance_squared(vertices[min(pair) - 1],
                                        vertices[max(pair) - 1])
                 for pair in numerators}
        product = F(1)
        for up, down in zip(numerators, denominators):
            product *= chord[up] / chord[down]
        assert product == 1

    def test_random_configs(self):
        params = GenParams(seed=61, n_min=3, n_max=7)
        for trial in range(15):
            cfg = gen_inscribed_config(params, trial)
            assert chord_telescoping_squared(cfg) == 1


class TestConcurrentSecants:
    def test_inscribed_triangle(self):
        report = concurrent_secants_check(inscribed_triangle_with_common_point())
        assert report.lhs == -1
        assert report.rhs_squared == 1
        assert report.holds

    def test_inscribed_quadrilateral(self):
        us = (F(-2), F(0), F(1, 2), F(3))
        pivot = Point(F(1, 10), F(1, 10))
        cfg = InscribedConfig(F(1), us, tuple(ThroughPoint(pivot)
                                              for _ in range(4)), 1, 2)
        report = concurrent_secants_check(cfg)
        assert report.lhs == 1
        assert report.rhs_squared == 1
        assert report.holds

    def test_not_concurrent_specs(self):
        cfg = pentagon_config()
        with pytest.raises(NotConcurrent):
            concurrent_secants_check(cfg)

    def test_distinct_points_rejected(self):
        us = (F(-2), F(0), F(1, 2), F(3))
        specs = (ThroughPoint(Point(F(1, 10), F(1, 10))),) * 3 \
            + (ThroughPoint(Point(F(1, 7), F(1, 5))),)
        cfg = InscribedConfig(F(1), us, specs, 1, 2)
        with pytest.raises(NotConcurrent):
            concurrent_secants_check(cfg)

    def test_random_common_points(self):
        params = GenParams(seed=67, n_min=3, n_max=6)
        for trial in range(10):
            cfg = gen_inscribed_config(params, trial, concurrent=True)
            report = concurrent_secants_check(cfg)
            assert report.lhs == F(-1) ** cfg.n
            assert report.rhs_squared == 1
            assert report.holds


class TestOppositeSideCheck:
    def test_requires_single_crossing(self):
        us = (F(-2), F(0), F(1, 2), F(3))
        cfg = InscribedConfig(F(1), us,
                              tuple(ThroughPoint(Point(F(1, 10), F(1, 10)))
                                    for _ in range(4)), 1, 2)
        with pytest.raises(InvariantViolation):
            inscribed_opposite_side_check(cfg)

    def test_pentagon_common_point(self):
        us = (F(-3), F(-1, 2), F(1, 4), F(1), F(5))
        pts = [circle_point(u, F(2)) for u in us]
        pivot = Point(sum(p.x for p in pts) / 5, sum(p.y for p in pts) / 5)
        cfg = InscribedConfig(F(2), us, tuple(ThroughPoint(pivot) for _ in us), 2, 1)
        report = inscribed_opposite_side_check(cfg)
        assert report.lhs == -1
        assert report.rhs_squared == 1
        assert report.holds

    def test_pentagon_independent_lines(self):
        report = inscribed_opposite_side_check(pentagon_config())
        assert report.lhs_squared == report.rhs_squared
        assert report.holds


class TestRotationInvariance:
    def test_rational_rotation_preserves_products(self):
        # Rotation by the rational circle point (3/5, 4/5) acts on the
        # parameter line as u -> (u + 1/2)/(1 - u/2).
        c, s0 = F(3, 5), F(4, 5)
        w = s0 / (1 + c)
        rotation = AffineMap(c, -s0, s0, c, 0, 0)

        def xform(u: F) -> F:
            return (u + w) / (1 - u * w)

        us = (F(-3), F(-1), F(0), F(1, 3), F(1))
        vs = (F(4), F(-5), F(6), F(-7), F(5, 3))
        cfg = InscribedConfig(F(1), us, tuple(SecondParam(v) for v in vs), 2, 1)
        for u in us + vs:
            assert circle_point(xform(u), 1) == \
                affine_apply(rotation, circle_point(u, 1))

        new_us = [xform(u) for u in us]
        new_vs = [xform(v) for v in vs]
        shift = new_us.index(min(new_us))
        rotated = InscribedConfig(
            F(1), tuple(new_us[shift:] + new_us[:shift]),
            tuple(SecondParam(v) for v in new_vs[shift:] + new_vs[:shift]),
            2, 1)

        lhs, _ = inscribed_side_product(cfg)
        lhs_rot, _ = inscribed_side_product(rotated)
        assert lhs == lhs_rot
        assert inscribed_chord_product_squared(cfg) == \
            inscribed_chord_product_squared(rotated)


class TestIdentityReport:
    def test_report_fields_consistent(self):
        report = inscribed_identity_report(pentagon_config())
        assert report.lhs_squared == report.lhs ** 2
        assert report.holds == (report.lhs_squared == report.rhs_squared)
        assert len(report.m_prime_points) == 5
        assert report.m_prime_points == second_points(pentagon_config())

    def test_second_points_on_circle(self):
        for p in second_points(pentagon_config()):
            assert p.x ** 2 + p.y ** 2 == 1

    def test_vertex_lines_contain_vertices(self):
        cfg = pentagon_config()
        for i, line in enumerate(vertex_lines(cfg), start=1):
            assert line.contains(cfg.vertex(i))
