"""Ring arithmetic, composition, and metrics of the sparse polynomial core."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from openquadrant.catalog import build_F, build_G, build_GF, build_H, build_f, build_g_old
from openquadrant.polynomials import (
    Poly,
    PolyMap,
    map_compose,
    map_metrics,
    monomial_count,
    poly_add,
    poly_compose,
    poly_eval,
    poly_eval_float,
    poly_mul,
    total_degree,
)

X = Poly.variable(2, 0)
Y = Poly.variable(2, 1)


def coeffs():
    return st.fractions(
        min_value=-50, max_value=50, max_denominator=20
    ).filter(lambda c: c != 0)


def polys(arity=2, max_exp=4, max_terms=6):
    exps = st.tuples(*(st.integers(0, max_exp) for _ in range(arity)))
    return st.dictionaries(exps, coeffs(), max_size=max_terms).map(
        lambda d: Poly(arity, d)
    )


def points(arity=2):
    return st.tuples(
        *(st.fractions(min_value=-9, max_value=9, max_denominator=12) for _ in range(arity))
    )


class TestArithmetic:
    def test_add_merges_terms(self):
        p = X ** 2 * Y ** 2 - 2 * X * Y + 1
        assert p + X ** 2 == (X * Y - 1) ** 2 + X ** 2  # first component of F

    def test_additive_inverse_gives_zero(self):
        p = 3 * X ** 2 * Y - Y + Fraction(1, 2)
        assert (p + (-p)).is_zero()

    def test_coefficient_merge(self):
        assert X * Y + X * Y == 2 * X * Y

    def test_arity_mismatch_rejected(self):
        with pytest.raises(ValueError):
            poly_add(X, Poly.variable(3, 0))
        with pytest.raises(ValueError):
            poly_mul(X, Poly.variable(1, 0))

    def test_square_of_binomial(self):
        assert (X * Y - 1) ** 2 == X ** 2 * Y ** 2 - 2 * X * Y + 1

    def test_multiply_by_zero(self):
        assert poly_mul(X * Y - 1, Poly.zero(2)).is_zero()

    def test_hand_expansion_of_fiber_product(self):
        # (xy-2)^2 * y, cross-checked by hand against the expanded G fiber
        assert (X * Y - 2) ** 2 * Y == X ** 2 * Y ** 3 - 4 * X * Y ** 2 + 4 * Y

    @given(p=polys(), q=polys())
    def test_commutativity(self, p, q):
        assert p + q == q + p
        assert p * q == q * p

    @given(p=polys(), q=polys(), r=polys())
    def test_associativity_and_distributivity(self, p, q, r):
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r

    @given(p=polys(), q=polys())
    def test_degree_of_product_adds(self, p, q):
        if p.is_zero() or q.is_zero():
            assert (p * q).is_zero()
        else:
            assert total_degree(p * q) == total_degree(p) + total_degree(q)

    @given(p=polys(), q=polys(), r=polys())
    def test_no_zero_coefficients_stored(self, p, q, r):
        for result in (p + q, p * q, p - p, (p + q) * r):
            assert all(c != 0 for c in result.terms.values())

    @given(p=polys())
    def test_canonical_order_is_graded_lex_descending(self, p):
        keys = [(sum(e), e) for e in p.terms]
        assert keys == sorted(keys, reverse=True)


class TestEvaluation:
    def test_first_component_of_F_at_unit_point(self):
        f1 = build_F().components[0]
        assert poly_eval(f1, (1, 1)) == 1

    def test_first_component_of_F_at_origin(self):
        f1 = build_F().components[0]
        assert poly_eval(f1, (0, 0)) == 1

    def test_g1_constant_term(self):
        g1 = build_g_old().components[0]
        assert poly_eval(g1, (0, 0)) == 85

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            poly_eval(X, (1, 2, 3))

    @given(p=polys(max_exp=3, max_terms=4), pt=points())
    def test_float_variant_tracks_exact_value(self, p, pt):
        exact = float(poly_eval(p, pt))
        approx = poly_eval_float(p, [float(v) for v in pt])
        assert approx == pytest.approx(exact, rel=1e-9, abs=1e-9)


class TestComposition:
    def test_projection_composes_to_component(self):
        F = build_F()
        assert poly_compose(X, F.components) == F.components[0]

    def test_simple_substitution(self):
        outer = X * Y
        inner = [X + 1, Y]
        assert poly_compose(outer, inner) == X * Y + Y

    def test_G2_after_F_degree_and_random_point_oracle(self):
        F = build_F()
        g2 = build_G().components[1]
        composed = poly_compose(g2, F.components)
        assert total_degree(composed) == 20
        # oracle: substitution agrees with evaluate-then-evaluate, exactly
        from openquadrant.rng import SplitMix64

        rng = SplitMix64(3)
        for _ in range(50):
            p = (rng.next_positive_rational(60) - 3, rng.next_positive_rational(60) - 3)
            assert composed.evaluate(p) == g2.evaluate(F.evaluate(p))

    def test_map_compose_identity(self):
        F = build_F()
        identity = PolyMap([X, Y])
        assert map_compose(identity, F) == F

    def test_full_composition_degrees(self):
        f = map_compose(build_H(), map_compose(build_G(), build_F()))
        assert [total_degree(c) for c in f.components] == [52, 20]
        assert map_metrics(f).total_degree == 72

    def test_compose_evaluates_at_origin(self):
        GF = map_compose(build_G(), build_F())
        assert GF.evaluate((0, 0)) == build_G().evaluate((1, 1)) == (1, 1)

    def test_arity_mismatch_rejected(self):
        with pytest.raises(ValueError):
            map_compose(build_F(), PolyMap([Poly.variable(2, 0)]))
        with pytest.raises(ValueError):
            poly_compose(X * Y, [X])

    @settings(max_examples=100)
    @given(g=polys(max_exp=2, max_terms=3), f1=polys(max_exp=2, max_terms=3),
           f2=polys(max_exp=2, max_terms=3), pt=points())
    def test_composition_evaluation_commutes(self, g, f1, f2, pt):
        composed = poly_compose(g, [f1, f2])
        assert composed.evaluate(pt) == g.evaluate((f1.evaluate(pt), f2.evaluate(pt)))


class TestMetrics:
    def test_degree_examples(self):
        assert total_degree(build_F().components[0]) == 4
        g1, g2 = build_g_old().components
        assert total_degree(g1) == 28
        assert total_degree(g2) == 28

    def test_degree_of_zero_polynomial_is_zero(self):
        assert total_degree(Poly.zero(2)) == 0

    def test_monomial_count_examples(self):
        assert monomial_count(build_F().components[0]) == 4
        assert monomial_count(build_G().components[1]) == 6
        g = build_g_old()
        assert sum(monomial_count(c) for c in g.components) == 168

    def test_map_metrics_of_g(self):
        m = map_metrics(build_g_old())
        assert m.total_degree == 56
        assert m.total_monomials == 168

    def test_map_metrics_of_f(self):
        m = map_metrics(build_f())
        assert m.total_degree == 72
        assert m.total_monomials == 350

    def test_map_metrics_of_F(self):
        m = map_metrics(build_F())
        assert m.total_degree == 8
        assert m.total_monomials == 8
        assert m.component_degrees == (4, 4)

    def test_gf_metrics_are_interior_results(self):
        m = map_metrics(build_GF())
        assert m.component_degrees == (4, 20)


class TestValueSemantics:
    def test_poly_is_immutable(self):
        p = X * Y
        with pytest.raises(AttributeError):
            p.arity = 3

    def test_polymap_is_immutable(self):
        F = build_F()
        with pytest.raises(AttributeError):
            F.components = ()

    def test_power_edge_cases(self):
        assert X ** 0 == Poly.constant(2, 1)
        assert X ** 1 == X
        with pytest.raises(ValueError):
            X ** -1

    def test_zero_arity_rejected(self):
        with pytest.raises(ValueError):
            Poly(0, {})

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            Poly(2, {(-1, 0): 1})

    def test_str_rendering(self):
        p = X ** 2 * Y ** 3 - 4 * X * Y ** 2 + 4 * Y
        assert str(p) == "x^2*y^3 - 4*x*y^2 + 4*y"
        assert str(Poly.zero(2)) == "0"
        assert str(Poly.constant(2, Fraction(-1, 2))) == "-1/2"

    def test_incompatible_operand_rejected(self):
        with pytest.raises(TypeError):
            X + "y"  # type: ignore[operator]
