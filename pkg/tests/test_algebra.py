"""Exact polynomial / rational-function / series arithmetic and rewriting."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gaugedgw.algebra import (
    BinomialPresentation,
    BinomialRelation,
    MultiPoly,
    RationalFunction,
    TruncatedSeries,
    normal_form,
    normal_form_monomial,
    poly_arith,
    series_arith,
)
from gaugedgw.errors import ArityMismatchError, RewriteFuelError


def var(name):
    return MultiPoly.variable(name)


class TestMultiPoly:
    def test_square_of_variable(self):
        beta = var("beta")
        assert poly_arith(beta, beta, "mul") == MultiPoly(("beta",), {(2,): 1})

    def test_difference_of_squares(self):
        beta, zeta = var("beta"), var("zeta")
        assert (beta + zeta) * (beta - zeta) == beta * beta - zeta * zeta

    def test_additive_identity(self):
        p = var("beta") * 3 + 7
        assert poly_arith(MultiPoly.zero(), p, "add") == p

    def test_variable_union_alignment(self):
        p = var("a") + 1
        q = var("c") * var("a")
        assert (p + q).variables == ("a", "c")

    def test_substitute_expands_exactly(self):
        beta = var("beta")
        p = (1 - var("Linv")) ** 3
        assert p.substitute("Linv", 1 - beta) == beta**3

    def test_evaluate(self):
        p = var("x") ** 2 + var("y").scale(Fraction(1, 2))
        assert p.evaluate({"x": 3, "y": 4}) == 11

    def test_canonical_text(self):
        q = var("q")
        p = MultiPoly.constant(1) - q.scale(Fraction(1, 2)) + (q * q).scale(3)
        assert p.to_text() == "1 - 1/2*q + 3*q^2"

    def test_zero_text(self):
        assert MultiPoly.zero(("q",)).to_text() == "0"

    def test_negative_leading_term_text(self):
        p = -var("x") + 1
        assert p.to_text() == "1 - x"


coeffs = st.integers(-4, 4).map(Fraction)
exponents = st.tuples(st.integers(0, 3), st.integers(0, 3))


@st.composite
def polys(draw):
    terms = draw(st.dictionaries(exponents, coeffs, max_size=4))
    return MultiPoly(("x", "y"), terms)


class TestRingAxioms:
    @given(polys(), polys(), polys())
    @settings(max_examples=150, deadline=None)
    def test_add_associative_commutative(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a

    @given(polys(), polys(), polys())
    @settings(max_examples=150, deadline=None)
    def test_mul_properties(self, a, b, c):
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


class TestRationalFunction:
    def test_equality_by_cross_multiplication(self):
        x = var("x")
        a = RationalFunction(x * x - 1, x - 1)
        b = RationalFunction((x + 1) * (x + 2), x + 2)
        assert a == b

    @given(polys(), polys(), polys())
    @settings(max_examples=100, deadline=None)
    def test_scaling_invariance_of_equality(self, n, d, s):
        if d.is_zero() or s.is_zero():
            return
        a = RationalFunction(n, d)
        b = RationalFunction(n * s, d * s)
        assert a == b and b == a

    @given(polys(), polys(), polys(), polys())
    @settings(max_examples=100, deadline=None)
    def test_equality_is_an_equivalence_relation(self, n, d, s1, s2):
        if d.is_zero() or s1.is_zero() or s2.is_zero():
            return
        a = RationalFunction(n, d)
        b = RationalFunction(n * s1, d * s1)
        c = RationalFunction(n * s2, d * s2)
        assert a == a
        assert (a == b) == (b == a)
        if a == b and b == c:
            assert a == c

    @given(polys(), polys())
    @settings(max_examples=100, deadline=None)
    def test_sub_self_is_zero(self, n, d):
        if d.is_zero():
            return
        a = RationalFunction(n, d)
        assert (a - a).is_zero()

    def test_denominator_normalization_is_deterministic(self):
        x = var("x")
        a = RationalFunction(MultiPoly.constant(2), (x - 1).scale(-2))
        assert a.to_text() == "(1)/(1 - x)"

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            RationalFunction(var("x"), MultiPoly.zero())

    def test_power_and_inverse(self):
        x = var("x")
        a = RationalFunction(x, x + 1)
        assert a ** (-2) == RationalFunction((x + 1) ** 2, x * x)

    def test_evaluate(self):
        x = var("x")
        a = RationalFunction(x + 1, x - 1)
        assert a.evaluate({"x": 3}) == 2
        with pytest.raises(ZeroDivisionError):
            a.evaluate({"x": 1})


def geometric(depth, truncation):
    return TruncatedSeries(
        ("q",), truncation, {(d,): Fraction(1) for d in range(depth + 1)}
    )


class TestTruncatedSeries:
    def test_one_minus_q_squared(self):
        one_plus = TruncatedSeries(("q",), 2, {(0,): 1, (1,): 1})
        one_minus = TruncatedSeries(("q",), 2, {(0,): 1, (1,): -1})
        product = series_arith(one_plus, one_minus, "mul")
        assert product == TruncatedSeries(("q",), 2, {(0,): 1, (2,): -1})

    def test_geometric_telescoping_matches_direct_convolution(self):
        depth = 5
        geo = geometric(depth, depth)
        one_minus = TruncatedSeries(("q",), depth, {(0,): 1, (1,): -1})
        # independent oracle: convolve the coefficient sequences by hand
        a = [Fraction(1)] * (depth + 1)
        b = [Fraction(1), Fraction(-1)] + [Fraction(0)] * (depth - 1)
        expected = {}
        for d in range(depth + 1):
            total = sum(a[i] * b[d - i] for i in range(d + 1))
            if total:
                expected[(d,)] = total
        assert geo * one_minus == TruncatedSeries(("q",), depth, expected)
        assert geo * one_minus == TruncatedSeries(("q",), depth, {(0,): 1})

    def test_multiplying_by_zero(self):
        s = geometric(3, 3)
        assert (s * TruncatedSeries.zero(("q",), 3)).is_zero()

    def test_min_truncation_rule(self):
        a = geometric(5, 5)
        b = geometric(2, 2)
        assert (a + b).truncation == 2
        assert (a * b).truncation == 2

    def test_arity_mismatch(self):
        a = TruncatedSeries(("q",), 2, {(1,): 1})
        b = TruncatedSeries(("q1", "q2"), 2, {(1, 0): 1})
        with pytest.raises(ArityMismatchError):
            a + b

    def test_multidegree_text(self):
        s = TruncatedSeries(("q1", "q2"), 3, {(0, 0): 1, (1, 2): Fraction(-1, 3)})
        assert s.to_text() == "1 - 1/3*q1*q2^2"


@st.composite
def series(draw):
    coeff_map = draw(
        st.dictionaries(st.tuples(st.integers(0, 3)), coeffs, max_size=4)
    )
    return TruncatedSeries(("q",), 3, coeff_map)


class TestSeriesRingAxioms:
    @given(series(), series(), series())
    @settings(max_examples=80, deadline=None)
    def test_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def beta_power_presentation(k):
    return BinomialPresentation(
        generators=("beta", "q"),
        relations=(BinomialRelation(Fraction(1), (k, 0), Fraction(1), (0, 1)),),
    )


class TestNormalForm:
    def test_beta_k_reduces_to_q(self):
        pres = beta_power_presentation(4)
        assert normal_form_monomial(1, (4, 0), pres) == MultiPoly(
            ("beta", "q"), {(0, 1): 1}
        )

    def test_below_threshold_untouched(self):
        pres = beta_power_presentation(4)
        assert normal_form_monomial(1, (3, 0), pres) == MultiPoly(
            ("beta", "q"), {(3, 0): 1}
        )

    def test_repeated_reduction_cross_checked_by_evaluation(self):
        k = 3
        pres = beta_power_presentation(k)
        reduced = normal_form_monomial(1, (2 * k + 1, 0), pres)
        assert reduced == MultiPoly(("beta", "q"), {(1, 2): 1})
        # evaluation oracle at beta = 2, q = 2^k
        point = {"beta": Fraction(2), "q": Fraction(2) ** k}
        original = MultiPoly(("beta", "q"), {(2 * k + 1, 0): 1})
        assert original.evaluate(point) == reduced.evaluate(point)

    def test_idempotent(self):
        pres = beta_power_presentation(3)
        first = normal_form_monomial(5, (8, 1), pres)
        assert normal_form(first, pres) == first

    @given(st.integers(0, 30), st.integers(1, 9), st.integers(-5, 5))
    @settings(max_examples=80, deadline=None)
    def test_evaluation_agrees_at_compatible_points(self, exponent, denom, numer):
        if numer == 0:
            return
        k = 3
        pres = beta_power_presentation(k)
        t = Fraction(numer, denom)
        point = {"beta": t, "q": t**k}
        original = MultiPoly(("beta", "q"), {(exponent, 0): 1})
        reduced = normal_form(original, pres)
        assert original.evaluate(point) == reduced.evaluate(point)

    def test_fuel_exhaustion_on_nonterminating_presentation(self):
        pres = BinomialPresentation(
            generators=("x",),
            relations=(BinomialRelation(Fraction(1), (1,), Fraction(1), (2,)),),
        )
        with pytest.raises(RewriteFuelError):
            normal_form_monomial(1, (1,), pres)

    def test_coefficient_scaling_through_relations(self):
        pres = BinomialPresentation(
            generators=("x", "y"),
            relations=(BinomialRelation(Fraction(2), (1, 0), Fraction(3), (0, 1)),),
        )
        # 2x = 3y orients x -> (3/2) y
        assert normal_form_monomial(4, (1, 0), pres) == MultiPoly(
            ("x", "y"), {(0, 1): 6}
        )
