from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from isored.errors import (
    DivisionByZeroFunction,
    NonSplittingDenominator,
    NotProper,
    ZeroDenominator,
    ZeroPolynomial,
)
from isored.ratfun import (
    LAMBDA,
    ONE,
    ZERO,
    PartialFractionForm,
    Polynomial,
    RationalFunction,
    is_squarefree,
    partial_fractions,
    poly_from_json,
    poly_gcd,
    poly_to_json,
    rational_roots,
    rf_add,
    rf_from_json,
    rf_inv,
    rf_mul,
    rf_normalize,
    rf_to_json,
    series_at_infinity,
)

lam = LAMBDA
P = Polynomial


def test_poly_gcd_examples():
    assert poly_gcd(P([-1, 0, 1]), P([-1, 1])) == P([-1, 1])
    assert poly_gcd(P([0, 1]), ONE) == ONE
    assert poly_gcd(P([0, 0, -1, 1]), P([0, -1, 1])) == P([0, -1, 1])
    assert poly_gcd(ZERO, ZERO) == ZERO


def test_poly_gcd_is_monic():
    assert poly_gcd(P([2, 2]), P([4, 4])) == P([1, 1])


def test_normalize_examples():
    f = rf_normalize(P([-1, 0, 1]), P([-2, 2]))
    assert f.num == P([F(1, 2), F(1, 2)]) and f.den == ONE
    z = rf_normalize(ZERO, P([0, 0, 0, 1]))
    assert z.num == ZERO and z.den == ONE
    one = rf_normalize(P([0, 1]), P([0, 1]))
    assert one.num == ONE and one.den == ONE


def test_zero_denominator():
    with pytest.raises(ZeroDenominator):
        rf_normalize(ONE, ZERO)


def test_field_ops_examples():
    assert rf_add(1 / lam, RationalFunction.constant(1)) == RationalFunction(P([1, 1]), P([0, 1]))
    assert rf_mul(1 / lam, lam) == 1
    f = RationalFunction(P([-1, 1]), P([0, 0, 1]))
    g = rf_inv(f)
    assert g == RationalFunction(P([0, 0, 1]), P([-1, 1]))
    assert not g.in_W()
    with pytest.raises(DivisionByZeroFunction):
        rf_inv(RationalFunction())


def test_series_examples():
    assert series_at_infinity(1 / lam, 3) == [0, 1, 0, 0]
    assert series_at_infinity(1 / (lam - 1), 3) == [0, 1, 1, 1]
    assert series_at_infinity((lam + 1) / lam, 2) == [1, 1, 0]
    with pytest.raises(NotProper):
        series_at_infinity(lam, 2)


def test_partial_fractions_figure5_entry():
    form = partial_fractions(1 / (lam**3 - lam**2))
    assert form.constant == 0
    assert set(form.terms) == {(F(1), 1, F(1)), (F(0), 2, F(-1)), (F(0), 1, F(-1))}


def test_partial_fractions_constant_and_nonsplitting():
    assert partial_fractions(RationalFunction.constant(1)) == PartialFractionForm(F(1), ())
    with pytest.raises(NonSplittingDenominator) as exc:
        partial_fractions(1 / (lam**2 + 1))
    assert exc.value.factor == P([1, 0, 1])


def test_partial_fractions_against_sympy():
    x = sympy.Symbol("x")
    f = (3 * lam**2 - lam + F(1, 2)) / ((lam - F(1, 3)) ** 2 * (lam + 2) * lam)
    form = partial_fractions(f)
    expr = sum(
        sympy.Rational(c.numerator, c.denominator) / (x - sympy.Rational(r.numerator, r.denominator)) ** k
        for r, k, c in form.terms
    )
    target = (3 * x**2 - x + sympy.Rational(1, 2)) / ((x - sympy.Rational(1, 3)) ** 2 * (x + 2) * x)
    assert sympy.simplify(expr - target) == 0
    assert sympy.simplify(sympy.apart(target, x) - expr) == 0


def test_squarefree_examples():
    assert is_squarefree(P([-1, 0, 1]))
    assert not is_squarefree(P([0, 0, 1]))
    assert not is_squarefree(P([0, 0, -1, 1]))
    with pytest.raises(ZeroPolynomial):
        is_squarefree(ZERO)


def test_rational_roots():
    p = Polynomial.from_roots([F(1, 2), F(1, 2), -3, 0]) * P([1, 0, 1])
    roots, rest = rational_roots(p)
    assert roots == [(F(-3), 1), (F(0), 1), (F(1, 2), 2)]
    assert rest == P([1, 0, 1])


def test_poly_rendering():
    assert str(P([-1, 0, 1])) == "λ^2 - 1"
    assert str(P([0, 2, 0, -1])) == "-λ^3 + 2λ"
    assert str(P([F(1, 2), 1])) == "λ + 1/2"
    assert str(ZERO) == "0"
    assert str((lam + 1) / lam) == "(λ + 1)/λ"


def test_json_roundtrip():
    f = (F(3, 2) * lam - 1) / (lam**2 - F(1, 4))
    assert rf_from_json(rf_to_json(f)) == f
    assert poly_to_json(P([F(-1, 2), 0, 3])) == ["-1/2", "0", "3"]
    assert poly_from_json(["-1/2", "0", "3"]) == P([F(-1, 2), 0, 3])


# property tests

small_q = st.fractions(min_value=-3, max_value=3, max_denominator=3)
polys = st.lists(small_q, min_size=0, max_size=4).map(Polynomial)
nonzero_polys = polys.filter(lambda p: not p.is_zero())
rfs = st.builds(RationalFunction, polys, nonzero_polys)
roots = st.fractions(min_value=-2, max_value=2, max_denominator=2)


@settings(max_examples=60, deadline=None)
@given(rfs, rfs, rfs)
def test_field_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + g == g + f and f * g == g * f
    assert f - f == 0
    if f:
        assert f * f.inverse() == 1


@settings(max_examples=60, deadline=None)
@given(polys, nonzero_polys)
def test_normal_form(p, q):
    f = rf_normalize(p, q)
    assert poly_gcd(f.num, f.den).degree <= 0
    assert f.den.lc == 1
    assert f.num * q == p * f.den


@settings(max_examples=60, deadline=None)
@given(st.lists(roots, min_size=0, max_size=4), polys, st.integers(0, 16))
def test_series_additive(rs, num, K):
    den = Polynomial.from_roots(rs)
    f = RationalFunction(num, den)
    if not f.in_W():
        return
    g = 1 / (lam - 1) + RationalFunction.constant(F(1, 3))
    assert series_at_infinity(f + g, K) == [a + b for a, b in zip(series_at_infinity(f, K), series_at_infinity(g, K))]


@settings(max_examples=60, deadline=None)
@given(st.lists(roots, min_size=1, max_size=5), st.lists(small_q, min_size=0, max_size=5))
def test_partial_fraction_roundtrip(rs, coeffs):
    den = Polynomial.from_roots(rs)
    num = Polynomial(coeffs[: den.degree + 1])
    f = rf_normalize(num, den)
    form = partial_fractions(f)
    assert form.recombine() == f
    keys = [(r, k) for r, k, _ in form.terms]
    assert len(keys) == len(set(keys))
