from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oscpoly.exact import (
    G,
    GScalar,
    MomentProductError,
    MomentValue,
    NotDivisibleError,
    XPoly,
    _conv,
    gscalar_eval,
    gscalar_from_json,
    gscalar_pochhammer,
    gscalar_to_json,
    moment_from_json,
    moment_to_json,
    xpoly_derivative,
    xpoly_divide_by_x,
    xpoly_eval,
    xpoly_from_json,
    xpoly_substitute_eta_to_x2,
    xpoly_to_json,
)

from strategies import gscalars, half, int_vectors, rationals, xpolys


def naive_conv(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


@given(int_vectors, int_vectors)
def test_kronecker_product_matches_schoolbook(a, b):
    assert _conv(a, b) == naive_conv(a, b)


def test_gscalar_canonical_form():
    assert GScalar([1, 0, 0]).coeffs == (1,)
    assert GScalar([0, 0]).coeffs == ()
    assert GScalar([0, 0]).degree is None
    assert GScalar(["2/4", "-3/6"]) == GScalar([half, -half])
    assert GScalar(["1/3"]).coeffs[0].denominator == 3


@pytest.mark.parametrize("start,k,expected", [
    (G, 0, GScalar([1])),
    (G, 2, GScalar([0, 1, 1])),
    (G + half, 2, GScalar(["3/4", 2, 1])),
])
def test_pochhammer(start, k, expected):
    assert gscalar_pochhammer(start, k) == expected


def test_eval_examples():
    s = GScalar([0, 1, 1])
    assert gscalar_eval(s, 0) == 0
    assert gscalar_eval(s, Fraction(3, 2)) == Fraction(15, 4)
    assert xpoly_eval(XPoly([-2, 0, 4]), Fraction(7), Fraction(1)) == 2


@pytest.mark.parametrize("p,expected", [
    (XPoly([1]), XPoly()),
    (XPoly([-2, 0, 4]), XPoly([0, 8])),
    (XPoly([0, -12, 0, 8]), XPoly([-12, 0, 24])),
])
def test_derivative(p, expected):
    assert xpoly_derivative(p) == expected


def test_divide_by_x():
    assert xpoly_divide_by_x(XPoly([0, 2])) == XPoly([2])
    assert xpoly_divide_by_x(XPoly([0, -12, 0, 8])) == XPoly([-12, 0, 8])
    with pytest.raises(NotDivisibleError, match="not divisible by x"):
        xpoly_divide_by_x(XPoly([1]))


def test_substitute_eta():
    assert xpoly_substitute_eta_to_x2(XPoly([1])) == XPoly([1])
    lag1 = XPoly([G + half, -1])
    assert xpoly_substitute_eta_to_x2(lag1) == XPoly([G + half, 0, -1])
    assert xpoly_substitute_eta_to_x2(XPoly([0, 0, 1])) == XPoly.monomial(4)


def test_zero_degree_is_none():
    assert XPoly().degree is None
    assert XPoly([0, 0]).is_zero()


@given(gscalars, gscalars, gscalars)
def test_gscalar_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == GScalar()
    assert a - b == -(b - a)


@given(gscalars, gscalars, rationals)
def test_gscalar_eval_is_homomorphism(a, b, t):
    assert (a * b).eval(t) == a.eval(t) * b.eval(t)
    assert (a + b).eval(t) == a.eval(t) + b.eval(t)


@given(gscalars, gscalars)
def test_exact_division(a, b):
    if b.is_zero():
        return
    assert (a * b).exact_div(b) == a
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


@settings(max_examples=60)
@given(xpolys, xpolys, xpolys)
def test_xpoly_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == XPoly()


@settings(max_examples=60)
@given(xpolys, xpolys)
def test_leibniz_rule(p, q):
    d = xpoly_derivative
    assert d(p * q) == d(p) * q + p * d(q)


@given(xpolys)
def test_divide_after_multiply_by_x(p):
    assert xpoly_divide_by_x(p.shift(1)) == p


@settings(max_examples=60)
@given(xpolys, xpolys)
def test_eta_substitution_is_ring_homomorphism(p, q):
    sub = xpoly_substitute_eta_to_x2
    assert sub(p * q) == sub(p) * sub(q)
    assert sub(p + q) == sub(p) + sub(q)


moments_st = st.builds(MomentValue, gscalars, gscalars, gscalars)


@given(moments_st, moments_st, moments_st)
def test_moment_addition(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)


@given(moments_st, gscalars)
def test_moment_scaling_by_unit_value(m, s):
    assert m * MomentValue(one=s) == m.scale(s)
    assert MomentValue(one=s) * m == m.scale(s)


def test_moment_product_rejected():
    root_pi = MomentValue(sqrt_pi=1)
    gamma = MomentValue(gamma_g_half=G)
    with pytest.raises(MomentProductError):
        root_pi * gamma
    with pytest.raises(MomentProductError):
        gamma * gamma


def test_json_forms():
    assert gscalar_to_json(GScalar(["1/2", 1])) == ["1/2", "1"]
    assert gscalar_to_json(GScalar()) == ["0"]
    assert xpoly_to_json(XPoly([G + half, 0, -1])) == [["1/2", "1"], ["0"], ["-1"]]
    assert xpoly_from_json([[-2], [0], [4]]) == XPoly([-2, 0, 4])
    mv = MomentValue(one=1, sqrt_pi=GScalar(["1/2"]), gamma_g_half=G + half)
    assert moment_to_json(mv) == {"one": ["1"], "sqrt_pi": ["1/2"], "gamma_g_half": ["1/2", "1"]}
    with pytest.raises(ValueError):
        gscalar_from_json("1/2")


@given(xpolys)
def test_xpoly_json_round_trip(p):
    assert xpoly_from_json(xpoly_to_json(p)) == p


@given(moments_st)
def test_moment_json_round_trip(m):
    assert moment_from_json(moment_to_json(m)) == m
