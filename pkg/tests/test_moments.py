from fractions import Fraction
from math import comb

import mpmath
import pytest
from hypothesis import given, settings

from oscpoly.classical import fact, hermite, laguerre_radial
from oscpoly.exact import G, GScalar, MomentValue, XPoly, xpoly_specialize
from oscpoly.moments import (
    UnsupportedMomentError,
    WeightTag,
    gram_F,
    gram_hermite_fullline,
    gram_hermite_halfline,
    gram_radial,
    identity_check,
    inner_product,
    moment,
)
from oscpoly.quadrature import moment_to_float

from strategies import g_free_xpolys, half, xpolys

SQRT_PI_HALF = MomentValue(sqrt_pi=half)
GAMMA_HALF = MomentValue(gamma_g_half=half)
G_POINTS = [Fraction(k, 3) for k in range(1, 12)] + [Fraction(-7, 5), Fraction(0)]


def test_moment_examples():
    assert moment(WeightTag.GAUSS_HALFLINE, 0) == SQRT_PI_HALF
    assert moment(WeightTag.WEIGHTED_G, 0) == GAMMA_HALF
    assert moment(WeightTag.WEIGHTED_G, 2) == MomentValue(gamma_g_half=(G + half) * half)
    assert moment(WeightTag.GAUSS_HALFLINE, 3) == MomentValue(one=half)
    assert moment(WeightTag.GAUSS_FULLLINE, 5) == MomentValue()
    with pytest.raises(UnsupportedMomentError):
        moment(WeightTag.WEIGHTED_G, 1)


@pytest.mark.parametrize("j", range(12))
def test_moments_against_mpmath(j):
    mpmath.mp.dps = 30
    for weight, lo in ((WeightTag.GAUSS_HALFLINE, 0), (WeightTag.GAUSS_FULLLINE, -mpmath.inf)):
        want = mpmath.quad(lambda x: x ** j * mpmath.exp(-x * x), [lo, 0, mpmath.inf] if lo else [0, mpmath.inf])
        got = moment_to_float(moment(weight, j), 0)
        assert abs(got - float(want)) <= 1e-13 * max(1.0, abs(float(want)))
    if j % 2 == 0:
        gval = Fraction(7, 4)
        want = mpmath.quad(lambda x: x ** (2 * gval + j) * mpmath.exp(-x * x), [0, mpmath.inf])
        got = moment_to_float(moment(WeightTag.WEIGHTED_G, j), gval)
        assert abs(got - float(want)) <= 1e-13 * float(want)


def test_inner_product_examples():
    one = XPoly([1])
    assert inner_product(one, one, WeightTag.WEIGHTED_G) == GAMMA_HALF
    assert inner_product(hermite(0), hermite(2), WeightTag.GAUSS_FULLLINE) == MomentValue()
    x = XPoly.monomial(1)
    assert inner_product(x, x, WeightTag.GAUSS_HALFLINE) == MomentValue(sqrt_pi=Fraction(1, 4))
    with pytest.raises(UnsupportedMomentError):
        inner_product(x, one, WeightTag.WEIGHTED_G)


@settings(max_examples=40)
@given(g_free_xpolys, g_free_xpolys, g_free_xpolys)
def test_inner_product_bilinear_and_symmetric(p, q, r):
    for w in (WeightTag.GAUSS_HALFLINE, WeightTag.GAUSS_FULLLINE):
        assert inner_product(p, q, w) == inner_product(q, p, w)
        assert inner_product(p + r, q, w) == inner_product(p, q, w) + inner_product(r, q, w)
        assert inner_product(p * 3, q, w) == inner_product(p, q, w).scale(3)


@settings(max_examples=30)
@given(xpolys, xpolys)
def test_weighted_inner_product_symmetric_on_even_parts(p, q):
    even = lambda s: XPoly([c if j % 2 == 0 else 0 for j, c in enumerate(s.coeffs)])  # noqa: E731
    p, q = even(p), even(q)
    assert inner_product(p, q, WeightTag.WEIGHTED_G) == inner_product(q, p, WeightTag.WEIGHTED_G)
    assert inner_product(p * G, q, WeightTag.WEIGHTED_G) == inner_product(p, q, WeightTag.WEIGHTED_G).scale(G)


def test_gram_radial_examples():
    gram = gram_radial(1)
    assert gram[0][0] == GAMMA_HALF
    assert gram[0][1] == MomentValue() == gram[1][0]
    assert gram[1][1] == MomentValue(gamma_g_half=(G + half) * half)


def test_gram_radial_against_mpmath():
    mpmath.mp.dps = 30
    gval = Fraction(5, 2)
    gram = gram_radial(3)
    for m in range(4):
        for n in range(4):
            pm = [float(c.constant_value()) for c in xpoly_specialize(laguerre_radial(m), gval).coeffs]
            pn = [float(c.constant_value()) for c in xpoly_specialize(laguerre_radial(n), gval).coeffs]
            f = lambda x: (mpmath.polyval(pm[::-1], x) * mpmath.polyval(pn[::-1], x)  # noqa: E731
                           * x ** (2 * gval) * mpmath.exp(-x * x))
            want = float(mpmath.quad(f, [0, 2, 5, mpmath.inf]))
            assert abs(moment_to_float(gram[m][n], gval) - want) <= 1e-12


def test_gram_F_examples():
    gram = gram_F(2)
    assert gram[0][0] == GAMMA_HALF
    assert gram[1][1] == MomentValue(gamma_g_half=(G + half) * half)
    assert gram[2][1] == MomentValue()


def test_gram_hermite_examples():
    even = gram_hermite_halfline("even", 0)
    odd = gram_hermite_halfline("odd", 0)
    full = gram_hermite_fullline(1)
    assert even[0][0] == SQRT_PI_HALF
    assert odd[0][0] == MomentValue(sqrt_pi=1)
    assert full[1][1] == MomentValue(sqrt_pi=2)
    assert full[0][0] == MomentValue(sqrt_pi=1)


def test_halfline_odd_cross_terms_are_not_orthogonal():
    # even and odd Hermite functions are not orthogonal on the half line
    assert not inner_product(hermite(0), hermite(1), WeightTag.GAUSS_HALFLINE).is_zero()


# -- identities, checked against direct evaluation of the original sums ---

def poch(a, k):
    out = Fraction(1)
    for j in range(k):
        out *= a + j
    return out


def id1_oracle(n, g):
    return sum(poch(g, k) / fact(k) for k in range(n + 1)) == poch(g + 1, n) / fact(n)


def id2_oracle(m, l, g):
    lhs = sum(Fraction(comb(m, k) * fact(2 * (m - k)), 4 ** (m - k) * fact(m - k - l)) * poch(g, k)
              for k in range(m - l + 1))
    rhs = Fraction(fact(2 * l), 4 ** l) * comb(m, l) * poch(g + half, m) / poch(g + half, l)
    return lhs == rhs


def id3_oracle(m, n, g):
    h = g + half
    lhs = sum((-1) ** (a + b) * comb(m, a) * comb(n, b) * poch(h, a + b) / (poch(h, a) * poch(h, b))
              for a in range(m + 1) for b in range(n + 1))
    return lhs == (Fraction(fact(n)) / poch(h, n) if m == n else 0)


def test_oracles_hold_at_sample_points():
    for g in G_POINTS:
        assert all(id1_oracle(n, g) for n in range(6))
        assert all(id2_oracle(m, l, g) for m in range(6) for l in range(m + 1))
        assert all(id3_oracle(m, n, g) for m in range(5) for n in range(5))


def test_oracle_is_not_vacuous():
    # swapping the Pochhammer base breaks id2, so the oracle can fail
    g = Fraction(2, 3)
    lhs = sum(Fraction(comb(2, k) * fact(2 * (2 - k)), 4 ** (2 - k) * fact(2 - k)) * poch(g + half, k)
              for k in range(3))
    assert lhs != poch(g + half, 2) and id2_oracle(2, 0, g)


def test_identity_examples():
    assert identity_check("id1", (1,)).passed
    assert identity_check("id1", (1,)).expected == GScalar([1, 1])
    assert identity_check("id2", (3, 3)).passed
    report = identity_check("id3", (0, 1))
    assert report.passed and report.expected == GScalar()
    with pytest.raises(IndexError):
        identity_check("id2", (1, 2))


@pytest.mark.parametrize("m", range(9))
def test_identities_small(m):
    for n in range(9):
        assert identity_check("id3", (m, n)).passed
    for l in range(m + 1):
        assert identity_check("id2", (m, l)).passed
    assert identity_check("id1", (m,)).passed
