"""Exact half-line and full-line inner products, Gram matrices and the auxiliary identities."""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache
from math import comb

from .classical import fact, hermite, laguerre_radial
from .exact import G, ONE, GScalar, MomentValue, XPoly, gscalar_pochhammer
from .report import VerifyReport
from .transforms import Route, laguerre_from_hermite_even

HALF = Fraction(1, 2)
G_HALF = G + HALF


class WeightTag(enum.Enum):
    GAUSS_HALFLINE = "gauss-halfline"  # exp(-x^2) on (0, inf)
    GAUSS_FULLLINE = "gauss-fullline"  # exp(-x^2) on R
    WEIGHTED_G = "weighted-g"  # x^(2g) exp(-x^2) on (0, inf)


class UnsupportedMomentError(ValueError):
    """An odd moment was requested under the x^(2g) weight."""


@lru_cache(maxsize=None)
def _poch_g_half(k: int) -> GScalar:
    return gscalar_pochhammer(G_HALF, k)


def _half_gaussian_even(k: int) -> Fraction:
    # Gamma(k + 1/2) / sqrt(pi) = (2k)! / (4^k k!)
    return Fraction(fact(2 * k), 4 ** k * fact(k))


@lru_cache(maxsize=None)
def moment(weight: WeightTag, j: int) -> MomentValue:
    """Integral of x^j against the given weight."""
    if j < 0:
        raise ValueError(f"moment index must be nonnegative, got {j}")
    k, odd = divmod(j, 2)
    if weight is WeightTag.WEIGHTED_G:
        if odd:
            raise UnsupportedMomentError(f"odd moment x^{j} is not supported under the x^(2g) weight")
        return MomentValue(gamma_g_half=_poch_g_half(k) * HALF)
    if weight is WeightTag.GAUSS_HALFLINE:
        if odd:
            return MomentValue(one=Fraction(fact(k), 2))
        return MomentValue(sqrt_pi=_half_gaussian_even(k) * HALF)
    if odd:
        return MomentValue()
    return MomentValue(sqrt_pi=_half_gaussian_even(k))


def inner_product(p: XPoly, q: XPoly, weight: WeightTag) -> MomentValue:
    """(p, q) under ``weight``; coefficients are real so no conjugation is needed."""
    r = p * q
    if weight is WeightTag.WEIGHTED_G and not r.is_even():
        raise UnsupportedMomentError("integrand has odd powers of x under the x^(2g) weight")
    total = MomentValue()
    for j, c in enumerate(r.coeffs):
        if not c.is_zero():
            total = total + moment(weight, j).scale(c)
    return total


def _gram(polys: list[XPoly], weight: WeightTag) -> list[list[MomentValue]]:
    return [[inner_product(p, q, weight) for q in polys] for p in polys]


def gram_radial(max_n: int) -> list[list[MomentValue]]:
    return _gram([laguerre_radial(n) for n in range(max_n + 1)], WeightTag.WEIGHTED_G)


def gram_F(max_n: int) -> list[list[MomentValue]]:
    polys = [laguerre_from_hermite_even(n, Route.DIRECT_SUM) for n in range(max_n + 1)]
    return _gram(polys, WeightTag.WEIGHTED_G)


def gram_hermite_halfline(parity: str, max_n: int) -> list[list[MomentValue]]:
    if parity not in ("even", "odd"):
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    off = 0 if parity == "even" else 1
    return _gram([hermite(2 * n + off) for n in range(max_n + 1)], WeightTag.GAUSS_HALFLINE)


def gram_hermite_fullline(max_n: int) -> list[list[MomentValue]]:
    return _gram([hermite(n) for n in range(max_n + 1)], WeightTag.GAUSS_FULLLINE)


# -- closed forms for the Gram diagonals -----------------------------------

def radial_norm(n: int) -> MomentValue:
    """Gamma(n+g+1/2) / (2 n!) written as (g+1/2)_n Gamma(g+1/2) / (2 n!)."""
    return MomentValue(gamma_g_half=_poch_g_half(n) * Fraction(1, 2 * fact(n)))


def F_norm(n: int) -> MomentValue:
    return MomentValue(gamma_g_half=_poch_g_half(n) * Fraction(fact(n), 2))


def hermite_halfline_norm(parity: str, n: int) -> MomentValue:
    if parity == "even":
        return MomentValue(sqrt_pi=Fraction(2 ** (2 * n) * fact(2 * n), 2))
    return MomentValue(sqrt_pi=2 ** (2 * n) * fact(2 * n + 1))


def hermite_fullline_norm(n: int) -> MomentValue:
    return MomentValue(sqrt_pi=2 ** n * fact(n))


def expected_diagonal(norms: list[MomentValue]) -> list[list[MomentValue]]:
    size = len(norms)
    return [[norms[m] if m == n else MomentValue() for n in range(size)] for m in range(size)]


# -- identities with a parameter g ----------------------------------------

def id1_sides(n: int) -> tuple[GScalar, GScalar]:
    """sum_{k<=n} (g)_k / k!  and  (g+1)_n / n!."""
    lhs = GScalar()
    poch = ONE
    for k in range(n + 1):
        if k:
            poch = poch * (G + (k - 1))
        lhs = lhs + poch * Fraction(1, fact(k))
    return lhs, gscalar_pochhammer(G + 1, n) * Fraction(1, fact(n))


def id2_sides(m: int, l: int) -> tuple[GScalar, GScalar]:
    """Both sides of the second identity, multiplied through by (g+1/2)_l."""
    lhs = GScalar()
    poch = ONE
    for k in range(m - l + 1):
        if k:
            poch = poch * (G + (k - 1))
        coef = Fraction(comb(m, k) * fact(2 * (m - k)), 4 ** (m - k) * fact(m - k - l))
        lhs = lhs + poch * coef
    rhs = _poch_g_half(m) * Fraction(fact(2 * l) * comb(m, l), 4 ** l)
    return lhs * _poch_g_half(l), rhs


@lru_cache(maxsize=None)
def _id3_inner(n: int, top: int) -> tuple[GScalar, ...]:
    """T(l1) = sum_{l2<=n} (-1)^l2 C(n,l2) (g+1/2)_{l1+l2} / (g+1/2)_{l2} for l1 <= top.

    The ratio of Pochhammer symbols is the polynomial (g+1/2+l2)_{l1}.
    """
    out = [GScalar()] * (top + 1)
    for l2 in range(n + 1):
        c = (-1) ** l2 * comb(n, l2)
        poly = ONE
        for l1 in range(top + 1):
            if l1:
                poly = poly * (G_HALF + (l2 + l1 - 1))
            out[l1] = out[l1] + poly * c
    return tuple(out)


def id3_sides(m: int, n: int) -> tuple[GScalar, GScalar]:
    """Both sides of the third identity, multiplied through by (g+1/2)_m.

    The cleared right side is delta_{mn} n!, since (g+1/2)_m = (g+1/2)_n when m == n.
    """
    inner = _id3_inner(n, m)
    lhs = GScalar()
    for l1 in range(m + 1):
        # (g+1/2)_m / (g+1/2)_{l1}
        ratio = gscalar_pochhammer(G_HALF + l1, m - l1)
        lhs = lhs + inner[l1] * ratio * ((-1) ** l1 * comb(m, l1))
    rhs = GScalar.const(fact(n) if m == n else 0)
    return lhs, rhs


def identity_check(which: str, indices: tuple[int, ...]) -> VerifyReport:
    if which == "id1":
        (n,) = indices
        if n < 0:
            raise IndexError(f"id1 needs n >= 0, got {n}")
        lhs, rhs = id1_sides(n)
    elif which == "id2":
        m, l = indices
        if not 0 <= l <= m:
            raise IndexError(f"id2 needs 0 <= l <= m, got m={m}, l={l}")
        lhs, rhs = id2_sides(m, l)
    elif which == "id3":
        m, n = indices
        if m < 0 or n < 0:
            raise IndexError(f"id3 needs m, n >= 0, got m={m}, n={n}")
        lhs, rhs = id3_sides(m, n)
    else:
        raise ValueError(f"unknown identity {which!r}")
    return VerifyReport.compare(which, indices, rhs, lhs)
