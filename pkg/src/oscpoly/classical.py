"""Hermite and Laguerre polynomials with exact coefficients."""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .exact import G, EtaPoly, GScalar, ScalarLike, XPoly, xpoly_substitute_eta_to_x2


class PolyFamilyTag(enum.Enum):
    HERMITE = "hermite"
    LAGUERRE_RADIAL = "laguerre"


class HermiteMismatchError(AssertionError):
    """The explicit-sum and recurrence constructions of H_n disagree."""


@lru_cache(maxsize=None)
def fact(n: int) -> int:
    return factorial(n)


def _check_degree(n: int) -> None:
    if n < 0:
        raise ValueError(f"degree must be nonnegative, got {n}")


def hermite_explicit(n: int) -> XPoly:
    """H_n from n! * sum_k (-1)^k (2x)^(n-2k) / (k! (n-2k)!)."""
    _check_degree(n)
    coeffs = [0] * (n + 1)
    for k in range(n // 2 + 1):
        coeffs[n - 2 * k] = (-1) ** k * fact(n) * 2 ** (n - 2 * k) // (fact(k) * fact(n - 2 * k))
    return XPoly(coeffs)


@lru_cache(maxsize=None)
def _hermite_recurrence_table(n: int) -> tuple[tuple[int, ...], ...]:
    # H_{k+1} = 2x H_k - 2k H_{k-1}, integer coefficient lists
    rows = [(1,)]
    if n >= 1:
        rows.append((0, 2))
    for k in range(1, n):
        prev, cur = rows[k - 1], rows[k]
        nxt = [0] * (k + 2)
        for j, c in enumerate(cur):
            nxt[j + 1] += 2 * c
        for j, c in enumerate(prev):
            nxt[j] -= 2 * k * c
        rows.append(tuple(nxt))
    return tuple(rows)


def hermite_recurrence(n: int) -> XPoly:
    _check_degree(n)
    return XPoly(_hermite_recurrence_table(n)[n])


@lru_cache(maxsize=None)
def hermite(n: int) -> XPoly:
    """Physicists' Hermite polynomial H_n(x).

    Built from the explicit sum and checked against the three-term recurrence;
    a disagreement raises :class:`HermiteMismatchError`.
    """
    explicit = hermite_explicit(n)
    if explicit != hermite_recurrence(n):
        raise HermiteMismatchError(f"H_{n}: explicit sum and recurrence disagree")
    return explicit


def hermite_coeff(n: int, k: int, parity: str) -> Fraction:
    """Closed-form coefficient of x^(2k) in H_{2n} (even) or x^(2k+1) in H_{2n+1} (odd)."""
    if n < 0 or k < 0 or k > n:
        raise IndexError(f"need 0 <= k <= n, got n={n}, k={k}")
    sign = (-1) ** (n - k)
    if parity == "even":
        return Fraction(sign * 2 ** (2 * k) * fact(2 * n), fact(2 * k) * fact(n - k))
    if parity == "odd":
        return Fraction(sign * 2 ** (2 * k + 1) * fact(2 * n + 1), fact(2 * k + 1) * fact(n - k))
    raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")


def hermite_from_coeffs(m: int) -> XPoly:
    """Rebuild H_m from the closed-form even/odd coefficients."""
    n, odd = divmod(m, 2)
    coeffs: list[Fraction] = [Fraction(0)] * (m + 1)
    for k in range(n + 1):
        if odd:
            coeffs[2 * k + 1] = hermite_coeff(n, k, "odd")
        else:
            coeffs[2 * k] = hermite_coeff(n, k, "even")
    return XPoly(coeffs)


def laguerre(n: int, alpha: ScalarLike) -> EtaPoly:
    """L_n^(alpha)(eta) with eta-coefficients (-1)^k (alpha+k+1)_{n-k} / (k! (n-k)!)."""
    _check_degree(n)
    return _laguerre(n, GScalar.coerce(alpha))


@lru_cache(maxsize=None)
def _laguerre(n: int, alpha: GScalar) -> EtaPoly:
    coeffs = [GScalar()] * (n + 1)
    poch = GScalar.const(1)
    # walk k downward so (alpha+k+1)_{n-k} grows by one factor per step
    for k in range(n, -1, -1):
        if k < n:
            poch = poch * (alpha + (k + 1))
        coeffs[k] = poch * Fraction((-1) ** k, fact(k) * fact(n - k))
    return EtaPoly(coeffs)


ALPHA_RADIAL = G - Fraction(1, 2)


@lru_cache(maxsize=None)
def laguerre_radial(n: int) -> XPoly:
    """L_n^(g-1/2)(x^2) as an even polynomial in x."""
    return xpoly_substitute_eta_to_x2(laguerre(n, ALPHA_RADIAL))


def generate(family: PolyFamilyTag, n: int) -> XPoly:
    if family is PolyFamilyTag.HERMITE:
        return hermite(n)
    return laguerre_radial(n)
