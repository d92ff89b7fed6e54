"""Oscillator operators acting on polynomial parts of eigenfunctions.

The ground-state factor exp(-x^2/2) is stripped throughout, and the sqrt(2)
factors of the ladder operators are scaled away:

    lower  A-  = d/dx
    raise  A+  = -d/dx + 2x
    number N~  = (1/2) A+ A-  = x d/dx - (1/2) d^2/dx^2

so that A- H_n = 2n H_{n-1}, A+ H_n = H_{n+1} and N~ H_n = n H_n.  The squared
annihilator becomes (1/2) d^2/dx^2, giving b~ = (N~ + 1)^-1 (1/2) d^2/dx^2.
"""

from __future__ import annotations

from fractions import Fraction

from .classical import hermite
from .exact import ONE, GScalar, ScalarLike, XPoly, xpoly_derivative

HALF = Fraction(1, 2)


def op_lower(p: XPoly) -> XPoly:
    return xpoly_derivative(p)


def op_raise(p: XPoly) -> XPoly:
    return p.shift(1) * 2 - xpoly_derivative(p)


def op_number(p: XPoly) -> XPoly:
    d1 = xpoly_derivative(p)
    return d1.shift(1) - xpoly_derivative(d1) * HALF


def solve_shifted_number(p: XPoly, s: int) -> XPoly:
    """Solve (N~ + s) q = p for q.

    On monomials (N~ + s) x^k = (k+s) x^k - k(k-1)/2 x^(k-2), an upper-triangular
    map with diagonal k+s > 0, so q is found by back-substitution from the top
    degree down.
    """
    if s < 1:
        raise ValueError(f"shift must be a positive integer, got {s}")
    if p.is_zero():
        return p
    deg = p.degree
    q: list[GScalar] = [GScalar()] * (deg + 1)
    for k in range(deg, -1, -1):
        rhs = p[k]
        # contribution of q_{k+2} x^{k+2}: -(k+2)(k+1)/2 x^k
        if k + 2 <= deg:
            rhs = rhs + q[k + 2] * Fraction((k + 2) * (k + 1), 2)
        q[k] = rhs * Fraction(1, k + s)
    return XPoly(q)


def hermite_expand(p: XPoly) -> list[GScalar]:
    """Coefficients c_k with p = sum_k c_k H_k, by peeling off leading terms."""
    if p.is_zero():
        return []
    deg = p.degree
    out: list[GScalar] = [GScalar()] * (deg + 1)
    rest = p
    for k in range(deg, -1, -1):
        c = rest[k] * Fraction(1, 2 ** k)
        out[k] = c
        if not c.is_zero():
            rest = rest - hermite(k) * c
    if not rest.is_zero():
        raise ArithmeticError("Hermite expansion left a remainder")
    return out


def hermite_combine(coeffs: list[GScalar]) -> XPoly:
    out = XPoly()
    for k, c in enumerate(coeffs):
        if not c.is_zero():
            out = out + hermite(k) * c
    return out


def solve_shifted_number_hermite(p: XPoly, s: int) -> XPoly:
    """Same solve via the Hermite basis, where N~ is diagonal with eigenvalue k on H_k."""
    if s < 1:
        raise ValueError(f"shift must be a positive integer, got {s}")
    coeffs = hermite_expand(p)
    return hermite_combine([c * Fraction(1, k + s) for k, c in enumerate(coeffs)])


def _half_second_derivative(p: XPoly) -> XPoly:
    return xpoly_derivative(xpoly_derivative(p)) * HALF


def op_b(p: XPoly) -> XPoly:
    """b~ = (N~ + 1)^-1 a~^2: square of the lowering operator first, then the inverse."""
    return solve_shifted_number(_half_second_derivative(p), 1)


def op_bprime(p: XPoly) -> XPoly:
    """b~' = (N~ + 2)^-1 a~^2, the odd-sector analogue of :func:`op_b`."""
    return solve_shifted_number(_half_second_derivative(p), 2)


def op_b_power(p: XPoly, k: int, *, prime: bool = False) -> XPoly:
    if k < 0:
        raise ValueError(f"power must be nonnegative, got {k}")
    step = op_bprime if prime else op_b
    for _ in range(k):
        if p.is_zero():
            break
        p = step(p)
    return p


def op_hyp1f0(p: XPoly, pochhammer_base: ScalarLike, *, prime: bool = False) -> XPoly:
    """Apply 1F0(base; -b~) = sum_k (base)_k / k! (-b~)^k to ``p``.

    Each application of b~ drops the degree by two, so the series is cut at
    ceil(deg p / 2).  With ``prime=True`` the operator b~' is used instead.
    On odd-degree input with ``prime=False`` (or even input with ``prime=True``)
    the result is well defined but has no eigenfunction interpretation.
    """
    if p.is_zero():
        return p
    base = GScalar.coerce(pochhammer_base)
    top = -(-p.degree // 2)
    out = XPoly()
    term = p
    poch = ONE
    fact_k = 1
    for k in range(top + 1):
        if k:
            term = (op_bprime if prime else op_b)(term)
            poch = poch * (base + (k - 1))
            fact_k *= k
        if term.is_zero():
            break
        coeff = poch * Fraction((-1) ** k, fact_k)
        out = out + term * coeff
    return out

