"""Hermite <-> Laguerre transforms and eigen-equation checks on polynomial parts.

Every Laguerre result here is the monic-normalised (-1)^n n! L_n^(g-1/2)(x^2).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .classical import fact, hermite, laguerre, laguerre_radial
from .exact import (
    G,
    ONE,
    GScalar,
    XPoly,
    gscalar_pochhammer,
    xpoly_derivative,
    xpoly_divide_by_x,
    xpoly_specialize,
    xpoly_substitute_eta_to_x2,
)
from .operators import op_hyp1f0, op_number
from .report import VerifyReport


class Direction(enum.Enum):
    LAGUERRE_FROM_EVEN = "laguerre-from-even"
    LAGUERRE_FROM_ODD = "laguerre-from-odd"
    EVEN_FROM_LAGUERRE = "even-from-laguerre"
    ODD_FROM_LAGUERRE_V1 = "odd-from-laguerre-v1"
    ODD_FROM_LAGUERRE_V2 = "odd-from-laguerre-v2"


class Route(enum.Enum):
    DIRECT_SUM = "direct"
    OPERATOR_SERIES = "operator"


@dataclass(frozen=True)
class TransformSpec:
    direction: Direction
    route: Route = Route.DIRECT_SUM


def scaled_even_hermite(n: int) -> XPoly:
    """H_{2n}(x) / 2^{2n}."""
    return hermite(2 * n) / 4 ** n


def scaled_odd_hermite_by_x(n: int) -> XPoly:
    """H_{2n+1}(x) / (2^{2n+1} x)."""
    return xpoly_divide_by_x(hermite(2 * n + 1)) / 2 ** (2 * n + 1)


def monic_laguerre_radial(n: int) -> XPoly:
    """(-1)^n n! L_n^(g-1/2)(x^2) from the Laguerre definition."""
    return laguerre_radial(n) * ((-1) ** n * fact(n))


def laguerre_from_hermite_even(n: int, route: Route = Route.DIRECT_SUM) -> XPoly:
    if route is Route.OPERATOR_SERIES:
        return op_hyp1f0(scaled_even_hermite(n), G)
    out = XPoly()
    for k in range(n + 1):
        c = gscalar_pochhammer(G, k) * ((-1) ** k * comb(n, k))
        out = out + scaled_even_hermite(n - k) * c
    return out


def laguerre_from_hermite_odd(n: int, route: Route = Route.DIRECT_SUM) -> XPoly:
    if route is Route.OPERATOR_SERIES:
        series = op_hyp1f0(hermite(2 * n + 1) / 2 ** (2 * n + 1), G - 1, prime=True)
        return xpoly_divide_by_x(series)
    out = XPoly()
    for k in range(n + 1):
        c = gscalar_pochhammer(G - 1, k) * ((-1) ** k * comb(n, k))
        out = out + scaled_odd_hermite_by_x(n - k) * c
    return out


@lru_cache(maxsize=None)
def _laguerre_x2(n: int, alpha: GScalar) -> XPoly:
    return xpoly_substitute_eta_to_x2(laguerre(n, alpha))


def hermite_from_laguerre(n: int, variant: str = "even") -> XPoly:
    """Expand H_{2n}/2^{2n} (even) or H_{2n+1}/(2^{2n+1} x) (odd_v1, odd_v2) in Laguerre polynomials."""
    if variant == "even":
        shift, alpha = 1, G - Fraction(1, 2)
    elif variant == "odd_v1":
        shift, alpha = 0, G - Fraction(1, 2)
    elif variant == "odd_v2":
        shift, alpha = 1, G + Fraction(1, 2)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    out = XPoly()
    for k in range(n + 1):
        j = n - k
        lag = _laguerre_x2(j, alpha)
        c = gscalar_pochhammer(G + (shift - k), k) * (comb(n, k) * (-1) ** j * fact(j))
        out = out + lag * c
    return out


def transform(spec: TransformSpec, n: int) -> XPoly:
    d = spec.direction
    if d is Direction.LAGUERRE_FROM_EVEN:
        return laguerre_from_hermite_even(n, spec.route)
    if d is Direction.LAGUERRE_FROM_ODD:
        return laguerre_from_hermite_odd(n, spec.route)
    if spec.route is not Route.DIRECT_SUM:
        raise ValueError(f"{d.value} has only the direct-sum route")
    variant = {
        Direction.EVEN_FROM_LAGUERRE: "even",
        Direction.ODD_FROM_LAGUERRE_V1: "odd_v1",
        Direction.ODD_FROM_LAGUERRE_V2: "odd_v2",
    }[d]
    return hermite_from_laguerre(n, variant)


def classic_g0_check(n: int, parity: str = "even") -> VerifyReport:
    """H_{2n} = (-1)^n n! 4^n L_n^(-1/2)(x^2) or H_{2n+1} = (-1)^n n! 2^{2n+1} x L_n^(1/2)(x^2).

    The right-hand side is built with symbolic g (alpha = g -/+ 1/2) and then
    specialised at g = 0.
    """
    sign = (-1) ** n * fact(n)
    if parity == "even":
        rhs = xpoly_substitute_eta_to_x2(laguerre(n, G - Fraction(1, 2))) * (sign * 4 ** n)
        lhs = hermite(2 * n)
    elif parity == "odd":
        rhs = xpoly_substitute_eta_to_x2(laguerre(n, G + Fraction(1, 2))).shift(1) * (sign * 2 ** (2 * n + 1))
        lhs = hermite(2 * n + 1)
    else:
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    return VerifyReport.compare(f"classic_g0_{parity}", (n,), lhs, xpoly_specialize(rhs, 0))


def radial_operator_apply(p: XPoly) -> XPoly:
    """-p'' + 2x p' - (2g/x) p', the radial Hamiltonian on stripped polynomial parts."""
    d1 = xpoly_derivative(p)
    return -xpoly_derivative(d1) + d1.shift(1) * 2 - xpoly_divide_by_x(d1) * (2 * G)


def eigencheck_radial(n: int) -> VerifyReport:
    p = laguerre_radial(n)
    return VerifyReport.compare("eigen_radial", (n,), p * (4 * n), radial_operator_apply(p))


def eigencheck_harmonic(n: int) -> VerifyReport:
    h = hermite(n)
    return VerifyReport.compare("eigen_harmonic", (n,), h * (2 * n), op_number(h) * 2)


def _falling_sum(n: int) -> XPoly:
    """sum_k (-1)^k n!/(n-k)! H_{2(n-k)} / 2^{2(n-k)}."""
    out = XPoly()
    for k in range(n + 1):
        out = out + scaled_even_hermite(n - k) * ((-1) ** k * fact(n) // fact(n - k))
    return out


def hodd_byeven_check(n: int) -> VerifyReport:
    return VerifyReport.compare("hodd_byeven", (n,), _falling_sum(n), scaled_odd_hermite_by_x(n))


def phi_ratio_identity_check(n: int) -> VerifyReport:
    """(1/x) d/dx acting on exp(-x^2/2) H_{2n} / 4^n, compared on polynomial parts."""
    h = hermite(2 * n)
    lhs = (xpoly_divide_by_x(xpoly_derivative(h)) - h) / 4 ** n
    rhs = _falling_sum(n) * -2 + h / 4 ** n
    return VerifyReport.compare("phi_ratio", (n,), rhs, lhs)


# -- coefficient matrices of the direct sums ------------------------------
# Forward maps express M_n = (-1)^n n! L_n^(g-1/2)(x^2) in the scaled Hermite
# basis; inverse maps go back.  Composing them must give the identity.

def forward_coefficients(n: int, parity: str) -> list[GScalar]:
    """c_k with M_n = sum_k c_k B_{n-k}, where B_j = H_{2j}/4^j (even) or H_{2j+1}/(2^{2j+1} x) (odd)."""
    base = G if parity == "even" else G - 1
    return [gscalar_pochhammer(base, k) * ((-1) ** k * comb(n, k)) for k in range(n + 1)]


def inverse_coefficients(n: int, parity: str) -> list[GScalar]:
    """d_k with B_n = sum_k d_k M_{n-k}; the odd case is the alpha = g - 1/2 variant."""
    shift = 1 if parity == "even" else 0
    return [gscalar_pochhammer(G + (shift - k), k) * comb(n, k) for k in range(n + 1)]


def _compose(outer, inner, n: int, parity: str) -> list[GScalar]:
    # coefficient of basis element n-i after substituting inner expansions into outer
    out = [GScalar()] * (n + 1)
    for k, c in enumerate(outer(n, parity)):
        for j, d in enumerate(inner(n - k, parity)):
            out[k + j] = out[k + j] + c * d
    return out


def round_trip_check(n: int, parity: str) -> list[VerifyReport]:
    identity = [ONE] + [GScalar()] * n
    fwd_then_inv = _compose(forward_coefficients, inverse_coefficients, n, parity)
    inv_then_fwd = _compose(inverse_coefficients, forward_coefficients, n, parity)
    return [
        VerifyReport.compare(f"round_trip_{parity}_laguerre", (n,), XPoly(identity), XPoly(fwd_then_inv)),
        VerifyReport.compare(f"round_trip_{parity}_hermite", (n,), XPoly(identity), XPoly(inv_then_fwd)),
    ]
