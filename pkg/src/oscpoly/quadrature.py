"""Gauss-Hermite and Gauss-Laguerre rules for floating-point cross-checks.

Nodes are located one bracket at a time: the zeros of p_m interlace with those
of p_{m-1}, so each gap between consecutive zeros of p_{m-1} (closed off by a
Gershgorin bound on the Jacobi matrix) holds exactly one zero of p_m.  Newton
steps run inside that bracket and fall back to bisection when they leave it.
Polynomials are evaluated through the orthonormal three-term recurrence.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import MomentValue, XPoly, to_rational, xpoly_specialize
from .report import VerifyReport

MAX_ITER = 200
STEP_TOL = 1e-15
RESIDUAL_TOL = 1e-13
CROSSCHECK_RTOL = 1e-9
EXACTNESS_RTOL = 1e-11


class QuadKind(enum.Enum):
    GAUSS_HERMITE = "hermite"
    GAUSS_LAGUERRE = "laguerre"


class ConvergenceError(RuntimeError):
    def __init__(self, index: int, message: str):
        super().__init__(f"node {index}: {message}")
        self.index = index


class RuleDegreeError(ValueError):
    """The rule is too small to integrate the requested product exactly."""


def gamma(z: float) -> float:
    """Gamma function; integer and half-integer arguments use the exact recurrence."""
    twice = 2 * z
    if z > 0 and twice == int(twice) and z <= 171:
        if twice % 2 == 0:
            return float(math.factorial(int(z) - 1))
        acc = math.sqrt(math.pi)
        w = 0.5
        while w < z:
            acc *= w
            w += 1
        return acc
    return math.gamma(z)


@dataclass(frozen=True)
class QuadRule:
    nodes: tuple[float, ...]
    weights: tuple[float, ...]
    kind: QuadKind
    alpha: float | None = None

    @property
    def size(self) -> int:
        return len(self.nodes)

    def integrate(self, f) -> float:
        return math.fsum(w * f(x) for x, w in zip(self.nodes, self.weights))

    def to_json(self) -> dict:
        out = {"kind": self.kind.value, "nodes_weights": [[x, w] for x, w in zip(self.nodes, self.weights)]}
        if self.alpha is not None:
            out["alpha"] = self.alpha
        return out


def _recurrence(kind: QuadKind, m: int, alpha: float | None) -> tuple[list[float], list[float]]:
    """Monic recurrence coefficients a_k (k < m) and b_k (k <= m); b_0 is the total mass."""
    if kind is QuadKind.GAUSS_HERMITE:
        a = [0.0] * m
        b = [math.sqrt(math.pi)] + [k / 2 for k in range(1, m + 1)]
    else:
        a = [2 * k + alpha + 1 for k in range(m)]
        b = [gamma(alpha + 1)] + [k * (k + alpha) for k in range(1, m + 1)]
    return a, b


def _eval(x: float, m: int, a: list[float], sb: list[float]) -> tuple[float, float, float]:
    """Orthonormal p_m(x), p_m'(x) and p_{m-1}(x)."""
    prev, cur = 0.0, 1.0 / sb[0]
    dprev, dcur = 0.0, 0.0
    for k in range(m):
        nxt = ((x - a[k]) * cur - sb[k] * prev) / sb[k + 1] if k else (x - a[0]) * cur / sb[1]
        dnxt = (cur + (x - a[k]) * dcur - (sb[k] * dprev if k else 0.0)) / sb[k + 1]
        prev, cur = cur, nxt
        dprev, dcur = dcur, dnxt
    return cur, dcur, prev


def _find_root(lo: float, hi: float, m: int, a, sb, index: int) -> float:
    flo = _eval(lo, m, a, sb)[0]
    x = 0.5 * (lo + hi)
    for _ in range(MAX_ITER):
        f, df, _prev = _eval(x, m, a, sb)
        if f == 0.0:
            return x
        if (f < 0) == (flo < 0):
            lo, flo = x, f
        else:
            hi = x
        step = f / df if df else math.inf
        new = x - step
        if not lo < new < hi:
            new = 0.5 * (lo + hi)
        if abs(new - x) < STEP_TOL * (1 + abs(x)):
            return new
        x = new
    raise ConvergenceError(index, f"no convergence after {MAX_ITER} iterations")


@lru_cache(maxsize=None)
def build_rule(kind: QuadKind, m: int, alpha: float | None = None) -> QuadRule:
    """m-point Gauss rule for exp(-x^2) on R (Hermite) or eta^alpha exp(-eta) on (0, inf) (Laguerre)."""
    if m < 1:
        raise ValueError(f"rule size must be positive, got {m}")
    if kind is QuadKind.GAUSS_LAGUERRE:
        if alpha is None or not alpha > -1:
            raise ValueError(f"Laguerre rule needs alpha > -1, got {alpha}")
        alpha = float(alpha)
    else:
        alpha = None
    a, b = _recurrence(kind, m, alpha)
    sb = [math.sqrt(v) for v in b]
    lower = min(a[k] - sb[k] * (k > 0) - sb[k + 1] for k in range(m))
    upper = max(a[k] + sb[k] * (k > 0) + sb[k + 1] for k in range(m))

    roots: list[float] = []
    for order in range(1, m + 1):
        edges = [lower] + roots + [upper]
        roots = [_find_root(edges[i], edges[i + 1], order, a, sb, i) for i in range(order)]

    weights = []
    for i, x in enumerate(roots):
        f, df, prev = _eval(x, m, a, sb)
        scale = max(1.0, abs(df) * (1 + abs(x)))
        if abs(f) >= RESIDUAL_TOL * scale:
            raise ConvergenceError(i, f"residual {abs(f):.3e} too large")
        weights.append(1.0 / (sb[m] * df * prev))
    return QuadRule(tuple(roots), tuple(weights), kind, alpha)


def _exact_at(coeffs: list[Fraction], x: float) -> float:
    """Evaluate at a float node in exact arithmetic, rounding once at the end."""
    xr = Fraction(x)
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * xr + c
    return float(acc)


def _specialized(p: XPoly, gval: Fraction) -> list[Fraction]:
    return [c.constant_value() for c in xpoly_specialize(p, gval).coeffs]


def numeric_inner_product(p: XPoly, q: XPoly, gval, rule: QuadRule) -> float:
    """Quadrature image of the exact inner product.

    Hermite rules integrate against exp(-x^2) on R.  Laguerre rules realise the
    x^(2g) exp(-x^2) weight on (0, inf) via eta = x^2, which requires
    alpha = g - 1/2 and even p and q, and contributes the Jacobian 1/2.
    Polynomial values at the nodes are computed exactly so that only the
    node and weight errors reach the result.
    """
    gval = to_rational(gval)
    if p.is_zero() or q.is_zero():
        return 0.0
    if rule.kind is QuadKind.GAUSS_HERMITE:
        if 2 * rule.size - 1 < p.degree + q.degree:
            raise RuleDegreeError(f"{rule.size}-point rule cannot integrate degree {p.degree + q.degree}")
        pc, qc = _specialized(p, gval), _specialized(q, gval)
        return rule.integrate(lambda x: _exact_at(pc, x) * _exact_at(qc, x))
    if abs(rule.alpha - float(gval - Fraction(1, 2))) > 1e-15 * (1 + abs(rule.alpha)):
        raise ValueError(f"Laguerre rule alpha={rule.alpha} does not match g={gval}")
    if not (p.is_even() and q.is_even()):
        raise ValueError("p and q must be even for the x^(2g) weight")
    eta_degree = (p.degree + q.degree) // 2
    if 2 * rule.size - 1 < eta_degree:
        raise RuleDegreeError(f"{rule.size}-point rule cannot integrate eta-degree {eta_degree}")
    pc, qc = _specialized(p, gval)[0::2], _specialized(q, gval)[0::2]
    return 0.5 * rule.integrate(lambda eta: _exact_at(pc, eta) * _exact_at(qc, eta))


def moment_to_float(mv: MomentValue, gval) -> float:
    gval = to_rational(gval)
    total = float(mv.one.eval(gval))
    if not mv.sqrt_pi.is_zero():
        total += float(mv.sqrt_pi.eval(gval)) * math.sqrt(math.pi)
    if not mv.gamma_g_half.is_zero():
        total += float(mv.gamma_g_half.eval(gval)) * gamma(float(gval) + 0.5)
    return total


def rule_for_weighted_g(gval, size: int) -> QuadRule:
    return build_rule(QuadKind.GAUSS_LAGUERRE, size, float(to_rational(gval) - Fraction(1, 2)))


def compare_gram(identity: str, exact: list[list[MomentValue]], numeric: list[list[float]], gval,
                 rtol: float = CROSSCHECK_RTOL) -> list[VerifyReport]:
    """Relative tolerance on the diagonal, rtol * sqrt(D_mm D_nn) off it."""
    size = len(exact)
    diag = [abs(moment_to_float(exact[i][i], gval)) for i in range(size)]
    reports = []
    for m in range(size):
        for n in range(size):
            want = moment_to_float(exact[m][n], gval)
            got = numeric[m][n]
            scale = diag[m] if m == n else math.sqrt(diag[m] * diag[n])
            ok = abs(got - want) <= rtol * scale
            reports.append(VerifyReport(identity, (m, n), ok, want, got))
    return reports


def exactness_check(rule: QuadRule, rtol: float = EXACTNESS_RTOL) -> list[VerifyReport]:
    """Every monomial of degree <= 2m-1 is integrated to ``rtol`` of its exact moment.

    Odd Hermite moments vanish, so their error is measured against the integral of |x|^j.
    """
    reports = []
    for j in range(2 * rule.size):
        got = rule.integrate(lambda x: x ** j)
        if rule.kind is QuadKind.GAUSS_HERMITE:
            want = 0.0 if j % 2 else gamma((j + 1) / 2)
            scale = gamma((j + 1) / 2)
        else:
            want = gamma(rule.alpha + j + 1)
            scale = want
        ok = abs(got - want) <= rtol * scale
        reports.append(VerifyReport(f"quad_exactness_{rule.kind.value}", (rule.size, j), ok, want, got))
    return reports
