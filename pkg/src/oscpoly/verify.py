"""Verification suites: every identity instance becomes a VerifyReport.

A suite is a list of tasks ``(function name, args)``; each task returns a list
of reports.  Tasks are plain module-level calls so they can be shipped to a
process pool, and results are always gathered in task order.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Iterator

from . import moments, quadrature, transforms
from .classical import fact, hermite, hermite_coeff, hermite_from_coeffs, hermite_recurrence, laguerre_radial
from .exact import XPoly, xpoly_derivative
from .operators import (
    op_b,
    op_bprime,
    op_lower,
    op_number,
    op_raise,
    solve_shifted_number,
    solve_shifted_number_hermite,
)
from .report import VerifyReport
from .transforms import Route

SUITES = ("ladders", "transforms", "eigen", "gram", "identities", "quadrature")
CROSSCHECK_G = (Fraction(3, 2), Fraction(5, 2), Fraction(7, 4))
CROSSCHECK_MAX_N = 8

Task = tuple[str, tuple]


# -- ladders ---------------------------------------------------------------

def _ladder_task(n: int) -> list[VerifyReport]:
    h = hermite(n)
    below = hermite(n - 1) * (2 * n) if n else XPoly()
    out = [
        VerifyReport.compare("hermite_recurrence", (n,), hermite_recurrence(n), h),
        VerifyReport.compare("hermite_coeff", (n,), hermite_from_coeffs(n), h),
        VerifyReport.compare("ladder_lower", (n,), below, op_lower(h)),
        VerifyReport.compare("derivative_hermite", (n,), below, xpoly_derivative(h)),
        VerifyReport.compare("ladder_raise", (n,), hermite(n + 1), op_raise(h)),
        VerifyReport.compare("ladder_number", (n,), h * n, op_number(h)),
        VerifyReport.compare("number_factorization", (n,), op_number(h), op_raise(op_lower(h)) / 2),
        VerifyReport.compare("monic_hermite", (n,), XPoly([1]), XPoly([h.leading() / 2 ** n])),
    ]
    mono = XPoly.monomial(n)
    for s in (1, 2):
        q = solve_shifted_number(mono, s)
        out.append(VerifyReport.compare("shifted_number_solve", (n, s), mono, op_number(q) + q * s))
        out.append(VerifyReport.compare("shifted_number_routes", (n, s), solve_shifted_number_hermite(mono, s), q))
    return out


def _b_task(n: int) -> list[VerifyReport]:
    """Action of b~ on H_{2n} and of b~' on H_{2n+1}, and powers of b~ on H_{2n}/4^n."""
    out = []
    even_below = hermite(2 * n - 2) * (4 * n) if n else XPoly()
    odd_below = hermite(2 * n - 1) * (4 * n) if n else XPoly()
    out.append(VerifyReport.compare("b_action", (n,), even_below, op_b(hermite(2 * n))))
    out.append(VerifyReport.compare("bprime_action", (n,), odd_below, op_bprime(hermite(2 * n + 1))))
    term = transforms.scaled_even_hermite(n)
    for k in range(n + 2):
        if k:
            term = op_b(term)
        if k <= n:
            want = transforms.scaled_even_hermite(n - k) * (fact(n) // fact(n - k))
        else:
            want = XPoly()
        out.append(VerifyReport.compare("b_power", (n, k), want, term))
    out.append(transforms.hodd_byeven_check(n))
    out.append(transforms.phi_ratio_identity_check(n))
    return out


def _hermite_coeff_task(n: int) -> list[VerifyReport]:
    out = []
    for parity, m in (("even", 2 * n), ("odd", 2 * n + 1)):
        h = hermite(m)
        for k in range(n + 1):
            j = 2 * k + (parity == "odd")
            got = XPoly([h[j]])
            out.append(VerifyReport.compare(f"hermite_coeff_{parity}", (n, k), XPoly([hermite_coeff(n, k, parity)]), got))
    return out


# -- transforms ------------------------------------------------------------

def _transform_task(n: int) -> list[VerifyReport]:
    monic = transforms.monic_laguerre_radial(n)
    out = [
        VerifyReport.compare("laguerre_from_even_direct", (n,), monic,
                             transforms.laguerre_from_hermite_even(n, Route.DIRECT_SUM)),
        VerifyReport.compare("laguerre_from_even_operator", (n,), monic,
                             transforms.laguerre_from_hermite_even(n, Route.OPERATOR_SERIES)),
        VerifyReport.compare("laguerre_from_odd_direct", (n,), monic,
                             transforms.laguerre_from_hermite_odd(n, Route.DIRECT_SUM)),
        VerifyReport.compare("laguerre_from_odd_operator", (n,), monic,
                             transforms.laguerre_from_hermite_odd(n, Route.OPERATOR_SERIES)),
        VerifyReport.compare("monic_leading", (n,), XPoly([1]), XPoly([monic.leading()])),
    ]
    even = transforms.hermite_from_laguerre(n, "even")
    v1 = transforms.hermite_from_laguerre(n, "odd_v1")
    v2 = transforms.hermite_from_laguerre(n, "odd_v2")
    out += [
        VerifyReport.compare("even_from_laguerre", (n,), transforms.scaled_even_hermite(n), even),
        VerifyReport.compare("odd_from_laguerre_v1", (n,), transforms.scaled_odd_hermite_by_x(n), v1),
        VerifyReport.compare("odd_from_laguerre_v2", (n,), transforms.scaled_odd_hermite_by_x(n), v2),
        VerifyReport.compare("odd_variants_agree", (n,), v1, v2),
        VerifyReport.compare("g_free_inverse", (n,), [0, 0, 0], [p.g_degree or 0 for p in (even, v1, v2)]),
        transforms.classic_g0_check(n, "even"),
        transforms.classic_g0_check(n, "odd"),
    ]
    out += transforms.round_trip_check(n, "even")
    out += transforms.round_trip_check(n, "odd")
    return out


# -- eigen -----------------------------------------------------------------

def _eigen_task(n: int) -> list[VerifyReport]:
    return [transforms.eigencheck_radial(n), transforms.eigencheck_harmonic(n)]


# -- gram ------------------------------------------------------------------

def _matrix_reports(identity: str, want, got) -> list[VerifyReport]:
    size = len(want)
    return [VerifyReport.compare(identity, (m, n), want[m][n], got[m][n]) for m in range(size) for n in range(size)]


def _gram_task(family: str, max_n: int) -> list[VerifyReport]:
    rng = range(max_n + 1)
    if family == "radial":
        got = moments.gram_radial(max_n)
        return _matrix_reports("gram_radial", moments.expected_diagonal([moments.radial_norm(n) for n in rng]), got)
    if family == "F":
        got = moments.gram_F(max_n)
        reports = _matrix_reports("gram_F", moments.expected_diagonal([moments.F_norm(n) for n in rng]), got)
        radial = moments.gram_radial(max_n)
        rescaled = [[radial[m][n].scale((-1) ** (m + n) * fact(m) * fact(n)) for n in rng] for m in rng]
        return reports + _matrix_reports("gram_F_rescaling", rescaled, got)
    if family in ("hermite-halfline-even", "hermite-halfline-odd"):
        parity = family.rsplit("-", 1)[1]
        got = moments.gram_hermite_halfline(parity, max_n)
        want = moments.expected_diagonal([moments.hermite_halfline_norm(parity, n) for n in rng])
        return _matrix_reports(f"gram_hermite_halfline_{parity}", want, got)
    if family == "hermite-fullline":
        got = moments.gram_hermite_fullline(max_n)
        want = moments.expected_diagonal([moments.hermite_fullline_norm(n) for n in rng])
        return _matrix_reports("gram_hermite_fullline", want, got)
    raise ValueError(f"unknown Gram family {family!r}")


GRAM_FAMILIES = ("radial", "F", "hermite-halfline-even", "hermite-halfline-odd", "hermite-fullline")


# -- identities ------------------------------------------------------------

def _id1_task(max_n: int) -> list[VerifyReport]:
    return [moments.identity_check("id1", (n,)) for n in range(max_n + 1)]


def _id2_task(m: int) -> list[VerifyReport]:
    return [moments.identity_check("id2", (m, l)) for l in range(m + 1)]


def _id3_task(m: int, max_n: int) -> list[VerifyReport]:
    return [moments.identity_check("id3", (m, n)) for n in range(max_n + 1)]


# -- quadrature ------------------------------------------------------------

def _quad_rule_task(max_n: int) -> list[VerifyReport]:
    out = []
    r2 = quadrature.build_rule(quadrature.QuadKind.GAUSS_HERMITE, 2)
    node = 1 / math.sqrt(2)
    w = math.sqrt(math.pi) / 2
    ok = all(abs(a - b) <= 1e-13 for a, b in zip(r2.nodes + r2.weights, (-node, node, w, w)))
    out.append(VerifyReport("gauss_hermite_2pt", (2,), ok, [-node, node, w, w], list(r2.nodes + r2.weights)))
    size = max_n + 1
    out += quadrature.exactness_check(quadrature.build_rule(quadrature.QuadKind.GAUSS_HERMITE, size))
    for gval in CROSSCHECK_G:
        out += quadrature.exactness_check(quadrature.rule_for_weighted_g(gval, size))
    return out


def _quad_cross_task(family: str, gval: Fraction, max_n: int) -> list[VerifyReport]:
    if family == "hermite-fullline":
        polys = [hermite(n) for n in range(max_n + 1)]
        rule = quadrature.build_rule(quadrature.QuadKind.GAUSS_HERMITE, max_n + 1)
        exact = moments.gram_hermite_fullline(max_n)
    else:
        if family == "radial":
            polys = [laguerre_radial(n) for n in range(max_n + 1)]
            exact = moments.gram_radial(max_n)
        else:
            polys = [transforms.laguerre_from_hermite_even(n) for n in range(max_n + 1)]
            exact = moments.gram_F(max_n)
        rule = quadrature.rule_for_weighted_g(gval, max_n + 1)
    numeric = [[quadrature.numeric_inner_product(p, q, gval, rule) for q in polys] for p in polys]
    return quadrature.compare_gram(f"quad_gram_{family}[g={gval}]", exact, numeric, gval)


# -- driver ----------------------------------------------------------------

def suite_tasks(suite: str, max_n: int) -> list[Task]:
    if suite == "all":
        return [t for s in SUITES for t in suite_tasks(s, max_n)]
    rng = range(max_n + 1)
    if suite == "ladders":
        return ([("_ladder_task", (n,)) for n in rng] + [("_hermite_coeff_task", (n,)) for n in rng]
                + [("_b_task", (n,)) for n in rng])
    if suite == "transforms":
        return [("_transform_task", (n,)) for n in rng]
    if suite == "eigen":
        return [("_eigen_task", (n,)) for n in rng]
    if suite == "gram":
        return [("_gram_task", (family, max_n)) for family in GRAM_FAMILIES]
    if suite == "identities":
        return ([("_id1_task", (max_n,))] + [("_id2_task", (m,)) for m in rng]
                + [("_id3_task", (m, max_n)) for m in rng])
    if suite == "quadrature":
        cap = min(max_n, CROSSCHECK_MAX_N)
        tasks: list[Task] = [("_quad_rule_task", (cap,))]
        tasks += [("_quad_cross_task", ("hermite-fullline", Fraction(0), cap))]
        for gval in CROSSCHECK_G:
            tasks += [("_quad_cross_task", (family, gval, cap)) for family in ("radial", "F")]
        return tasks
    raise ValueError(f"unknown suite {suite!r}")


def run_task(task: Task) -> list[VerifyReport]:
    name, args = task
    return globals()[name](*args)


def run_suite(suite: str, max_n: int, jobs: int = 1) -> Iterator[VerifyReport]:
    """Yield reports in deterministic task order, whatever the worker count."""
    tasks = suite_tasks(suite, max_n)
    if jobs <= 1 or len(tasks) <= 1:
        for task in tasks:
            yield from run_task(task)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for reports in pool.map(run_task, tasks):
            yield from reports
