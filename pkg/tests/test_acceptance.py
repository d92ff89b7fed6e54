"""One test per acceptance criterion; each records a PASS/FAIL line with its wall time."""

import subprocess
import sys
import time
from contextlib import contextmanager
from fractions import Fraction

import conftest
from oscpoly import moments, transforms, verify
from oscpoly.classical import fact, hermite, laguerre_radial
from oscpoly.exact import G, MomentValue, gscalar_pochhammer
from oscpoly.operators import op_number
from oscpoly.transforms import Route

N = 32


@contextmanager
def criterion(number, title, budget):
    start = time.perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - start
        status = "PASS" if elapsed <= budget else "FAIL"
    finally:
        elapsed = time.perf_counter() - start
        line = f"[{status}] {number:>2}. {title} ({elapsed:.2f}s, budget {budget:g}s)"
        conftest.ACCEPTANCE_LINES.append(line)
        print(line)
    assert elapsed <= budget, line


def all_pass(reports):
    failed = [r.line() for r in reports if not r.passed]
    assert not failed, failed[:5]
    return len(reports)


def test_01_even_transform():
    with criterion(1, "even Hermite -> Laguerre, both routes, n <= 32", 10):
        for n in range(N + 1):
            want = laguerre_radial(n) * ((-1) ** n * fact(n))
            assert transforms.laguerre_from_hermite_even(n, Route.DIRECT_SUM) == want
            assert transforms.laguerre_from_hermite_even(n, Route.OPERATOR_SERIES) == want


def test_02_odd_transform():
    with criterion(2, "odd Hermite -> Laguerre, both routes, n <= 32", 10):
        for n in range(N + 1):
            want = laguerre_radial(n) * ((-1) ** n * fact(n))
            assert transforms.laguerre_from_hermite_odd(n, Route.DIRECT_SUM) == want
            assert transforms.laguerre_from_hermite_odd(n, Route.OPERATOR_SERIES) == want


def test_03_inverse_transforms():
    with criterion(3, "inverse transforms, odd variants agree and are g-free, n <= 32", 10):
        for n in range(N + 1):
            even = transforms.hermite_from_laguerre(n, "even")
            v1 = transforms.hermite_from_laguerre(n, "odd_v1")
            v2 = transforms.hermite_from_laguerre(n, "odd_v2")
            assert even == transforms.scaled_even_hermite(n)
            assert v1 == v2 == transforms.scaled_odd_hermite_by_x(n)
            assert all((p.g_degree or 0) == 0 for p in (even, v1, v2))


def test_04_g0_specialization():
    with criterion(4, "classical g = 0 formulas, n <= 32", 2):
        all_pass([transforms.classic_g0_check(n, parity) for n in range(N + 1) for parity in ("even", "odd")])


def test_05_eigenchecks():
    with criterion(5, "radial eigenvalue 4n and harmonic eigenvalue 2n, n <= 32", 5):
        all_pass([transforms.eigencheck_radial(n) for n in range(N + 1)])
        for n in range(N + 1):
            h = hermite(n)
            assert op_number(h) * 2 == h * (2 * n)


def test_06_ladder_suite():
    with criterion(6, "ladder and b-operator suite, 0 <= k <= n <= 32", 10):
        count = all_pass(list(verify.run_suite("ladders", N)))
        assert count > 0


def test_07_identities():
    with criterion(7, "id1, id2, id3 exact in Q[g], indices <= 24", 10):
        count = all_pass(list(verify.run_suite("identities", 24)))
        assert count == 25 + 325 + 625


def test_08_orthogonality():
    with criterion(8, "Gram matrices: radial/F to 12, Hermite to 16", 30):
        for family in ("radial", "F"):
            all_pass(verify._gram_task(family, 12))
        for family in ("hermite-halfline-even", "hermite-halfline-odd", "hermite-fullline"):
            all_pass(verify._gram_task(family, 16))
        # the stated diagonals, written out independently of the moments module
        half = Fraction(1, 2)
        radial, F = moments.gram_radial(12), moments.gram_F(12)
        for n in range(13):
            p = gscalar_pochhammer(G + half, n)
            assert radial[n][n] == MomentValue(gamma_g_half=p * Fraction(1, 2 * fact(n)))
            assert F[n][n] == MomentValue(gamma_g_half=p * (half * fact(n)))
        even = moments.gram_hermite_halfline("even", 16)
        odd = moments.gram_hermite_halfline("odd", 16)
        full = moments.gram_hermite_fullline(16)
        for n in range(17):
            assert even[n][n] == MomentValue(sqrt_pi=Fraction(2 ** (2 * n)) / 2 * fact(2 * n))
            assert odd[n][n] == MomentValue(sqrt_pi=2 ** (2 * n) * fact(2 * n + 1))
            assert full[n][n] == MomentValue(sqrt_pi=2 ** n * fact(n))


def test_09_quadrature():
    with criterion(9, "quadrature cross-check at g in {3/2, 5/2, 7/4}, m,n <= 8", 5):
        all_pass(list(verify.run_suite("quadrature", 8)))


def test_10_full_cli_suite():
    with criterion(10, "oscpoly verify --suite all --max-n 12 exits 0", 120):
        proc = subprocess.run([sys.executable, "-m", "oscpoly", "verify", "--suite", "all", "--max-n", "12"],
                              capture_output=True, text=True)
        assert proc.returncode == 0, proc.stdout[-2000:] + proc.stderr[-2000:]
        assert "0 failed" in proc.stdout.splitlines()[-1]
