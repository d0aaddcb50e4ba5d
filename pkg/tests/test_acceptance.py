"""Exit criteria.  Each test prints one PASS/FAIL line in the terminal summary."""

import math
import random
import time
from fractions import Fraction

import mpmath
import pytest

from oracles import brute_force_spoofs, sigma_trial
from spoofperfect.arithmetic import geometric_sum, reduce_ratio, sieve_sigma
from spoofperfect.cli import main
from spoofperfect.golden import TABLE_1
from spoofperfect.robin import robin_check
from spoofperfect.search import SearchConfig, search
from spoofperfect.spoof import SpoofNumber, check_candidate, verify_spoof

FAST_ROWS = [r for r in TABLE_1 if r[1] <= 100_000]


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, _ = capsys.readouterr()
    return code, out


@pytest.mark.acceptance(1, "table --fast reproduces the 11 rows with n <= 1e5 exactly")
def test_fast_table(capsys):
    assert len(FAST_ROWS) == 11
    start = time.perf_counter()
    code, out = run(capsys, "table", "--fast", "--threads", 1)
    elapsed = time.perf_counter() - start
    assert code == 0
    assert out.strip().splitlines() == ["11/11 rows matched"]
    report = search(SearchConfig(n_max=100_000), workers=1)
    assert [r.key for r in report.results] == FAST_ROWS
    assert elapsed < 30


@pytest.mark.slow
@pytest.mark.acceptance(2, "canonical run n <= 1.6e7 reproduces all 14 rows exactly")
def test_full_table(capsys):
    code, out = run(capsys, "table")
    assert code == 0
    assert out.strip().splitlines() == ["14/14 rows matched"]
    report = search(SearchConfig())
    keys = [r.key for r in report.results]
    assert keys == list(TABLE_1)
    assert (62998299, 1032759, 61, 112, 2) in keys
    assert (440988093, 7229313, 61, 114, 2) in keys


@pytest.mark.acceptance(3, "worked examples and Descartes' number verify exactly")
def test_worked_examples():
    for key in [
        (8999757, 147537, 61, 98, 2),
        (181545, 60515, 3, 192, 5),
        (15, 5, 3, 16, 3),
        (198585576189, 9018009, 22021, 2, 1),
    ]:
        sp = SpoofNumber(*key)
        assert sp.s == sp.n * sp.x
        assert verify_spoof(sp) is True


@pytest.mark.acceptance(4, "check_candidate equals brute-force x enumeration (n <= 2000, k <= 64, alpha <= 4)")
def test_oracle_equivalence():
    start = time.perf_counter()
    expected = brute_force_spoofs(2000, 64, 4)
    found = set()
    for n in range(2, 2001):
        sig = sigma_trial(n)
        for k in range(2, 65):
            found |= {(h.n, h.x, h.k, h.alpha) for h in check_candidate(n, sig, k, 4)}
    assert found == expected
    assert time.perf_counter() - start < 60


@pytest.mark.acceptance(5, "sieve_sigma matches trial division for every n <= 1e4")
def test_sieve():
    table = sieve_sigma(1, 10_000)
    assert len(table) == 10_000
    assert [table[n] for n in range(1, 10_001)] == [sigma_trial(n) for n in range(1, 10_001)]


@pytest.mark.acceptance(6, "algebraic invariants hold with zero violations")
def test_invariants():
    rng = random.Random(6)
    violations = []
    for _ in range(10_000):
        x, alpha = rng.randrange(2, 2**32), rng.randrange(1, 11)
        total = geometric_sum(x, alpha)
        if math.gcd(total, x) != 1:
            violations.append(("coprime", x, alpha))
        if not geometric_sum(x, alpha + 1) > total < geometric_sum(x + 1, alpha):
            violations.append(("monotone", x, alpha))
        a, b = rng.randrange(1, 2**64), rng.randrange(1, 2**64)
        q = reduce_ratio(a, b)
        if math.gcd(q.num, q.den) != 1 or q.num * b != q.den * a:
            violations.append(("reduce", a, b))
    table = sieve_sigma(2, 3000)
    for n, sig in table.items():
        for k in range(2, 513):
            q = reduce_ratio(sig, k * n)
            orders = [] if q.num < 2 else [a for a in range(1, 11) if q.den == geometric_sum(q.num, a, q.den)]
            if len(orders) > 1 or len(check_candidate(n, sig, k, 10)) != len(orders):
                violations.append(("unique", n, k, orders))
    assert violations == []


@pytest.mark.acceptance(7, "Robin-type bound satisfied for the 9 rows with n > 5040, not applicable otherwise")
def test_robin_rows():
    mpmath.mp.dps = 40
    applicable = []
    for row in TABLE_1:
        s, n, x, k, alpha = row
        report = robin_check(SpoofNumber(*row))
        assert report.lhs == Fraction(k * x, sum(x**a for a in range(alpha + 1)))
        rhs = mpmath.e**mpmath.euler * mpmath.log(mpmath.log(n))
        assert abs(report.rhs - float(rhs)) <= 1e-9 * float(rhs)
        if n > 5040:
            applicable.append(n)
            assert report.applicable and report.satisfied and not report.borderline
        else:
            assert not report.applicable
    assert len(applicable) == 9 and min(applicable) == 11115


@pytest.mark.acceptance(8, "--fast runs with --threads 1 and --threads 8 give byte-identical recaps")
def test_determinism(capsys):
    _, table_one = run(capsys, "table", "--fast", "--threads", 1)
    _, table_eight = run(capsys, "table", "--fast", "--threads", 8)
    assert table_one == table_eight
    base = ["search", "--n-max", 100_000, "--format", "csv", "--no-require-x-prime"]
    _, recap_one = run(capsys, *base, "--threads", 1)
    _, recap_eight = run(capsys, *base, "--threads", 8, "--block-size", 5000)
    assert recap_one == recap_eight
    assert len(recap_one.splitlines()) > 12
