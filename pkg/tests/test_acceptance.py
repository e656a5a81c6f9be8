"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; every expected value below is either hand-derived or frozen from an
independent brute-force computation.
"""
import random
import time
from fractions import Fraction

from fibaudit.identities import (
    IdentityFamily,
    audit,
    closed_form_rhs,
    cross_power_expansion,
    fib_power_sum_binet,
    fib_power_sum_oracle,
    prop1_eval,
    remark1_relation,
)
from fibaudit.ring import GoldenInt, PHI, ring_pow
from fibaudit.sequences import (
    binomial,
    fib,
    fib_naive,
    lucas,
    lucas_naive,
    q_coeff,
    s_coeff,
)
from fibaudit.transforms import (
    Seq,
    binomial_transform,
    corollary1_eval,
    corollary2_eval,
    inverse_transform,
    lemma2_lhs,
    lemma3_sum,
    nabla_direct,
    nabla_sum,
    theorem1_eval,
)

F = IdentityFamily


def _report(number: int, label: str, start: float, limit: float | None = None):
    elapsed = time.perf_counter() - start
    print(f"ACCEPTANCE {number}: PASS - {label} ({elapsed:.2f}s)")
    if limit is not None:
        assert elapsed < limit, f"criterion {number} exceeded {limit}s ({elapsed:.2f}s)"


def test_criterion_1_round_trip():
    start = time.perf_counter()
    rng = random.Random(1)
    for _ in range(200):
        a = Seq(tuple(rng.randint(-1000, 1000) for _ in range(rng.randint(1, 64))))
        assert inverse_transform(binomial_transform(a)) == a
    _report(1, "transform round trip, 200 random sequences", start, 5.0)


def test_criterion_2_transform_identity_suites():
    start = time.perf_counter()
    rng = random.Random(2)

    b = Seq(tuple(rng.randint(-100, 100) for _ in range(33)))
    a = Seq(tuple(rng.randint(-100, 100) for _ in range(33)))
    bt = binomial_transform(a)
    for n in range(33):
        for m in range(n + 1):
            assert nabla_direct(b, m, n) == nabla_sum(b, m, n)
            assert binomial(n, m) * nabla_sum(b, m, n) == sum(
                binomial(n, j) * binomial(j, n - m) * (-1) ** (n - j) * b[j]
                for j in range(n + 1)
            )
            assert lemma2_lhs(a, m, n) == nabla_sum(bt, m, n)
            assert sum(
                binomial(n, k) * binomial(k, m) * a[k] for k in range(n + 1)
            ) == binomial(n, m) * nabla_sum(bt, m, n)

    for n in range(1, 31):
        for m in range(1, n + 1):
            assert lemma3_sum(n, m) == Fraction((-1) ** m, m)

    for _ in range(30):
        length = rng.randint(1, 16)
        s1 = Seq(tuple(rng.randint(-50, 50) for _ in range(length)))
        s2 = Seq(tuple(rng.randint(-50, 50) for _ in range(length)))
        lhs, rhs8, rhs81 = theorem1_eval(s1, s2)
        assert lhs == rhs8 == rhs81

    from fibaudit.ring import PSI

    xs = (0, 1, -1, Fraction(1, 2), 2, PHI, PSI)
    for _ in range(20):
        s = Seq(tuple(rng.randint(-50, 50) for _ in range(rng.randint(1, 13))))
        for x in xs:
            l1, r1 = corollary1_eval(s, x)
            assert l1 == r1
            l2, r2 = corollary2_eval(s, x)
            assert l2 == r2
    _report(2, "lemma 1-3 / theorem 1 / corollary 1-2 suites", start, 30.0)


def test_criterion_3_gould_identities():
    start = time.perf_counter()
    for n in range(21):
        for m in range(n + 1):
            for l in range(n + 1):
                assert sum(
                    binomial(m, k) * binomial(n - k, l) * (-1) ** k
                    for k in range(m + 1)
                ) == binomial(n - m, l - m)
    for n in range(1, 21):
        for m in range(1, n + 1):
            assert sum(
                binomial(n - m, j) * (-1) ** j * Fraction(m, m + j)
                for j in range(n - m + 1)
            ) == Fraction(1, binomial(n, n - m))
    _report(3, "Gould 3.49 and 1.41 exact", start, 5.0)


def test_criterion_4_ring_cross_link():
    start = time.perf_counter()
    for n in range(201):
        assert ring_pow(PHI, n) == GoldenInt(lucas(n), fib(n))
    for n in range(501):
        assert fib(n) == fib_naive(n)
        assert lucas(n) == lucas_naive(n)
    _report(4, "phi^n = (L_n + F_n sqrt5)/2 and fast-doubling cross-check", start, 5.0)


def test_criterion_5_remark1():
    start = time.perf_counter()
    checks = 0
    for p in range(1, 13):
        for index in range(1, 13):
            lhs, rhs = remark1_relation(p, index)
            assert lhs == rhs
            checks += 1
    assert checks == 144
    _report(5, "all 12 golden-power relations, 1 <= p <= 12 (144 checks)", start)


def test_criterion_6_weighted_sums():
    start = time.perf_counter()
    for variant in (811, 812, 813, 814):
        for n in range(21):
            for p in range(9):
                lhs, rhs = prop1_eval(n, p, variant)
                assert lhs == rhs
    for n in range(21):
        lhs, _ = prop1_eval(n, 0, 811)
        assert lhs == fib(2 * n)
    _report(6, "weighted-sum closed forms 811-814, 0<=n<=20, 0<=p<=8", start)


def test_criterion_7_oracle_equivalence():
    start = time.perf_counter()
    for n in range(25):
        for p in range(1, 9):
            for sign in "+-":
                assert fib_power_sum_oracle(n, p, sign) == fib_power_sum_binet(
                    n, p, sign
                )
    _report(7, "direct and ring oracles agree, n<=24, p<=8, both signs", start)


def test_criterion_8_theorem2():
    start = time.perf_counter()
    for p in (1, 2, 3):
        for n in range(21):
            assert closed_form_rhs(F.T2, n, p) == fib_power_sum_oracle(n, 4 * p, "+")
    assert closed_form_rhs(F.T2, 1, 1) == 1
    assert closed_form_rhs(F.T2, 2, 1) == 3
    assert closed_form_rhs(F.T2, 3, 1) == 22
    _report(8, "power-4p closed form equals oracle, p in {1,2,3}, n<=20", start)


def test_criterion_9_qs_machinery():
    start = time.perf_counter()
    for n in range(20):
        for c in range(1, n + 2):
            assert q_coeff(n + 1, c) == q_coeff(n, c - 1) + q_coeff(n, c)
        for c in range(n + 1):
            assert q_coeff(n + 1, c) == (
                binomial(n + 1, c) - q_coeff(n, c + 1) + q_coeff(n, c)
            )
        for c in range(1, n):
            assert s_coeff(n + 1, c) == s_coeff(n, c - 1) - s_coeff(n, c)
            assert s_coeff(n + 1, c) == (
                (-1) ** (n - c + 1) * binomial(n + 1, c)
                - s_coeff(n, c + 1)
                - s_coeff(n, c)
            )
        assert s_coeff(n + 1, 0) == -s_coeff(n, 1) - s_coeff(n, 0) + (-1) ** (n + 1)
    for n in range(21):
        for shift in (1, -1):
            direct, expanded = cross_power_expansion(n, PHI, shift)
            assert direct == expanded
            for t in (1, 2, 3):
                direct, expanded = cross_power_expansion(n, Fraction(t), shift)
                assert direct == expanded
    _report(9, "q/s recurrences vs definition and power-sum expansions, n<=20", start)


def test_criterion_10_theorems_3_to_7_audit():
    start = time.perf_counter()
    families = [F.T3, F.T4_EVEN, F.T4_ODD, F.T5, F.T6, F.T7]
    r1 = audit(families, range(17), range(3))
    r2 = audit(families, range(17), range(3))
    assert r1.to_json().encode() == r2.to_json().encode()
    assert r1.to_csv().encode() == r2.to_csv().encode()
    assert r1.entries
    readings = {(e.family, e.reading) for e in r1.entries}
    assert ("T4_EVEN", "printed") in readings
    assert ("T4_EVEN", "base-subscript") in readings
    assert ("T6", "t-to-p") in readings
    assert ("T7", "t-to-p-1") in readings
    for e in r1.entries:
        if e.verdict == "FAIL":
            assert e.lhs != "" and e.rhs != "" and e.note != ""
    n_fail = sum(1 for e in r1.entries if e.verdict == "FAIL")
    _report(
        10,
        f"deterministic audit of power 4p..4p+3 printed forms "
        f"({len(r1.entries)} cells, {n_fail} printed-form FAILs adjudicated)",
        start,
    )


def test_criterion_11_benchmark():
    start = time.perf_counter()
    n, p = 1024, 1
    oracle_value = fib_power_sum_oracle(n, 4 * p, "+")
    closed_value = closed_form_rhs(F.T2, n, p)
    assert oracle_value == closed_value

    t_oracle = min(
        _timed(lambda: fib_power_sum_oracle(n, 4 * p, "+")) for _ in range(3)
    )
    t_closed = min(_timed(lambda: closed_form_rhs(F.T2, n, p)) for _ in range(3))
    speedup = t_oracle / t_closed
    assert speedup >= 10.0, f"speedup only {speedup:.1f}x"
    _report(
        11,
        f"closed form {speedup:.0f}x faster than naive summation at n=1024",
        start,
        60.0,
    )


def _timed(fn) -> float:
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0
