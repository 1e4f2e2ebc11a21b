"""Exit criteria. Each test records one PASS/FAIL line, printed in the terminal summary.

Every comparison is exact; the only tolerances are wall-clock budgets.
"""

import random
import time
from fractions import Fraction

from eulerseq.congruences import SPECS, scan, verify
from eulerseq.exact import Poly, ResidueRing
from eulerseq.identities import (
    check_addition,
    check_complement,
    check_mixed_convolution,
    check_powersum_theorem,
    check_quartic,
    check_reflection,
    check_three_term,
    check_transform_roundtrip,
    check_weighted_powersum,
    egf_residual,
)
from eulerseq.sequence import build_table, euler_number, euler_number_mod, euler_number_poly

from oracles import euler_direct, residue_of, secant_numbers

A_GRID = [-3, -2, -1, 1, 2, 3, Fraction(1, 2), Fraction(-2, 5)]
Y_GRID = [-2, 0, 1, Fraction(3, 2)]
A_INT = [a for a in range(-20, 21) if a]


def test_golden_table(criterion):
    golden = {
        2: [0, -1],
        4: [0, -1, 6],
        6: [0, -1, 30, -90],
        8: [0, -1, 126, -1260, 2520],
        10: [0, -1, 510, -13230, 75600, -113400],
    }
    ok = all(euler_number_poly(n) == Poly(c, var="a") for n, c in golden.items())
    assert criterion("golden polynomial table E_2..E_10", ok)


def test_classical_anchor(criterion):
    expected = [1, 0, -1, 0, 5, 0, -61, 0, 1385, 0, -50521, 0, 2702765, 0, -199360981]
    oracle = [0] * 15
    for k, s in enumerate(secant_numbers(8)):
        oracle[2 * k] = (-1) ** k * s
    got = list(build_table(14, 1).values)
    ok = got == expected == oracle
    assert criterion("classical Euler anchor n=0..14", ok)


def test_egf_residual_order_60(criterion):
    t0 = time.perf_counter()
    values = [-3, -2, -1, 1, 2, 3, Fraction(1, 2), Fraction(5, 3)]
    ok = all(egf_residual(60, a).is_zero() for a in values)
    dt = time.perf_counter() - t0
    assert criterion("EGF residual zero to order 60, 8 values of a", ok and dt < 5, f"{dt:.2f}s < 5s")


def test_identity_suite(criterion):
    t0 = time.perf_counter()
    failures = []

    def need(r):
        if not r.ok:
            failures.append((r.identity, r.params))

    for a in A_GRID:
        for n in range(0, 41):
            need(check_reflection(n, a))
            for y in Y_GRID:
                need(check_addition(n, a, y))
            if n == 0:
                continue
            need(check_three_term(n, a))
            need(check_complement(n, a))
            for y in Y_GRID:
                need(check_mixed_convolution(n, a, y))
            for x0 in (-2, 0, 1, 3):
                need(check_weighted_powersum(x0, n, a))
    for a in [a for a in range(-5, 6) if a]:
        for n in range(1, 41):
            for base in (2, 3, 4, 5):
                r = check_powersum_theorem(base, n, a)
                need(r)
                if base == 2:
                    assert r.secondary is not None
    for n in range(1, 41):
        need(check_powersum_theorem(2, n, Fraction(1, 2)))
    for a in A_GRID:
        for n in range(1, 41):
            need(check_quartic(n, a))
        for n in range(1, 26):
            for x0 in (0, 1, 2, -1):
                need(check_quartic(n, a, x0, general=True))
    dt = time.perf_counter() - t0
    assert criterion("identity suite over n <= 40 grids", not failures and dt < 60,
                     f"{len(failures)} failures, {dt:.1f}s < 60s")


def test_transform_roundtrip(criterion):
    rng = random.Random(20261016)
    ok = True
    for _ in range(20):
        seq = [Fraction(rng.randint(-99, 99), rng.randint(1, 12)) for _ in range(30)]
        a = 0
        while a == 0:
            a = Fraction(rng.randint(-7, 7), rng.randint(1, 5))
        x0 = Fraction(rng.randint(-7, 7), rng.randint(1, 5))
        ok &= check_transform_roundtrip(seq, x0, a).passed
    assert criterion("inversion pair roundtrip, 20 sequences of length 30", ok)


def test_congruence_scans(criterion):
    t0 = time.perf_counter()
    plan = [
        ("T3_1", 5, A_INT),
        ("COR3_1_EVEN", 5, A_INT),
        ("COR3_1_ODD", 5, A_INT),
        ("T4_1", 2, [a for a in A_INT if a % 3 == 0 and abs(a) <= 18]),
        ("T4_2", 3, A_INT),
        ("T5_1", 2, A_INT),
        ("C3_2", 1, A_INT),
        ("C3_3", 1, A_INT),
        ("C3_5", 2, A_INT),
        ("C3_6", 2, A_INT),
        ("C3_7", 2, A_INT),
        ("C3_10", 4, A_INT),
        ("C3_11", 4, A_INT),
        ("C4_2", 2, A_INT),
    ]
    total = 0
    bad = []
    for sid, nmin, As in plan:
        assert SPECS[sid].min_n == nmin
        rep = scan(sid, (nmin, 200), As)
        total += rep.checks
        bad += rep.failures
        assert rep.checks > 0
    dt = time.perf_counter() - t0
    assert criterion("congruence scans n <= 200, |a| <= 20", not bad and dt < 300,
                     f"{total} checks, {len(bad)} failures, {dt:.1f}s < 300s")


def test_worked_instances(criterion):
    cases = [
        ("T3_1", 5, 1, 256, 167, Fraction(1, 1) - 300000 - 50000 + 1000 - 1700 - 110),
        ("T4_2", 3, 1, 729, 668, Fraction(2) - 2673 + 2430 - 549),
        ("T4_1", 2, 3, 243, 51, Fraction(6, 7) + 918),
        ("T5_1", 2, 1, 625, 5, Fraction(0) + 3000 + 2000 - 1870),
    ]
    ok = True
    for sid, n, a, m, value, big in cases:
        r = verify(sid, n, a)
        ok &= r.modulus == m and r.lhs.value == r.rhs.value == value
        ok &= residue_of(big, m) == value and euler_direct(2 * n, a)[2 * n] % m == value
    assert criterion("worked instances T3_1, T4_2, T4_1, T5_1", ok)


def test_modular_oracle_equivalence(criterion):
    rng = random.Random(7)
    ok = True
    for _ in range(500):
        n = rng.randint(0, 120)
        a = rng.choice([rng.randint(-30, 30), rng.randint(-10 ** 6, 10 ** 6)])
        m = rng.choice([rng.randint(2, 10 ** 9), 2 ** rng.randint(1, 20), 3 ** rng.randint(1, 12), 5 ** rng.randint(1, 9)])
        ok &= euler_number_mod(n, a, ResidueRing(m)).value == euler_number(n, a) % m
    assert criterion("euler_number_mod == reduce(euler_number), 500 triples", ok)
