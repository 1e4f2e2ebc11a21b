import random
from fractions import Fraction

import pytest

from eulerseq.congruences import (
    SPECS,
    DomainError,
    base3_closed_form,
    base5_closed_form,
    ord_p,
    rhs_value,
    scan,
    verify,
)
from eulerseq.sequence import euler_number

from oracles import euler_direct, ord_p as oracle_ord, residue_of

NONZERO = [a for a in range(-5, 6) if a]


# Right-hand sides evaluated over the rationals, then reduced: the big-integer route.
def _big_rhs(spec_id, n, a):
    f = Fraction(a, 2 * a - 1)
    g = Fraction(2 * a, 3 * a - 2)
    s = (-1) ** n
    return {
        "C3_2": a,
        "C3_3": a * (1 - 2 * n),
        "C3_5": 2 * a ** 2 - a - 2 * a ** 3 * n,
        "C3_6": f - 2 * n * (2 * n - 1) * a ** 3,
        "C3_7": f + 8 * a ** 3 * n ** 3 + 12 * a ** 3 * n ** 2 + (2 * a ** 3 + 8 * a ** 2) * n,
        "C3_10": f + 8 * a ** 3 * n ** 3 + (4 * a ** 3 - 24 * a ** 2) * n ** 2 + (8 * a ** 4 - 6 * a ** 3 + 8 * a ** 2) * n,
        "C3_11": f - 16 * a * n ** 4 - 24 * a ** 5 * n ** 3
        - (24 * a ** 6 - 60 * a ** 5 + 16 * a ** 4 + 8 * a ** 3 - 48 * a) * n ** 2
        + (24 * a ** 6 - 28 * a ** 5 + 8 * a ** 4 + 6 * a ** 3 - 32 * a) * n,
        "T3_1": f - 96 * a ** 3 * n ** 5 + (16 * a ** 5 - 32 * a ** 4 - 64 * a ** 2) * n ** 4
        + (72 * a ** 7 - 64 * a ** 3) * n ** 3 - (24 * a ** 7 - 120 * a ** 6 + 92 * a ** 5 - 56 * a ** 3 + 128 * a) * n ** 2
        - (80 * a ** 7 - 72 * a ** 6 - 20 * a ** 5 + 104 * a ** 4 - 6 * a ** 3 + 64 * a ** 2 - 128 * a) * n,
        "COR3_1_EVEN": f + (4 * a ** 5 - 8 * a ** 3) * n ** 2 + (4 * a ** 5 - 8 * a ** 4 + 6 * a ** 3) * n,
        "COR3_1_ODD": f - 96 * (a + a ** 2 - 1) * n ** 5 + (16 * a - 96 * a ** 2) * n ** 4
        + (-104 * a ** 3 + 112 * a) * n ** 3 + (56 * a ** 3 - 116 * a + 104 * a ** 2 - 112) * n ** 2
        + (62 * a ** 3 - 116 * a - 56 * a ** 2 + 88) * n,
        "C4_2": 3 * a ** 2 - a - 3 * a ** 2 * n,
        "T4_1": g + 9 * a ** 2 * n ** 3 + 9 * a ** 2 * n ** 2 - 3 * a ** 2 * n,
        "T4_2": g + (54 * a ** 3 - 99 * a ** 2 + 27 * a - 81) * n ** 3
        - (9 * a ** 4 - 27 * a ** 3 - 63 * a ** 2 - 81 * a - 108) * n ** 2
        - (117 * a ** 4 + 117 * a ** 3 + 111 * a ** 2 - 54 * a - 108) * n,
        "T5_1": Fraction(2 * (1 + s) * a ** 2 - 4 * a, 5 * a ** 2 - 10 * a + 4)
        + (-125 * a ** 4 + 250 * a ** 3 * s + 250 * a ** 2 * s + 250 * a * (s - 1)) * n ** 3
        + ((150 * s + 100) * a ** 7 + 300 * a ** 6 + (275 * s - 25) * a ** 4 - 25 * a ** 3 * s
           - 25 * a ** 2 * s - 125 * a * (1 + s)) * n ** 2
        + ((-200 * s - 300) * a ** 7 + (25 - 200 * s) * a ** 6 - (275 * s + 100) * a ** 5
           + (30 * s + 105) * a ** 4 + 270 * a ** 3 * s - 290 * a ** 2 * s + 250 * a * (s - 1)) * n,
    }[spec_id]


def _oracle_modulus(spec_id, n):
    fixed = {"C3_2": 2, "C3_3": 4, "C3_5": 8, "C3_6": 16, "C3_7": 32, "C3_10": 64, "C3_11": 128, "C4_2": 9}
    if spec_id in fixed:
        return fixed[spec_id]
    if spec_id.startswith(("T3", "COR3")):
        return 2 ** (oracle_ord(n, 2) + 8)
    if spec_id.startswith("T4"):
        return 3 ** (oracle_ord(n, 3) + 5)
    return 5 ** (oracle_ord(n, 5) + 4)


@pytest.mark.parametrize("n, p, expected", [(8, 2, 3), (5, 3, 0), (50, 5, 2), (1, 2, 0), (-12, 2, 2)])
def test_ord_p(n, p, expected):
    assert ord_p(n, p) == expected


def test_ord_p_zero():
    with pytest.raises(ValueError):
        ord_p(0, 2)


def test_worked_instances():
    for spec, n, a, m, value in [("T3_1", 5, 1, 256, 167), ("T4_2", 3, 1, 729, 668),
                                 ("T4_1", 2, 3, 243, 51), ("T5_1", 2, 1, 625, 5)]:
        r = verify(spec, n, a)
        assert r.modulus == m
        assert r.lhs.value == r.rhs.value == value
        assert residue_of(_big_rhs(spec, n, a), m) == value
        assert euler_number(2 * n, a) % m == value


def test_worked_instance_c3_2_and_c3_5():
    assert rhs_value("C3_2", 1, 1).value == 1 and rhs_value("C3_2", 1, 1).modulus == 2
    r = verify("C3_5", 2, 1)
    assert r.passed and r.lhs.value == 5 and r.modulus == 8


def test_t3_1_big_integer_value():
    assert _big_rhs("T3_1", 5, 1) == -350809


def test_rhs_matches_big_integer_route():
    rng = random.Random(2024)
    ids = list(SPECS)
    done = 0
    while done < 200:
        spec = SPECS[rng.choice(ids)]
        n = rng.randint(spec.min_n, 300)
        a = rng.randint(-50, 50)
        if spec.domain_violation(n, a):
            continue
        m = _oracle_modulus(spec.id, n)
        r = rhs_value(spec, n, a)
        assert r.modulus == m
        assert r.value == residue_of(_big_rhs(spec.id, n, a), m)
        done += 1


@pytest.mark.parametrize("spec, n, a, why", [
    ("T3_1", 4, 1, "n >= 5"),
    ("T3_1", 5, 0, "nonzero"),
    ("T4_1", 2, 2, "3 | a"),
    ("T4_2", 3, 3, "3 ∤ a"),
    ("COR3_1_EVEN", 6, 3, "2 | a"),
    ("COR3_1_ODD", 6, 4, "2 ∤ a"),
    ("C3_10", 3, 1, "n >= 4"),
])
def test_domain_errors(spec, n, a, why):
    with pytest.raises(DomainError, match=why):
        verify(spec, n, a)
    with pytest.raises(DomainError):
        rhs_value(spec, n, a)


def test_domain_rejects_non_integer_a():
    with pytest.raises(DomainError):
        verify("T5_1", 3, Fraction(1, 2))


def test_unknown_spec():
    with pytest.raises(KeyError):
        verify("T9_9", 5, 1)


def test_modulus_rules():
    for n in range(1, 300):
        assert SPECS["T3_1"].modulus(n) == 2 ** (oracle_ord(n, 2) + 8)
        assert SPECS["T4_1"].modulus(n) == SPECS["T4_2"].modulus(n) == 3 ** (oracle_ord(n, 3) + 5)
        assert SPECS["T5_1"].modulus(n) == 5 ** (oracle_ord(n, 5) + 4)
        assert SPECS["C3_11"].modulus(n) == 128


def test_scan_t3_1_example():
    rep = scan("T3_1", (5, 40), range(-5, 6))
    assert rep.checks == 360
    assert rep.skipped == 36  # a = 0
    assert rep.passed and rep.first_failure is None


def test_scan_filter_accounting():
    rep = scan("T4_1", (2, 30), range(-9, 10))
    assert rep.checks == 29 * 6
    assert rep.skipped == 29 * 13
    assert rep.passed


def test_scan_c3_2():
    rep = scan("C3_2", (1, 10), (1, 4))
    assert rep.checks == 40 and rep.passed


def test_scan_below_min_n_is_skipped():
    rep = scan("T3_1", (1, 6), [1, 2])
    assert rep.checks == 4 and rep.skipped == 8


def test_scan_order_and_reports_match_verify():
    rep = scan("T5_1", (2, 12), [-3, 2, 1], keep_reports=True)
    keys = [(r.n, r.a) for r in rep.reports]
    assert keys == sorted(keys)
    for r in rep.reports:
        assert r == verify("T5_1", r.n, r.a)


def test_scan_parallel_matches_serial():
    serial = scan("T4_2", (3, 60), range(-10, 11), keep_reports=True)
    parallel = scan("T4_2", (3, 60), range(-10, 11), jobs=3, keep_reports=True)
    assert serial.reports == parallel.reports
    assert (serial.checks, serial.skipped) == (parallel.checks, parallel.skipped)


def test_scan_empty_range():
    with pytest.raises(ValueError):
        scan("T3_1", [], [1])


def test_scan_reports_a_wrong_rhs():
    from dataclasses import replace
    wrong = replace(SPECS["C3_5"], rhs=lambda n, a, R: SPECS["C3_5"].rhs(n, a, R) + 1)
    # the package looks specs up by id in workers; run serially through the registry
    SPECS["C3_5_WRONG"] = replace(wrong, id="C3_5_WRONG")
    try:
        rep = scan("C3_5_WRONG", (2, 5), [1, 2])
        assert rep.checks == 8 and len(rep.failures) == 8
        f = rep.first_failure
        assert (f.n, f.a) == (2, 1) and f.lhs.value == 5 and f.rhs.value == 6
    finally:
        del SPECS["C3_5_WRONG"]


def test_consistency_ladder():
    for n in range(5, 51):
        for a in NONZERO:
            top = verify("T3_1", n, a)
            assert top.passed
            for sid in ("C3_11", "C3_10", "C3_7", "C3_6", "C3_5", "C3_3", "C3_2"):
                low = verify(sid, n, a)
                m = low.modulus
                assert top.modulus % m == 0
                assert top.lhs.value % m == low.lhs.value
                assert top.rhs.value % m == low.rhs.value


def test_corollary_agrees_with_theorem():
    for n in range(5, 120):
        for a in range(-20, 21):
            if a == 0:
                continue
            cor = "COR3_1_EVEN" if a % 2 == 0 else "COR3_1_ODD"
            assert rhs_value("T3_1", n, a) == rhs_value(cor, n, a)


def test_closed_forms_recover_the_sequence():
    for a in [a for a in range(-6, 7) if a]:
        E = euler_direct(60, a)
        for n in range(1, 31):
            assert base3_closed_form(n, a) == E[2 * n]
            assert base5_closed_form(n, a) == E[2 * n]
