"""Prime-power congruences for ``E_{2n,a}`` with nonzero integer ``a``.

Each :class:`CongruenceSpec` pairs a right-hand side with the modulus it is
claimed for. :func:`verify` compares it against ``E_{2n,a}`` computed by the
recurrence in the same residue ring; :func:`scan` runs a grid of instances.
A failing instance is reported as is.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .exact import Residue, ResidueRing, binomial
from .sequence import euler_number_mod, exact_values, modular_values

__all__ = [
    "SPECS",
    "CongruenceReport",
    "CongruenceSpec",
    "DomainError",
    "ScanReport",
    "ord_p",
    "rhs_value",
    "scan",
    "verify",
]


class DomainError(ValueError):
    """An (n, a) pair outside the hypotheses of a congruence."""


def ord_p(n: int, p: int) -> int:
    """Exponent of the prime ``p`` in ``n``."""
    if n == 0:
        raise ValueError("ord_p(0) is undefined")
    if p < 2:
        raise ValueError("p must be >= 2")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


# -- right-hand sides, evaluated termwise in the ring ------------------------


def _rhs_c3_2(n, a, R):
    return R(a)


def _rhs_c3_3(n, a, R):
    return R(a * (1 - 2 * n))


def _rhs_c3_5(n, a, R):
    return R(2 * a ** 2 - a - 2 * a ** 3 * n)


def _rhs_c3_6(n, a, R):
    return R.frac(a, 2 * a - 1) - R(2 * n * (2 * n - 1) * a ** 3)


def _rhs_c3_7(n, a, R):
    return R.frac(a, 2 * a - 1) + R(8 * a ** 3 * n ** 3) + R(12 * a ** 3 * n ** 2) + R((2 * a ** 3 + 8 * a ** 2) * n)


def _rhs_c3_10(n, a, R):
    return (R.frac(a, 2 * a - 1) + R(8 * a ** 3 * n ** 3) + R((4 * a ** 3 - 24 * a ** 2) * n ** 2)
            + R((8 * a ** 4 - 6 * a ** 3 + 8 * a ** 2) * n))


def _rhs_c3_11(n, a, R):
    return (R.frac(a, 2 * a - 1) - R(16 * a * n ** 4) - R(24 * a ** 5 * n ** 3)
            - R((24 * a ** 6 - 60 * a ** 5 + 16 * a ** 4 + 8 * a ** 3 - 48 * a) * n ** 2)
            + R((24 * a ** 6 - 28 * a ** 5 + 8 * a ** 4 + 6 * a ** 3 - 32 * a) * n))


def _rhs_t3_1(n, a, R):
    return (R.frac(a, 2 * a - 1)
            - R(96 * a ** 3 * n ** 5)
            + R((16 * a ** 5 - 32 * a ** 4 - 64 * a ** 2) * n ** 4)
            + R((72 * a ** 7 - 64 * a ** 3) * n ** 3)
            - R((24 * a ** 7 - 120 * a ** 6 + 92 * a ** 5 - 56 * a ** 3 + 128 * a) * n ** 2)
            - R((80 * a ** 7 - 72 * a ** 6 - 20 * a ** 5 + 104 * a ** 4 - 6 * a ** 3 + 64 * a ** 2 - 128 * a) * n))


def _rhs_cor3_1_even(n, a, R):
    return (R.frac(a, 2 * a - 1) + R((4 * a ** 5 - 8 * a ** 3) * n ** 2)
            + R((4 * a ** 5 - 8 * a ** 4 + 6 * a ** 3) * n))


def _rhs_cor3_1_odd(n, a, R):
    return (R.frac(a, 2 * a - 1)
            - R(96 * (a + a ** 2 - 1) * n ** 5)
            + R((16 * a - 96 * a ** 2) * n ** 4)
            + R((-104 * a ** 3 + 112 * a) * n ** 3)
            + R((56 * a ** 3 - 116 * a + 104 * a ** 2 - 112) * n ** 2)
            + R((62 * a ** 3 - 116 * a - 56 * a ** 2 + 88) * n))


def _rhs_c4_2(n, a, R):
    return R(3 * a ** 2 - a - 3 * a ** 2 * n)


def _rhs_t4_1(n, a, R):
    return R.frac(2 * a, 3 * a - 2) + R(9 * a ** 2 * n ** 3) + R(9 * a ** 2 * n ** 2) - R(3 * a ** 2 * n)


def _rhs_t4_2(n, a, R):
    return (R.frac(2 * a, 3 * a - 2)
            + R((54 * a ** 3 - 99 * a ** 2 + 27 * a - 81) * n ** 3)
            - R((9 * a ** 4 - 27 * a ** 3 - 63 * a ** 2 - 81 * a - 108) * n ** 2)
            - R((117 * a ** 4 + 117 * a ** 3 + 111 * a ** 2 - 54 * a - 108) * n))


def _rhs_t5_1(n, a, R):
    s = 1 if n % 2 == 0 else -1
    return (R.frac(2 * (1 + s) * a ** 2 - 4 * a, 5 * a ** 2 - 10 * a + 4)
            + R((-125 * a ** 4 + 250 * a ** 3 * s + 250 * a ** 2 * s + 250 * a * (s - 1)) * n ** 3)
            + R(((150 * s + 100) * a ** 7 + 300 * a ** 6 + (275 * s - 25) * a ** 4 - 25 * a ** 3 * s
                 - 25 * a ** 2 * s - 125 * a * (1 + s)) * n ** 2)
            + R(((-200 * s - 300) * a ** 7 + (25 - 200 * s) * a ** 6 - (275 * s + 100) * a ** 5
                 + (30 * s + 105) * a ** 4 + 270 * a ** 3 * s - 290 * a ** 2 * s + 250 * a * (s - 1)) * n))


# -- specs -------------------------------------------------------------------


def _nonzero(a: int) -> Optional[str]:
    return None


def _even(a: int) -> Optional[str]:
    return None if a % 2 == 0 else "needs 2 | a"


def _odd(a: int) -> Optional[str]:
    return None if a % 2 else "needs 2 ∤ a"


def _div3(a: int) -> Optional[str]:
    return None if a % 3 == 0 else "needs 3 | a"


def _nondiv3(a: int) -> Optional[str]:
    return None if a % 3 else "needs 3 ∤ a"


@dataclass(frozen=True)
class CongruenceSpec:
    """One congruence ``E_{2n,a} == rhs(n, a)`` modulo ``p^(ord_p(n) + shift)``.

    With ``p_adic=False`` the modulus is the constant ``prime**shift``.
    """

    id: str
    min_n: int
    prime: int
    shift: int
    p_adic: bool
    rhs: Callable[[int, int, ResidueRing], Residue] = field(repr=False)
    a_domain: Callable[[int], Optional[str]] = field(default=_nonzero, repr=False)
    a_domain_label: str = "a != 0"

    def modulus(self, n: int) -> int:
        if self.p_adic:
            return self.prime ** (ord_p(n, self.prime) + self.shift)
        return self.prime ** self.shift

    def domain_violation(self, n: int, a: int) -> Optional[str]:
        if not isinstance(a, int) or isinstance(a, bool):
            return "a must be an integer"
        if a == 0:
            return "a must be nonzero"
        if n < self.min_n:
            return f"needs n >= {self.min_n}"
        return self.a_domain(a)

    def check_domain(self, n: int, a: int) -> None:
        why = self.domain_violation(n, a)
        if why:
            raise DomainError(f"{self.id} at n={n}, a={a}: {why}")


def _spec(id, min_n, prime, shift, p_adic, rhs, dom=_nonzero, label="a != 0"):
    return CongruenceSpec(id, min_n, prime, shift, p_adic, rhs, dom, label)


SPECS: dict[str, CongruenceSpec] = {s.id: s for s in [
    _spec("C3_2", 1, 2, 1, False, _rhs_c3_2),
    _spec("C3_3", 1, 2, 2, False, _rhs_c3_3),
    _spec("C3_5", 2, 2, 3, False, _rhs_c3_5),
    _spec("C3_6", 2, 2, 4, False, _rhs_c3_6),
    _spec("C3_7", 2, 2, 5, False, _rhs_c3_7),
    _spec("C3_10", 4, 2, 6, False, _rhs_c3_10),
    _spec("C3_11", 4, 2, 7, False, _rhs_c3_11),
    _spec("T3_1", 5, 2, 8, True, _rhs_t3_1),
    _spec("COR3_1_EVEN", 5, 2, 8, True, _rhs_cor3_1_even, _even, "2 | a"),
    _spec("COR3_1_ODD", 5, 2, 8, True, _rhs_cor3_1_odd, _odd, "2 ∤ a"),
    _spec("C4_2", 2, 3, 2, False, _rhs_c4_2),
    _spec("T4_1", 2, 3, 5, True, _rhs_t4_1, _div3, "3 | a"),
    _spec("T4_2", 3, 3, 5, True, _rhs_t4_2, _nondiv3, "3 ∤ a"),
    _spec("T5_1", 2, 5, 4, True, _rhs_t5_1),
]}


def get_spec(spec) -> CongruenceSpec:
    if isinstance(spec, CongruenceSpec):
        return spec
    try:
        return SPECS[spec]
    except KeyError:
        raise KeyError(f"unknown congruence {spec!r}; known: {', '.join(SPECS)}") from None


def rhs_value(spec, n: int, a: int) -> Residue:
    spec = get_spec(spec)
    spec.check_domain(n, a)
    return spec.rhs(n, a, ResidueRing(spec.modulus(n)))


# -- verification ------------------------------------------------------------


@dataclass(frozen=True)
class CongruenceReport:
    spec: str
    n: int
    a: int
    modulus: int
    lhs: Residue
    rhs: Residue

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def as_dict(self) -> dict:
        return {"spec": self.spec, "n": self.n, "a": str(self.a), "modulus": str(self.modulus),
                "lhs": str(self.lhs.value), "rhs": str(self.rhs.value)}


def _report(spec: CongruenceSpec, n: int, a: int, lhs_value: int) -> CongruenceReport:
    m = spec.modulus(n)
    ring = ResidueRing(m)
    rhs = spec.rhs(n, a, ring)
    if rhs.modulus != m:
        raise AssertionError(f"{spec.id}: rhs computed in the wrong ring")
    return CongruenceReport(spec.id, n, a, m, ring(lhs_value), rhs)


def verify(spec, n: int, a: int) -> CongruenceReport:
    spec = get_spec(spec)
    spec.check_domain(n, a)
    ring = ResidueRing(spec.modulus(n))
    return _report(spec, n, a, euler_number_mod(2 * n, a, ring).value)


@dataclass
class ScanReport:
    spec: str
    n_range: tuple[int, int]
    a_values: tuple[int, ...]
    checks: int = 0
    skipped: int = 0
    failures: list[CongruenceReport] = field(default_factory=list)
    reports: list[CongruenceReport] = field(default_factory=list, repr=False)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def first_failure(self) -> Optional[CongruenceReport]:
        return self.failures[0] if self.failures else None


def _scan_one_a(spec_id: str, ns: tuple[int, ...], a: int, keep: bool):
    spec = SPECS[spec_id]
    good = [n for n in ns if spec.domain_violation(n, a) is None]
    skipped = len(ns) - len(good)
    if not good:
        return a, skipped, []
    # Every modulus here is a power of one prime, so the largest is a common multiple.
    big = max(spec.modulus(n) for n in good)
    E = modular_values(2 * max(good), a, big)
    out = []
    for n in good:
        r = _report(spec, n, a, E[2 * n])
        if keep or not r.passed:
            out.append(r)
    return a, skipped, out


def _as_range(r) -> tuple[int, ...]:
    if isinstance(r, range):
        return tuple(r)
    if isinstance(r, tuple) and len(r) == 2 and all(isinstance(v, int) for v in r):
        lo, hi = r
        return tuple(range(lo, hi + 1))
    return tuple(r)


def scan(spec, n_range, a_range, jobs: int = 1, keep_reports: bool = False) -> ScanReport:
    """Verify ``spec`` on every (n, a) in the grid, ascending n then ascending a.

    Ranges are iterables or inclusive ``(lo, hi)`` pairs. Pairs outside the
    spec's hypotheses are skipped and counted.
    """
    spec = get_spec(spec)
    ns = tuple(sorted(set(_as_range(n_range))))
    As = tuple(sorted(set(_as_range(a_range))))
    if not ns or not As:
        raise ValueError("scan ranges must be nonempty")
    args = [(spec.id, ns, a, keep_reports) for a in As]
    if jobs > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_one_a, *zip(*args)))
    else:
        results = [_scan_one_a(*x) for x in args]
    report = ScanReport(spec.id, (ns[0], ns[-1]), As)
    rows = []
    for a, skipped, reps in results:
        report.skipped += skipped
        rows.extend(reps)
    report.checks = len(ns) * len(As) - report.skipped
    rows.sort(key=lambda r: (r.n, r.a))
    report.failures = [r for r in rows if not r.passed]
    if keep_reports:
        report.reports = rows
    return report


# -- exact closed forms behind the congruences -------------------------------


def base3_closed_form(n: int, a: int) -> Fraction:
    """``E_{2n,a}`` recovered from the lower terms through the base-3 power sum.

    ``(2^(2n+1) a^2 + 4a(a-1) - a^3 n sum_k C(2n-1,2k-1) 3^2k/k E_{2n-2k,a}) / (3a-2)^2``
    """
    E = exact_values(2 * n, a)
    s = sum(Fraction(binomial(2 * n - 1, 2 * k - 1) * 9 ** k, k) * E[2 * n - 2 * k] for k in range(1, n + 1))
    return (2 ** (2 * n + 1) * a ** 2 + 4 * a * (a - 1) - a ** 3 * n * s) / Fraction((3 * a - 2) ** 2)


def base5_closed_form(n: int, a: int) -> Fraction:
    """``E_{2n,a}`` recovered from the lower terms through the base-5 power sum."""
    E = exact_values(2 * n, a)
    s = sum(binomial(2 * n, 2 * k) * 25 ** k * E[2 * n - 2 * k] for k in range(1, n + 1))
    num = (2 * 4 ** (2 * n) * a ** 4 + (3 * a ** 4 - 8 * a ** 3 + 4 * a ** 2) * 2 ** (2 * n + 1)
           + 4 * (a ** 4 - a ** 3) * 3 ** (2 * n) + 8 * (a ** 4 - 5 * a ** 3 + 6 * a ** 2 - 2 * a) - a ** 5 * s)
    return Fraction(num, (5 * (a - 1) ** 2 - 1) ** 2)
