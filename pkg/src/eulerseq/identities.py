"""The polynomials ``E_{n,a}(x)`` and exact checks of the identities they satisfy.

Every check builds both sides exactly and reports their difference; a check
passes only when that difference is literally zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Optional, Sequence

from .exact import Poly, Scalar, TruncatedSeries, as_scalar, binomial, series_mul
from .sequence import exact_values

__all__ = [
    "EulerPolynomial",
    "IdentityReport",
    "check_addition",
    "check_complement",
    "check_mixed_convolution",
    "check_powersum_theorem",
    "check_quartic",
    "check_reflection",
    "check_row_sum",
    "check_three_term",
    "check_weighted_powersum",
    "egf_residual",
    "euler_polynomial",
    "forward_transform",
    "forward_weights",
    "inverse_transform",
]

X = Poly([0, 1])


@dataclass(frozen=True)
class EulerPolynomial:
    n: int
    a: Scalar
    coeffs: Poly

    def __call__(self, x):
        return self.coeffs(x)


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    params: dict
    lhs: Any
    rhs: Any
    residual: Any
    passed: bool
    note: str = ""
    secondary: Optional["IdentityReport"] = field(default=None, repr=False)

    @classmethod
    def compare(cls, identity: str, params: dict, lhs, rhs, **kw) -> "IdentityReport":
        residual = lhs - rhs
        return cls(identity, params, lhs, rhs, residual, _is_zero(residual), **kw)

    @property
    def ok(self) -> bool:
        return self.passed and (self.secondary is None or self.secondary.ok)


def _is_zero(v) -> bool:
    if isinstance(v, Poly):
        return v.is_zero()
    if isinstance(v, TruncatedSeries):
        return v.is_zero()
    return v == 0


def _require_nonzero(a):
    if a == 0:
        raise ValueError("this identity needs a != 0")


@lru_cache(maxsize=4096)
def _euler_poly(n: int, a: Scalar) -> EulerPolynomial:
    E = exact_values(n, a)
    # coefficient of x^(n-k) is C(n,k) E_k
    coeffs = [binomial(n, k) * E[k] for k in range(n, -1, -1)]
    return EulerPolynomial(n, a, Poly(coeffs))


def euler_polynomial(n: int, a) -> EulerPolynomial:
    """``E_{n,a}(x) = sum_k C(n,k) E_{k,a} x^(n-k)``, monic of degree ``n``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _euler_poly(n, as_scalar(a))


def _E(n: int, a) -> Poly:
    return euler_polynomial(n, a).coeffs


def egf_residual(N: int, a) -> TruncatedSeries:
    """``(1 + a sum_{k>=1} t^2k/(2k)!) * sum E_{n,a} t^n/n!  -  1`` up to ``t^N``."""
    a = as_scalar(a)
    denom = [1] + [a if k % 2 == 0 else 0 for k in range(1, N + 1)]
    lhs = series_mul(TruncatedSeries.from_egf(denom, N), TruncatedSeries.from_egf(exact_values(N, a), N))
    return lhs - TruncatedSeries.one(N)


def check_egf(N: int, a) -> IdentityReport:
    res = egf_residual(N, a)
    return IdentityReport("egf", {"order": N, "a": as_scalar(a)}, res + TruncatedSeries.one(N),
                          TruncatedSeries.one(N), res, res.is_zero())


def check_reflection(n: int, a) -> IdentityReport:
    """``E_{n,a}(1-x) == sum_k C(n,k) (-1)^k E_{k,a}(x)``."""
    a = as_scalar(a)
    lhs = _E(n, a).compose(Poly([1, -1]))
    rhs = Poly(())
    for k in range(n + 1):
        rhs = rhs + _E(k, a) * ((-1) ** k * binomial(n, k))
    return IdentityReport.compare("reflection", {"n": n, "a": a}, lhs, rhs)


def check_three_term(n: int, a) -> IdentityReport:
    """``a/2 (E(x+1) + E(x-1)) + (1-a) E(x) == x^n``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    a = as_scalar(a)
    E = _E(n, a)
    lhs = (E.shift(1) + E.shift(-1)) * Fraction(a, 2) + E * (1 - a)
    return IdentityReport.compare("three_term", {"n": n, "a": a}, lhs, X ** n)


def check_addition(n: int, a, y) -> IdentityReport:
    """``E_{n,a}(x+y) == sum_k C(n,k) E_{k,a}(x) y^(n-k)``."""
    a, y = as_scalar(a), as_scalar(y)
    lhs = _E(n, a).shift(y)
    rhs = Poly(())
    for k in range(n + 1):
        rhs = rhs + _E(k, a) * (binomial(n, k) * y ** (n - k))
    return IdentityReport.compare("addition", {"n": n, "a": a, "y": y}, lhs, rhs)


def _three_term_weight(k: int, a: Scalar, y: Scalar) -> Scalar:
    return as_scalar(Fraction(a, 2) * ((y + 1) ** k + (y - 1) ** k) + (1 - a) * y ** k)


def check_mixed_convolution(n: int, a, y) -> IdentityReport:
    """``sum_k C(n,k) E_{n-k,a}(x) {a/2((y+1)^k + (y-1)^k) + (1-a) y^k} == (x+y)^n``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    a, y = as_scalar(a), as_scalar(y)
    lhs = Poly(())
    for k in range(n + 1):
        w = _three_term_weight(k, a, y)
        if w:
            lhs = lhs + _E(n - k, a) * (binomial(n, k) * w)
    rhs = Poly([y, 1]) ** n
    return IdentityReport.compare("mixed", {"n": n, "a": a, "y": y}, lhs, rhs)


def check_complement(n: int, a) -> IdentityReport:
    """``E_{n,a}(x) == x^n - a sum_{k=1}^{n//2} C(n,2k) E_{n-2k,a}(x)``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    a = as_scalar(a)
    rhs = X ** n
    for k in range(1, n // 2 + 1):
        rhs = rhs - _E(n - 2 * k, a) * (a * binomial(n, 2 * k))
    return IdentityReport.compare("complement", {"n": n, "a": a}, _E(n, a), rhs)


def check_row_sum(n: int, a) -> IdentityReport:
    """``sum_{k=1}^n C(2n,2k) E_{2n-2k,a} == -E_{2n,a}/a``."""
    a = as_scalar(a)
    _require_nonzero(a)
    E = exact_values(2 * n, a)
    lhs = sum(binomial(2 * n, 2 * k) * E[2 * n - 2 * k] for k in range(1, n + 1))
    rhs = -Fraction(E[2 * n]) / a
    return IdentityReport.compare("row_sum", {"n": n, "a": a}, as_scalar(lhs), as_scalar(rhs))


def check_weighted_powersum(x0, n: int, a) -> IdentityReport:
    """Both sides of the even-index power-sum identity at ``x = x0``.

    ``a/2 sum_{k=1}^n C(2n,2k) E_{2n-2k,a} ((x+1)^2k + (x-1)^2k)
    + (1-a) sum_{k=1}^n C(2n,2k) E_{2n-2k,a} x^2k == x^2n - E_{2n,a}``
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    a, x = as_scalar(a), as_scalar(x0)
    E = exact_values(2 * n, a)
    lhs = Fraction(0)
    for k in range(1, n + 1):
        c = binomial(2 * n, 2 * k) * E[2 * n - 2 * k]
        lhs += Fraction(a, 2) * c * ((x + 1) ** (2 * k) + (x - 1) ** (2 * k)) + (1 - a) * c * x ** (2 * k)
    rhs = x ** (2 * n) - E[2 * n]
    return IdentityReport.compare("weighted_powersum", {"x0": x, "n": n, "a": a}, as_scalar(lhs), as_scalar(rhs))


def _powersum_rhs(base: int, n: int, a: Fraction, e2n) -> Fraction:
    if base == 2:
        return 2 / a + (2 - 4 * a) / a ** 2 * e2n
    if base == 3:
        return 2 ** (2 * n + 1) / a + 4 * (a - 1) / a ** 2 - (3 * a - 2) ** 2 / a ** 3 * e2n
    if base == 4:
        return (2 * (3 ** (2 * n) - 1) / a + 8 * (a - 1) ** 2 / a ** 3
                + 2 ** (2 * n + 2) * (a - 1) / a ** 2
                - 8 * (a - 1) ** 2 * (2 * a - 1) / a ** 4 * e2n)
    if base == 5:
        return (2 * 4 ** (2 * n) / a + (3 * a ** 2 - 8 * a + 4) * 2 ** (2 * n + 1) / a ** 3
                + 4 * (a - 1) * 3 ** (2 * n) / a ** 2
                + 8 * (a - 1) * (a ** 2 - 4 * a + 2) / a ** 4
                - (5 * a ** 2 - 10 * a + 4) ** 2 / a ** 5 * e2n)
    raise ValueError(f"base must be 2, 3, 4 or 5, got {base}")


def check_powersum_theorem(base: int, n: int, a) -> IdentityReport:
    """``sum_{k=1}^n C(2n,2k) base^2k E_{2n-2k,a}`` against its closed form in ``E_{2n,a}``.

    For ``base == 2`` the report also carries (as ``secondary``) the solved
    form ``E_{2n,a} = a/(2a-1) - a^2 n/(2(2a-1)) sum C(2n-1,2k-1) 4^k/k E_{2n-2k,a}``,
    which is skipped at ``a == 1/2``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    a = as_scalar(a)
    _require_nonzero(a)
    fa = Fraction(a)
    E = exact_values(2 * n, a)
    lhs = sum(binomial(2 * n, 2 * k) * base ** (2 * k) * E[2 * n - 2 * k] for k in range(1, n + 1))
    rhs = _powersum_rhs(base, n, fa, E[2 * n])
    params = {"base": base, "n": n, "a": a}
    secondary = None
    note = ""
    if base == 2:
        if fa == Fraction(1, 2):
            note = "solved form skipped: a = 1/2"
        else:
            s = sum(Fraction(binomial(2 * n - 1, 2 * k - 1) * 4 ** k, k) * E[2 * n - 2 * k]
                    for k in range(1, n + 1))
            solved = fa / (2 * fa - 1) - fa ** 2 * n / (2 * (2 * fa - 1)) * s
            secondary = IdentityReport.compare("powersum_2_solved", params, as_scalar(E[2 * n]), as_scalar(solved))
    return IdentityReport.compare(f"powersum_{base}", params, as_scalar(lhs), as_scalar(rhs),
                                  note=note, secondary=secondary)


def _real_part_power(x: Scalar, n: int) -> Scalar:
    # ((x+i)^n + (x-i)^n) / 2 = sum_{k even} C(n,k) (-1)^(k/2) x^(n-k)
    return sum(binomial(n, k) * (-1) ** (k // 2) * x ** (n - k) for k in range(0, n + 1, 2))


def check_quartic(n: int, a, x0=0, general: bool = False) -> IdentityReport:
    """Every-fourth-term convolution identities.

    ``general``: ``sum_{k=1}^{n//4} C(n,4k) E_{n-4k,a}(x) (2(1-a) + a(-4)^k)
    == ((x+i)^n + (x-i)^n)/2 + (1-a)/a x^n - E_{n,a}(x)/a`` at ``x = x0``.

    Otherwise the ``x = 0``, index ``2n`` form:
    ``sum_{k=1}^{n//2} C(2n,4k) E_{2n-4k,a} (a(-4)^k + 2(1-a)) == (-1)^n - E_{2n,a}/a``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    a = as_scalar(a)
    _require_nonzero(a)
    fa = Fraction(a)
    if general:
        x = as_scalar(x0)
        lhs = sum(binomial(n, 4 * k) * euler_polynomial(n - 4 * k, a)(x) * (2 * (1 - fa) + fa * (-4) ** k)
                  for k in range(1, n // 4 + 1))
        rhs = _real_part_power(x, n) + (1 - fa) / fa * x ** n - euler_polynomial(n, a)(x) / fa
        params = {"n": n, "a": a, "x0": x}
        ident = "quartic_general"
    else:
        E = exact_values(2 * n, a)
        lhs = sum(binomial(2 * n, 4 * k) * E[2 * n - 4 * k] * (fa * (-4) ** k + 2 * (1 - fa))
                  for k in range(1, n // 2 + 1))
        rhs = (-1) ** n - E[2 * n] / fa
        params = {"n": n, "a": a}
        ident = "quartic"
    return IdentityReport.compare(ident, params, as_scalar(lhs), as_scalar(rhs))


# -- inversion pair ----------------------------------------------------------


def forward_weights(N: int, x0, a) -> list[Scalar]:
    """``w_k = (1-a)(-x)^k + a/2 ((1-x)^k + (-1-x)^k)`` for ``k <= N``."""
    a, x = as_scalar(a), as_scalar(x0)
    return [as_scalar((1 - a) * (-x) ** k + Fraction(a, 2) * ((1 - x) ** k + (-1 - x) ** k))
            for k in range(N + 1)]


def _binomial_convolve(weights: Sequence, seq: Sequence) -> list[Scalar]:
    return [as_scalar(sum(binomial(n, k) * weights[k] * seq[n - k] for k in range(n + 1)))
            for n in range(len(seq))]


def forward_transform(seq: Sequence, x0, a) -> list[Scalar]:
    """``b_n = sum_k C(n,k) w_k a_{n-k}`` with the three-term weights ``w_k``."""
    seq = [as_scalar(s) for s in seq]
    if not seq:
        return []
    return _binomial_convolve(forward_weights(len(seq) - 1, x0, a), seq)


def inverse_transform(seq: Sequence, x0, a) -> list[Scalar]:
    """``a_n = sum_k C(n,k) E_{k,a}(x0) b_{n-k}``."""
    seq = [as_scalar(s) for s in seq]
    if not seq:
        return []
    a, x = as_scalar(a), as_scalar(x0)
    weights = [euler_polynomial(k, a)(x) for k in range(len(seq))]
    return _binomial_convolve(weights, seq)


def even_forward_transform(seq: Sequence, a) -> list[Scalar]:
    """The ``x0 = 0`` specialization: ``b_n = a sum_k C(n,2k) a_{n-2k} + (1-a) a_n``."""
    a = as_scalar(a)
    seq = [as_scalar(s) for s in seq]
    return [as_scalar(a * sum(binomial(n, 2 * k) * seq[n - 2 * k] for k in range(n // 2 + 1)) + (1 - a) * seq[n])
            for n in range(len(seq))]


def even_inverse_transform(seq: Sequence, a) -> list[Scalar]:
    """``a_n = sum_k C(n,2k) E_{2k,a} b_{n-2k}``."""
    a = as_scalar(a)
    seq = [as_scalar(s) for s in seq]
    E = exact_values(max(len(seq) - 1, 0), a)
    return [as_scalar(sum(binomial(n, 2 * k) * E[2 * k] * seq[n - 2 * k] for k in range(n // 2 + 1)))
            for n in range(len(seq))]


def check_transform_roundtrip(seq: Sequence, x0, a) -> IdentityReport:
    seq = [as_scalar(s) for s in seq]
    back = inverse_transform(forward_transform(seq, x0, a), x0, a)
    residual = [u - v for u, v in zip(back, seq)]
    return IdentityReport("transform_roundtrip", {"x0": as_scalar(x0), "a": as_scalar(a), "length": len(seq)},
                          back, seq, residual, not any(residual))
