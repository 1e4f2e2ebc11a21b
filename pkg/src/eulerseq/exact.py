"""Exact arithmetic substrate: binomials, dense polynomials, truncated series, residue rings.

Integers are plain Python ``int`` and rationals are :class:`fractions.Fraction`.
Everything here is immutable once built.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


def as_scalar(v) -> Scalar:
    """Coerce to ``int`` when the value is integral, else to ``Fraction``."""
    if isinstance(v, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        v = Fraction(v)
    if isinstance(v, Rational):
        f = Fraction(v)
        return f.numerator if f.denominator == 1 else f
    raise TypeError(f"cannot use {v!r} as an exact scalar")


# -- binomials ---------------------------------------------------------------

_rows: list[tuple[int, ...]] = [(1,)]
_rows_lock = threading.Lock()


def pascal_row(n: int) -> tuple[int, ...]:
    """Row ``n`` of Pascal's triangle, memoized (rows are built on demand)."""
    if n < 0:
        raise ValueError("row index must be nonnegative")
    if n < len(_rows):
        return _rows[n]
    with _rows_lock:
        while len(_rows) <= n:
            prev = _rows[-1]
            _rows.append((1,) + tuple(prev[i] + prev[i + 1] for i in range(len(prev) - 1)) + (1,))
    return _rows[n]


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise ValueError("binomial(n, k) needs n >= 0")
    if k < 0 or k > n:
        return 0
    return pascal_row(n)[k]


# -- dense polynomials -------------------------------------------------------


def _trim(coeffs: Iterable) -> tuple[Scalar, ...]:
    cs = [as_scalar(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class Poly:
    """Dense univariate polynomial; ``coeffs[i]`` multiplies ``var**i``.

    Coefficients are ints or Fractions. The zero polynomial has no coefficients.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "x"):
        object.__setattr__(self, "coeffs", _trim(coeffs))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, c, var: str = "x") -> Poly:
        return cls([c], var)

    @classmethod
    def monomial(cls, degree: int, c=1, var: str = "x") -> Poly:
        return cls([0] * degree + [c], var)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def kind(self) -> str:
        return "integer" if all(isinstance(c, int) for c in self.coeffs) else "rational"

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Scalar:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r}, var={self.var!r})"

    def __str__(self) -> str:
        return format_poly(self)

    def _lift(self, other) -> Poly:
        if isinstance(other, Poly):
            return other
        return Poly([other], self.var)

    def __add__(self, other) -> Poly:
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self.coeff(i) + other.coeff(i) for i in range(n)], self.var)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly([-c for c in self.coeffs], self.var)

    def __sub__(self, other) -> Poly:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> Poly:
        return self._lift(other) - self

    def __mul__(self, other) -> Poly:
        if not isinstance(other, Poly):
            c = as_scalar(other)
            return Poly([c * x for x in self.coeffs], self.var)
        if not self.coeffs or not other.coeffs:
            return Poly((), self.var)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return Poly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Poly:
        if e < 0:
            raise ValueError("negative exponent")
        result = Poly([1], self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, v):
        return poly_eval(self, v)

    def compose(self, inner: Poly) -> Poly:
        """``self(inner(x))`` by Horner's scheme."""
        result = Poly((), inner.var)
        for c in reversed(self.coeffs):
            result = result * inner + c
        return result

    def shift(self, c) -> Poly:
        """``self(x + c)``."""
        return self.compose(Poly([c, 1], self.var))


def poly_eval(p: Poly, v) -> Scalar:
    """Horner evaluation at an exact scalar."""
    acc: Scalar = 0
    for c in reversed(p.coeffs):
        acc = acc * v + c
    return as_scalar(acc)


def format_poly(p: Poly) -> str:
    """Ascending-degree text form such as ``-1*a + 126*a^2``."""
    terms = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        if i == 0:
            body = str(abs(c))
        elif i == 1:
            body = f"{abs(c)}*{p.var}"
        else:
            body = f"{abs(c)}*{p.var}^{i}"
        if not terms:
            terms.append(("-" if c < 0 else "") + body)
        else:
            terms.append(("- " if c < 0 else "+ ") + body)
    return " ".join(terms) if terms else "0"


# -- truncated power series --------------------------------------------------


@dataclass(frozen=True)
class TruncatedSeries:
    """Taylor coefficients ``c_0..c_order`` of a power series in ``t``."""

    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        cs = tuple(Fraction(c) for c in self.coeffs)[: self.order + 1]
        cs += (Fraction(0),) * (self.order + 1 - len(cs))
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def from_egf(cls, values: Sequence, order: int) -> TruncatedSeries:
        """Series ``sum values[k] t^k / k!`` truncated at ``order``."""
        cs = []
        fact = 1
        for k in range(order + 1):
            if k:
                fact *= k
            v = values[k] if k < len(values) else 0
            cs.append(Fraction(v) / fact)
        return cls(order, tuple(cs))

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls(order, (Fraction(1),))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def egf_values(self) -> list[Fraction]:
        """Coefficients rescaled by ``k!``."""
        out = []
        fact = 1
        for k, c in enumerate(self.coeffs):
            if k:
                fact *= k
            out.append(c * fact)
        return out

    def _check(self, other: TruncatedSeries):
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} != {other.order}")

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        return TruncatedSeries(self.order, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        return TruncatedSeries(self.order, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_mul(self, other)


def series_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order."""
    f._check(g)
    fc, gc = f.coeffs, g.coeffs
    out = []
    for k in range(f.order + 1):
        out.append(sum((fc[i] * gc[k - i] for i in range(k + 1)), Fraction(0)))
    return TruncatedSeries(f.order, tuple(out))


# -- residue rings -----------------------------------------------------------


class NotInvertibleError(ArithmeticError):
    def __init__(self, x: int, modulus: int, gcd: int):
        super().__init__(f"{x} is not invertible mod {modulus}: gcd = {gcd}")
        self.x = x
        self.modulus = modulus
        self.gcd = gcd


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b)``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


@dataclass(frozen=True)
class ResidueRing:
    modulus: int

    def __post_init__(self):
        if not isinstance(self.modulus, int) or self.modulus < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {self.modulus!r}")

    def __call__(self, x: int) -> Residue:
        return Residue(x % self.modulus, self)

    def frac(self, num: int, den: int) -> Residue:
        """``num / den`` realized as ``num * den^-1``."""
        return self(num) * mod_inverse(den, self)

    def __str__(self) -> str:
        return f"Z/{self.modulus}Z"


@dataclass(frozen=True)
class Residue:
    value: int
    ring: ResidueRing

    def __post_init__(self):
        if not 0 <= self.value < self.ring.modulus:
            raise ValueError(f"{self.value} is not reduced mod {self.ring.modulus}")

    @property
    def modulus(self) -> int:
        return self.ring.modulus

    def _other(self, other) -> int:
        if isinstance(other, Residue):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self.ring(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self.ring(self.value - o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self.ring(o - self.value)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self.ring(self.value * o)

    __rmul__ = __mul__

    def __neg__(self):
        return self.ring(-self.value)

    def __pow__(self, e: int):
        if e < 0:
            return mod_inverse(self.value, self.ring) ** (-e)
        return Residue(pow(self.value, e, self.modulus), self.ring)

    def inverse(self) -> Residue:
        return mod_inverse(self.value, self.ring)

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return f"{self.value} (mod {self.modulus})"


def mod_reduce(x: int, ring: ResidueRing) -> Residue:
    return ring(x)


def mod_inverse(x: int, ring: ResidueRing) -> Residue:
    m = ring.modulus
    g, s, _ = extended_gcd(x % m, m)
    if g != 1:
        raise NotInvertibleError(x, m, g)
    return ring(s)
