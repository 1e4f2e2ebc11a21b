"""The generalized Euler numbers ``E_{n,a}``.

    E_{0,a} = 1,    E_{n,a} = -a * sum_{k=1}^{n//2} C(n, 2k) E_{n-2k,a}   (n >= 1)

The recurrence is the only route used to produce values: exactly for rational
``a``, over ``Z[a]`` for the polynomial form, and termwise modulo ``m`` (it has
no divisions) for congruence work.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Callable, Optional

from .exact import Poly, Residue, ResidueRing, Scalar, as_scalar, pascal_row

__all__ = [
    "SequenceTable",
    "build_table",
    "euler_number",
    "euler_number_mod",
    "euler_number_poly",
]


def _extend(values: list, upto: int, mul_a: Callable, zero) -> None:
    # Appends E_{len(values)}..E_{upto} in place.
    for n in range(len(values), upto + 1):
        if n & 1:
            values.append(zero)
            continue
        row = pascal_row(n)
        acc = zero
        for k in range(2, n + 1, 2):
            acc = acc + row[k] * values[n - k]
        values.append(mul_a(acc))


class _PrefixCache:
    """Per-key growable prefix tables, guarded for concurrent readers."""

    def __init__(self, seed: Callable, mul_a: Callable, zero: Callable):
        self._tables: dict = {}
        self._lock = threading.Lock()
        self._seed = seed
        self._mul_a = mul_a
        self._zero = zero

    def get(self, key, upto: int) -> tuple:
        tab = self._tables.get(key)
        if tab is None or len(tab) <= upto:
            with self._lock:
                tab = self._tables.setdefault(key, [self._seed(key)])
                if len(tab) <= upto:
                    _extend(tab, upto, lambda acc: self._mul_a(key, acc), self._zero(key))
        return tuple(tab[: upto + 1])

    def clear(self) -> None:
        with self._lock:
            self._tables.clear()


_exact = _PrefixCache(
    seed=lambda a: 1,
    mul_a=lambda a, acc: as_scalar(-a * acc),
    zero=lambda a: 0,
)

_A = Poly([0, 1], var="a")
_poly = _PrefixCache(
    seed=lambda _: Poly([1], var="a"),
    mul_a=lambda _, acc: -(_A * acc),
    zero=lambda _: Poly((), var="a"),
)

_modular = _PrefixCache(
    seed=lambda key: 1 % key[1],
    mul_a=lambda key, acc: (-key[0] * acc) % key[1],
    zero=lambda key: 0,
)


def exact_values(N: int, a) -> tuple[Scalar, ...]:
    """``(E_{0,a}, ..., E_{N,a})`` over the rationals."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    return _exact.get(as_scalar(a), N)


def poly_values(N: int) -> tuple[Poly, ...]:
    if N < 0:
        raise ValueError("N must be nonnegative")
    return _poly.get(None, N)


def modular_values(N: int, a: int, modulus: int) -> tuple[int, ...]:
    """``E_{k,a} mod modulus`` for ``k <= N`` as plain ints in ``[0, modulus)``."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    return _modular.get((a % modulus, modulus), N)


def euler_number(n: int, a) -> Scalar:
    """``E_{n,a}`` for rational ``a``; an int whenever ``a`` is an int."""
    return exact_values(n, a)[n]


def euler_number_poly(n: int) -> Poly:
    """``E_{n,a}`` as an integer polynomial in ``a``."""
    return poly_values(n)[n]


def euler_number_mod(n: int, a: int, ring: ResidueRing) -> Residue:
    return Residue(modular_values(n, a, ring.modulus)[n], ring)


@dataclass(frozen=True)
class SequenceTable:
    """``E_{0..N}`` in one scalar kind.

    ``mode`` is ``"exact"`` (ints/Fractions), ``"poly"`` (``Poly`` in ``a``; the
    parameter is ``None``) or ``"modular"`` (``Residue`` values in ``ring``).
    """

    mode: str
    parameter: Optional[Scalar]
    values: tuple
    ring: Optional[ResidueRing] = None

    @property
    def N(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int):
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


def build_table(N: int, a=None, mode: str = "exact", ring: Optional[ResidueRing] = None) -> SequenceTable:
    if mode == "exact":
        if a is None:
            raise ValueError("exact mode needs a parameter a")
        a = as_scalar(a)
        return SequenceTable("exact", a, exact_values(N, a))
    if mode == "poly":
        return SequenceTable("poly", None, poly_values(N))
    if mode == "modular":
        if ring is None:
            raise ValueError("modular mode needs a ring")
        a = as_scalar(a)
        if not isinstance(a, int):
            raise ValueError("modular mode needs an integer a")
        vals = tuple(Residue(v, ring) for v in modular_values(N, a, ring.modulus))
        return SequenceTable("modular", a, vals, ring)
    raise ValueError(f"unknown mode {mode!r}")
