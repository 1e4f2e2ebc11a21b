"""Reference computations that share no code path with the package."""

from fractions import Fraction
from math import comb, factorial


def secant_numbers(count):
    """Euler zigzag numbers at even index (1, 1, 5, 61, ...) via the Seidel triangle."""
    row = [1]
    zigzag = [1]
    for n in range(1, 2 * count):
        new = [0] * (n + 1)
        if n % 2:
            for k in range(1, n + 1):
                new[k] = new[k - 1] + row[k - 1]
            zigzag.append(new[n])
        else:
            for k in range(n - 1, -1, -1):
                new[k] = new[k + 1] + row[k]
            zigzag.append(new[0])
        row = new
    return zigzag[0::2][:count]


def euler_by_series(N, a):
    """E_{0..N,a} as n! [t^n] of 1 / (1 + a sum t^2k/(2k)!), by series division."""
    a = Fraction(a)
    d = [Fraction(1)] + [a / factorial(k) if k % 2 == 0 else Fraction(0) for k in range(1, N + 1)]
    q = []
    for n in range(N + 1):
        acc = Fraction(1 if n == 0 else 0) - sum(d[k] * q[n - k] for k in range(1, n + 1))
        q.append(acc)
    return [c * factorial(n) for n, c in enumerate(q)]


def euler_direct(N, a):
    """The defining recurrence, written out with math.comb."""
    e = [1]
    for n in range(1, N + 1):
        e.append(-a * sum(comb(n, 2 * k) * e[n - 2 * k] for k in range(1, n // 2 + 1)))
    return e


def residue_of(q, m):
    """A rational with denominator prime to m, as a residue in [0, m)."""
    q = Fraction(q)
    return q.numerator * pow(q.denominator, -1, m) % m


def euler_poly_at(n, a, x):
    """E_{n,a}(x) evaluated pointwise from its definition."""
    E = euler_by_series(n, a)
    return sum(comb(n, k) * E[k] * Fraction(x) ** (n - k) for k in range(n + 1))


def ord_p(n, p):
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e
