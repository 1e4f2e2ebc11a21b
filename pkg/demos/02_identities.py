"""Exact identity checks for E_{n,a}(x) and the inversion pair.

Run with:  python demos/02_identities.py
"""

from fractions import Fraction

from eulerseq import (
    check_mixed_convolution,
    check_powersum_theorem,
    check_quartic,
    check_reflection,
    check_three_term,
    egf_residual,
    euler_polynomial,
    forward_transform,
    inverse_transform,
)

a = Fraction(-2, 5)
print("E_5,a(x) at a=-2/5:", euler_polynomial(5, a).coeffs)

# 1/(a/2 (e^t + e^-t) + 1 - a) multiplied back out leaves nothing up to t^40
print("EGF residual zero to order 40:", egf_residual(40, a).is_zero())

r = check_three_term(9, a)
print("three-term relation, n=9:", r.passed, "| lhs =", r.lhs)

print("reflection n=12:", check_reflection(12, a).passed)
print("mixed convolution n=10, y=3/2:", check_mixed_convolution(10, a, Fraction(3, 2)).passed)

for base in (2, 3, 4, 5):
    rep = check_powersum_theorem(base, 7, 3)
    print(f"power sum base {base}: lhs = {rep.lhs}, closed form agrees: {rep.ok}")

print("quartic, x=2, n=17:", check_quartic(17, a, 2, general=True).passed)

seq = [Fraction(k * k - 3, k + 1) for k in range(10)]
b = forward_transform(seq, Fraction(1, 3), 2)
print("transform:", b[:5], "...")
print("inverse recovers the input:", inverse_transform(b, Fraction(1, 3), 2) == seq)
