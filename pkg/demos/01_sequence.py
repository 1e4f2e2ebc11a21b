"""The generalized Euler numbers E_{n,a}: exact values, the polynomial in a, residues.

Run with:  python demos/01_sequence.py
"""

from fractions import Fraction

from eulerseq import ResidueRing, build_table, euler_number, euler_number_mod, euler_number_poly

# a = 1 gives the classical Euler numbers, a = 2 the sequence U_n
print("a=1:", build_table(14, 1).values)
print("a=2:", build_table(14, 2).values)

# E_{n,a} is an integer polynomial in a of degree n/2, with linear coefficient -1
for n in range(2, 13, 2):
    print(f"E_{n},a =", euler_number_poly(n))

# rational parameters are exact
print("E_8 at a=1/2:", euler_number(8, Fraction(1, 2)))

# the recurrence has no division, so it reduces termwise
R = ResidueRing(2 ** 12)
print("E_40,3 mod 2^12:", euler_number_mod(40, 3, R), "| exact:", euler_number(40, 3) % R.modulus)
