"""Capped relative precision p-adic numbers, and what happens when digits run out."""

from fractions import Fraction

from padic_bruhat import InsufficientPrecision, PAdic, unit_residue

# %% Rationals become p-adics with a fixed number of significant digits.
x = PAdic.from_rational(Fraction(-1, 3), 5, prec=8)
print("-1/3 in Q_5:", x, "digits", x.digits())
print("valuation of 50 in Q_5:", PAdic.from_rational(50, 5).valuation())

# %% Arithmetic tracks how many digits are trustworthy.
a = PAdic.from_rational(1 + 5**6, 5, prec=8)
b = PAdic.from_rational(1, 5, prec=8)
d = a - b
print("(1 + 5^6) - 1 =", d, "with", d.absprec - d.val, "relative digits left")

# %% Full cancellation leaves a zero known only up to O(p^k).
z = b - b
print("1 - 1 =", z)
try:
    z.valuation()
except InsufficientPrecision as exc:
    print("asking for its valuation:", exc)

# %% The residue of a unit lands in the residue field.
print("residue of -1/3 mod 5:", unit_residue(x))
