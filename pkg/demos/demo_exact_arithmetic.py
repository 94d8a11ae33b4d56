"""Exact arithmetic in Q(sqrt(d)): signs, floors and fractional parts.

All decisions in the library are made with this class; floating point only
ever appears in display strings.

Run:  python3 demos/demo_exact_arithmetic.py
"""

from fractions import Fraction

from srgbounds import QuadExt

sqrt17 = QuadExt.sqrt(17)
print(f"sqrt(17)            = {sqrt17}  ~ {float(sqrt17):.6f}")
print(f"floor(sqrt(17))     = {sqrt17.floor()}")
print(f"frac(sqrt(17))      = {sqrt17.frac()}")

# the eigenvalues of Paley(17)
r = QuadExt.make(Fraction(-1, 2), Fraction(1, 2), 17)
s = QuadExt.make(Fraction(-1, 2), Fraction(-1, 2), 17)
print(f"\nr = {r}, s = {s}")
print(f"r + s = {r + s}   (equals lam - mu = -1)")
print(f"r * s = {r * s}   (equals mu - k = -4)")

# the pre-floor Delsarte expression 1 - k/s collapses to sqrt(17)
delsarte = 1 - QuadExt.make(8) / s
print(f"\n1 - 8/s = {delsarte}")
print(f"floor   = {delsarte.floor()}   (the Delsarte bound for Paley(17))")

# exact comparison without floating point: is sqrt(17) - 4 positive?
x = sqrt17 - 4
print(f"\nsign(sqrt(17) - 4) = {x.sign()}")
print(f"sqrt(8) normalizes to {QuadExt.sqrt(8)}  (square factor extracted)")
