"""
Divisor classes and the two walls
=================================

The log canonical divisor K + alpha*delta is written as
13*lambda - sum b_i delta_i with exact rational coefficients.  We pair it
with the elliptic-tail ray and see where that pairing vanishes.
"""

from fractions import Fraction

from mgbar import Model, log_canonical_divisor, pair_with_ray, proportionality_alpha
from mgbar.divisor_algebra import linearization_class

D = log_canonical_divisor(10, Fraction(9, 11))
print("K + 9/11 delta  =", D)
print("pairing with R  =", pair_with_ray(D))

# the pseudostable pullback replaces b_1 by 11 - 12 alpha
P = log_canonical_divisor(10, Fraction(7, 10), Model.PS_PULLBACK)
print("ps pullback at 7/10 =", P)

# Chow linearizations for n = 3, 4 and the alpha they correspond to
for n in (3, 4):
    L = linearization_class(5, n)
    print(f"n={n}: {L}  ->  alpha = {proportionality_alpha(L)}")

# round trip through the JSON form
text = D.to_json()
print(text)
assert type(D).from_json(text) == D
