"""
F-curves and the nefness band
=============================

Every F-curve intersection with the pseudostable pullback is affine in
alpha; the class stays nef on (7/10, 9/11] and the only vanishing row is
the elliptic-tail family A.
"""

from fractions import Fraction

from mgbar import Model, critical_alphas, gkm_nef_check, log_canonical_divisor
from mgbar.fcurves import Nef, table_to_tsv

g = 10
for alpha in (Fraction(7, 10) + Fraction(1, 1000), Fraction(4, 5), Fraction(9, 11)):
    verdict = gkm_nef_check(log_canonical_divisor(g, alpha, Model.PS_PULLBACK))
    zero = [str(r.curve) for r in verdict.certificate if r.value == 0]
    print(alpha, type(verdict).__name__, "zero rows:", zero)

below = gkm_nef_check(log_canonical_divisor(g, Fraction(7, 10) - Fraction(1, 100), Model.PS_PULLBACK))
print("just below 7/10:", below)

verdict = gkm_nef_check(log_canonical_divisor(g, Fraction(4, 5), Model.PS_PULLBACK))
assert isinstance(verdict, Nef)
print(table_to_tsv(verdict.certificate[:8]))

for model in (Model.MG_STACK, Model.PS_PULLBACK):
    print(critical_alphas(g, model).to_json())
