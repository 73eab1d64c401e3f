"""
From the stack to the coarse space
==================================

Along Delta_1 the coarse map ramifies to order 2, so a stack coefficient
alpha becomes (1 + alpha)/2 downstairs.  The floor identity behind the
comparison of section spaces is checked exhaustively on a grid.
"""

from fractions import Fraction

from mgbar import Model, RamifiedBoundary, coarse_coefficient, log_canonical_divisor
from mgbar.stack_descent import invariant_vanishing_order, sweep

for alpha in (Fraction(1), Fraction(9, 11), Fraction(7, 10)):
    downstairs = coarse_coefficient(RamifiedBoundary(2, alpha))
    dagger = log_canonical_divisor(6, alpha, Model.COARSE_DAGGER).boundary_weight(1)
    print(alpha, "->", downstairs, "(dagger class:", dagger, ")")

print("order for m=6, e=2, a=9/11:", invariant_vanishing_order(6, 2, Fraction(9, 11)))
print(sweep(m_max=60, e_max=10, q_max=8))
