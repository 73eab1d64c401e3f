"""
Dimensions of the limit linear series
=====================================

For a curve with r elliptic tails, V_n splits into sections on D with
poles of order 2n-2 at the attaching points plus r extra sections, and
each twist by the attaching points drops the dimension by r.
"""

from mgbar import TailConfiguration, decomposition_identity, dimension_profile, rank_kn
from mgbar.linear_series import vanishing_sequence_head

cfg = TailConfiguration(g=5, r=2)
for n in (2, 3, 4):
    prof = dimension_profile(cfg, n)
    print(f"n={n}  k_n={rank_kn(5, n)}  dims={prof.dims}  head={vanishing_sequence_head(cfg, n)}")

print("decomposition identity for g<=12, r<=g-2, n<=5:",
      all(decomposition_identity(g, r, n) for g in range(3, 13) for r in range(g - 1) for n in range(2, 6)))
