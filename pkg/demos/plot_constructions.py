"""
Explicit dominating sets of P(ck, k)
====================================

Build the closed-form sets for a few (c, k), check them, and compare each
size with the piecewise bound.  P(12, 4) is the one small case where the
assembled set leaves a vertex uncovered.
"""

from gpdom import construct_ck, construct_p6k, ck_upper_bound

for c, k in [(4, 3), (5, 4), (7, 8), (3, 4)]:
    rep = construct_ck(c, k)
    print(f"{rep.params.label():>9}  case {rep.case}  size {rep.actual_size}"
          f"  bound {ck_upper_bound(c, k)}  verified {rep.verified}")
    if not rep.verified:
        print("           undominated:", rep.undominated.tokens())

# the tighter family for c = 6
for k in (4, 5, 6):
    rep = construct_p6k(k)
    print(f"{rep.params.label():>9}  size {rep.actual_size}  vs general bound {ck_upper_bound(6, k)}")
