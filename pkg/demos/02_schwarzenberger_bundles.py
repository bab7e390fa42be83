"""Type-1 bundles E_{r,s}: Chern classes, homogeneous forms and the
cohomology of their trace-free endomorphisms."""

from vwb import L1Bundle, L2Bundle, chern_l1, chern_l2, homogeneous_form, is_stable_l1, is_stable_l2
from vwb.chow import chi_end0_twist
from vwb.schwarzenberger import h0_end0_l1, h1_end0_l1, h2_end0_l1, kunneth_h0_end0_l1

for k in range(6):
    B = L1Bundle(0, k)
    form = homogeneous_form(B)
    print(f"E_(0,{k}): c={chern_l1(B).c1, chern_l1(B).c2} stable={is_stable_l1(B)} form={form or 'depends on the conic'}")

# h^0 by formula and by pulling back to the quadric
B = L1Bundle(0, 5)
print([(d, h0_end0_l1(B, d), kunneth_h0_end0_l1(B, d)) for d in range(5)])

# the two h^1 readings; only the derived one satisfies Riemann-Roch everywhere
print(" d  h0  h1(pub)  h1(der)  h2  chi")
for d in range(5):
    row = (h0_end0_l1(B, d), h1_end0_l1(B, d, "paper"), h1_end0_l1(B, d, "derived"), h2_end0_l1(B, d), chi_end0_twist(chern_l1(B), d))
    print(f"{d:2d}" + "".join(f"{v:5d}" for v in row))

# type 2: all seven exceptional weights nonnegative and summing to 5 at p = -1
B2 = L2Bundle(-1, (1, 1, 1, 1, 1, 0, 0))
print("type 2:", chern_l2(B2), "stable:", is_stable_l2(B2))
