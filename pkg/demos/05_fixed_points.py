"""Components of the C*-fixed locus for small Chern classes."""

from vwb import enumerate_fixed, nilpotency_check

for c2 in range(-1, 3):
    comps = enumerate_fixed(-1, c2, 1)
    print(f"c1=-1 c2={c2} d=1:", [c.to_json() for c in comps])

# negative c2 is empty at d = 1 but not at d = 2
print(enumerate_fixed(0, -1, 1), len(enumerate_fixed(0, -1, 2)))

comp = enumerate_fixed(1, 2, 3)[-1]
phi = comp.higgs_matrix()
print(comp.m, comp.j, phi, nilpotency_check(phi))
