"""Tangent and obstruction dimensions at pairs on E_{r,s}, and where the
bookkeeping cannot decide."""

from vwb import hypercohomology, spectral_terms
from vwb.moduli import theorem_dimension

print("k\\d " + "".join(f"{d:>6}" for d in range(1, 5)))
for k in range(8):
    cells = []
    for d in range(1, 5):
        h1 = hypercohomology(0, k, d).h1
        cells.append(f"{'?' if h1 is None else h1:>6}")
    print(f"{k:>3} " + "".join(cells))
print("expected:", [theorem_dimension(d) for d in range(1, 5)])

# an undecided cell: what is known and what is not
h = hypercohomology(0, 7, 2)
print(spectral_terms(0, 7, 2))
print(h.candidates)
for x in h.discrepancies:
    print(" ", x.location, x.paper_value, "vs", x.derived_value)
