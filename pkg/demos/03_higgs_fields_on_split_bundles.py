"""Counting Higgs fields on O + O(m) modulo conjugation, checked against a
brute-force rank computation."""

from vwb import adjoint_rank_oracle, char_poly, conic_is_smooth, higgs_param_count, random_stable_higgs, tangent_dim_split

m, d = 1, 2
phi = random_stable_higgs(m, d, seed=3)
print("phi =", phi)

tr, det = char_poly(phi)
print("trace:", tr, "| det has degree", det.degree)

total, modulo = higgs_param_count(m, d)
print("parameters:", total, "modulo conjugation:", modulo)

res = adjoint_rank_oracle(m, d, phi)
print(res, "closed form:", tangent_dim_split(m, d))

# over the whole grid the two agree, except in the constant case d = 0
for d in range(4):
    for m in range(d + 1):
        try:
            q = adjoint_rank_oracle(m, d, random_stable_higgs(m, d, 1)).quotient_dim
        except Exception as exc:
            q = type(exc).__name__
        print(f"(m={m}, d={d}) oracle={q} formula={tangent_dim_split(m, d)}")

# at d = 1 the spectral conic det(phi) is smooth for generic phi
phi = random_stable_higgs(0, 1, seed=1)
print("smooth spectral conic:", conic_is_smooth(char_poly(phi)[1]))
