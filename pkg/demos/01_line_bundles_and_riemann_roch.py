"""Line bundle cohomology on the plane, the quadric and the seven-point
blow-up, and the Riemann-Roch check that ties them together."""

from vwb import BidegreeLine, BlowupLine, ChernPair, h_blowup7, h_blowup7_special, h_p1xp1, h_p2
from vwb.chow import chern_character_end0, chern_character_line, euler_char, todd_p2

# sections of O(k) on P2 are the degree-k monomials in x0, x1, x2
for k in range(-1, 5):
    print(f"h^*(P2, O({k})) =", [h_p2(i, k) for i in range(3)])

# on P1 x P1 everything splits by Kunneth; O(-2, 8) only has h^1
print("h^*(P1xP1, O(-2, 8)) =", [h_p1xp1(i, BidegreeLine(-2, 8)) for i in range(3)])

# powers of the anticanonical bundle on the blow-up
for d in range(4):
    L = BlowupLine(3 * d, (-d,) * 7)
    print(f"d={d}: h0={h_blowup7(0, L)} h1={h_blowup7(1, L)}  closed form {h_blowup7_special(0, d)}, {h_blowup7_special(1, d)}")

# Euler characteristic of End0 E(d) straight from the Chern character
print("td(P2) =", todd_p2().as_tuple())
c = ChernPair(4, 6)  # Chern pair of E_{0,5}
for d in range(4):
    ch = chern_character_end0(c) * chern_character_line(d)
    print(f"chi(End0 E(d={d})) =", euler_char(ch))
