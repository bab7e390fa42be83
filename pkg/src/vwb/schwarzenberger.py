"""Schwarzenberger bundles of types 1 and 2 on the plane.

Type 1: ``E_{r,s} = f_* O(r, s)`` along a double cover ``P1 x P1 -> P2``
branched over a conic. Type 2: ``E_{p,t} = g_* L^{p,t}`` along the double
cover by the seven-point blow-up branched over a quartic. None of the
quantities computed here depend on the choice of branch curve, so it is not
modelled.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .chow import ChernPair
from .cohomology import BidegreeLine, h_p1xp1, h_p2

__all__ = [
    "L1Bundle",
    "L2Bundle",
    "HomogeneousForm",
    "H1_MODES",
    "chern_l1",
    "chern_split",
    "is_isomorphic_l1",
    "homogeneous_form",
    "is_stable_l1",
    "h0_end_l1",
    "h0_end0_l1",
    "h1_end0_l1",
    "h2_end0_l1",
    "chern_l2",
    "is_stable_l2",
    "l2_isomorphism_image",
    "overlap_l1_l2",
    "kunneth_h0_end0_l1",
]

H1_MODES = ("paper", "derived")


@dataclass(frozen=True)
class L1Bundle:
    r: int
    s: int

    def __post_init__(self):
        if self.s < self.r:
            r, s = self.s, self.r
            object.__setattr__(self, "r", r)
            object.__setattr__(self, "s", s)

    @property
    def k(self) -> int:
        return self.s - self.r


@dataclass(frozen=True)
class L2Bundle:
    p: int
    t: Tuple[int, ...]

    def __post_init__(self):
        t = tuple(int(x) for x in self.t)
        if len(t) != 7:
            raise ValueError(f"need exactly 7 exceptional coefficients, got {len(t)}")
        object.__setattr__(self, "t", t)


@dataclass(frozen=True)
class HomogeneousForm:
    """``kind`` is ``"split"`` (``O(a) + O(b)``, ``degrees=(a, b)``) or
    ``"tangent"`` (``T(c)``, ``degrees=(c,)``)."""

    kind: str
    degrees: Tuple[int, ...]

    def __str__(self) -> str:
        if self.kind == "split":
            a, b = self.degrees
            return f"O({a}) + O({b})"
        return f"T({self.degrees[0]})"


def chern_l1(B: L1Bundle) -> ChernPair:
    r, s = B.r, B.s
    num = r * (r - 1) + s * (s - 1)
    assert num % 2 == 0
    return ChernPair(r + s - 1, num // 2)


def chern_split(m1: int, m2: int) -> ChernPair:
    return ChernPair(m1 + m2, m1 * m2)


def is_isomorphic_l1(B: L1Bundle, B2: L1Bundle) -> bool:
    # construction normalizes s >= r, so swapped parameters compare equal
    return (B.r, B.s) == (B2.r, B2.s)


def homogeneous_form(B: L1Bundle) -> Optional[HomogeneousForm]:
    """Branch-independent description for ``s - r <= 2``; ``None`` otherwise."""
    r, k = B.r, B.k
    if k == 0:
        return HomogeneousForm("split", (r, r - 1))
    if k == 1:
        return HomogeneousForm("split", (r, r))
    if k == 2:
        return HomogeneousForm("tangent", (r - 1,))
    return None


def is_stable_l1(B: L1Bundle) -> bool:
    return B.k >= 2


def h0_end_l1(B: L1Bundle) -> int:
    """Dimension of global endomorphisms of ``E_{r,s}`` (no twist)."""
    return h0_end0_l1(B, 0) + 1


def h0_end0_l1(B: L1Bundle, d: int) -> int:
    if d < 0:
        raise ValueError("d must be nonnegative")
    k = B.k
    delta = 1 if d >= k - 1 else 0
    return d * (d + 1) // 2 + delta * (2 - k + d) * (2 + k + d)


def _pullback_quotient(B: L1Bundle, d: int) -> BidegreeLine:
    # quotient line bundle of f^*(E^*)(r+d, s+d) on the quadric
    return BidegreeLine(1 - B.k + d, 1 + B.k + d)


def h1_end0_l1(B: L1Bundle, d: int, mode: str = "derived") -> int:
    """``h^1(End0 E_{r,s}(d))``.

    ``mode="paper"`` returns the published piecewise values. ``mode="derived"``
    reads ``h^1`` off the pulled-back extension on the quadric, which gives
    ``max(0, k^2 - (d+2)^2)``; the two disagree when ``k > d + 2`` and ``d >= 2``.
    """
    if d < 0:
        raise ValueError("d must be nonnegative")
    k = B.k
    if mode == "paper":
        if k <= 2:
            return 0
        if d == 0:
            return k * k - 4
        if d == 1:
            return k * k - 9
        return 0
    if mode == "derived":
        # H^1 and H^2 of O(d, d) vanish, so h^1 comes from the quotient alone;
        # the trace summand O(d) has no h^1 on the plane
        return h_p1xp1(1, _pullback_quotient(B, d))
    raise ValueError(f"mode must be one of {H1_MODES}, got {mode!r}")


def h2_end0_l1(B: L1Bundle, d: int) -> int:
    if d < 0:
        raise ValueError("d must be nonnegative")
    return 0


def chern_l2(B: L2Bundle) -> ChernPair:
    p, t = B.p, B.t
    st = sum(t)
    c1 = st + 3 * p - 2
    cross = sum(t[i] * t[j] for i in range(7) for j in range(i + 1, 7))
    c2 = 4 * p * p - 3 * p + (3 * p - 1) * st + sum(x * x for x in t) + cross
    return ChernPair(c1, c2)


def is_stable_l2(B: L2Bundle) -> bool:
    """Stability of a type-2 bundle, for ``p >= -1``.

    If every ``c1 + 2 t_i`` is nonnegative, stability means ``sum t`` equals
    ``(8 - 7p)/3`` or ``(7 - 7p)/3``; otherwise it is the quadratic identity
    ``sum (c1 + 2t)^2 + (c1 + 2t) = (-3c1 + 2p + 1)(-3c1 + 2p + 2)``.
    """
    p, t = B.p, B.t
    if p < -1:
        raise ValueError("stability criterion only holds for p >= -1")
    c1 = chern_l2(B).c1
    shifted = [c1 + 2 * x for x in t]
    if all(v >= 0 for v in shifted):
        st = Fraction(sum(t))
        return st in (Fraction(8 - 7 * p, 3), Fraction(7 - 7 * p, 3))
    lhs = sum(v * v + v for v in shifted)
    rhs = (-3 * c1 + 2 * p + 1) * (-3 * c1 + 2 * p + 2)
    return lhs == rhs


def l2_isomorphism_image(q: int, s: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    """Parameters ``(p, t)`` of the second presentation of ``E_{q,s}``.

    The map is an involution on ``Z x Z^7``.
    """
    s = tuple(int(x) for x in s)
    if len(s) != 7:
        raise ValueError("need exactly 7 exceptional coefficients")
    ss = sum(s)
    return 3 * ss + 8 * q, tuple(-x - 3 * q - ss for x in s)


def overlap_l1_l2(B1: L1Bundle, B2: L2Bundle) -> bool:
    """Necessary condition for a non-homogeneous bundle to be of both types."""
    p = B2.p
    return -7 <= p <= -1 and B1.r == p and B1.s == p + 3 and sum(B2.t) == 4 - p


def kunneth_h0_end0_l1(B: L1Bundle, d: int) -> int:
    """Independent assembly of ``h^0(End0 E_{r,s}(d))`` from quadric cohomology:
    ``h^0(O(d,d)) + h^0(quotient) - h^0(P2, O(d))``."""
    return (
        h_p1xp1(0, BidegreeLine(d, d))
        + h_p1xp1(0, _pullback_quotient(B, d))
        - h_p2(0, d)
    )
