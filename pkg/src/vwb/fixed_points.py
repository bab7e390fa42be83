"""Combinatorial components of the C*-fixed locus.

A fixed pair is ``E = O(m) (x) (I_Z1 + I_Z2(-j))`` with ``Z2`` inside ``Z1``
and Higgs field ``[[0, 0], [s, 0]]``, ``s`` a section of ``O(d - j)``. For
fixed Chern data this reduces to choosing ``j``, which determines ``m``, and
splitting ``n = c2 - m(m - j)`` into subscheme lengths ``l1 >= l2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from .cohomology import h_p2
from .exact import HomPoly
from .split_higgs import PolyMatrix2, char_poly

__all__ = [
    "STABLE",
    "SEMISTABLE",
    "CANDIDATE",
    "FixedComponent",
    "enumerate_fixed",
    "nilpotency_check",
    "higgs_family_dim",
]

STABLE = "stable"
SEMISTABLE = "strictly_semistable_candidate"
CANDIDATE = "candidate"


@dataclass(frozen=True)
class FixedComponent:
    m: int
    j: int
    l1: int
    l2: int
    higgs_dim: int
    stability_flag: str
    d: int = 0

    @property
    def c1(self) -> int:
        return 2 * self.m - self.j

    @property
    def c2(self) -> int:
        return self.m * (self.m - self.j) + self.l1 + self.l2

    def higgs_matrix(self, s: Optional[HomPoly] = None) -> PolyMatrix2:
        """The field ``[[0, 0], [s, 0]]`` on ``O(m) + O(m - j)``; ``s`` defaults to ``x0^(d-j)``."""
        deg = self.d - self.j
        if s is None:
            s = HomPoly.monomial((deg, 0, 0))
        return PolyMatrix2.build(self.m, self.m - self.j, self.d, c=s)

    def to_json(self):
        return {
            "m": self.m,
            "j": self.j,
            "l1": self.l1,
            "l2": self.l2,
            "higgs_dim": self.higgs_dim,
            "stability_flag": self.stability_flag,
        }


def higgs_family_dim(d: int, j: int) -> int:
    return h_p2(0, d - j)


def _flag(j: int, l1: int) -> str:
    # j = 0: the invariant summand has slope m = slope of E, so at best semistable
    if j == 0:
        return SEMISTABLE
    if l1 > 0:
        return CANDIDATE
    return STABLE


def enumerate_fixed(c1: int, c2: int, d: int) -> List[FixedComponent]:
    if d < 0:
        raise ValueError("d must be nonnegative")
    out = []
    for j in range(d + 1):
        if (c1 + j) % 2:
            continue
        m = (c1 + j) // 2
        n = c2 - m * (m - j)
        if n < 0:
            continue
        for l1 in range((n + 1) // 2, n + 1):
            out.append(FixedComponent(m, j, l1, n - l1, higgs_family_dim(d, j), _flag(j, l1), d))
    out.sort(key=lambda comp: (comp.j, comp.l1))
    return out


def nilpotency_check(phi: PolyMatrix2) -> bool:
    """For 2x2 fields nilpotency is trace = det = 0 (Cayley-Hamilton)."""
    tr, det = char_poly(phi)
    return tr.is_zero() and det.is_zero()
