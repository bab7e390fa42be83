"""Cohomology dimensions of line bundles on the plane, the quadric
P1 x P1 and the blow-up of the plane at seven general points.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

__all__ = [
    "BidegreeLine",
    "BlowupLine",
    "BlowupCohomology",
    "FormulaRangeWarning",
    "h_p1",
    "h_p2",
    "h_p1xp1",
    "h_blowup7",
    "blowup7_cohomology",
    "blowup7_euler_char",
    "h_blowup7_special",
]


class FormulaRangeWarning(UserWarning):
    """A closed-form count came out negative and was clamped to zero."""


def _check_degree(i: int, top: int) -> None:
    if i not in range(top + 1):
        raise ValueError(f"cohomological degree must be in 0..{top}, got {i}")


def h_p1(i: int, n: int) -> int:
    _check_degree(i, 1)
    return max(n + 1, 0) if i == 0 else max(-n - 1, 0)


def h_p2(i: int, k: int) -> int:
    """``h^i(P2, O(k))``; ``h^2`` via Serre duality with ``K = O(-3)``."""
    _check_degree(i, 2)
    if i == 0:
        return (k + 1) * (k + 2) // 2 if k >= 0 else 0
    if i == 1:
        return 0
    return h_p2(0, -k - 3)


@dataclass(frozen=True)
class BidegreeLine:
    a: int
    b: int


def h_p1xp1(i: int, L: BidegreeLine) -> int:
    """Kuenneth formula on the quadric."""
    _check_degree(i, 2)
    h0a, h1a = h_p1(0, L.a), h_p1(1, L.a)
    h0b, h1b = h_p1(0, L.b), h_p1(1, L.b)
    if i == 0:
        return h0a * h0b
    if i == 1:
        return h0a * h1b + h1a * h0b
    return h1a * h1b


@dataclass(frozen=True)
class BlowupLine:
    """``O(p M + sum t_i N_i)`` on the seven-point blow-up."""

    p: int
    t: Tuple[int, ...]

    def __post_init__(self):
        t = tuple(int(x) for x in self.t)
        if len(t) != 7:
            raise ValueError(f"need exactly 7 exceptional coefficients, got {len(t)}")
        object.__setattr__(self, "t", t)


@dataclass(frozen=True)
class BlowupCohomology:
    h0: int
    h1: int
    flagged: bool  # a formula value was negative and has been clamped


def _fat_point_count(p: int, t: Sequence[int]) -> Fraction:
    # degree-p curves with multiplicity -t_j at the points where t_j < 0
    return Fraction((p + 1) * (p + 2), 2) - Fraction(sum(x * (x + 1) for x in t if x < 0), 2)


def blowup7_cohomology(L: BlowupLine) -> BlowupCohomology:
    """``h^0`` and ``h^1`` of a line bundle on the blow-up, valid for ``p >= -1``.

    Points are assumed in general position. Negative formula values are
    clamped to zero and reported through ``flagged``.
    """
    if L.p < -1:
        raise ValueError("formulas hold for p >= -1 only; apply Serre duality by hand")
    plane = Fraction((L.p + 1) * (L.p + 2), 2)
    excess = Fraction(sum(x * (x - 1) for x in L.t), 2)
    if all(x >= 0 for x in L.t):
        h0, h1 = plane, excess
    else:
        fat = _fat_point_count(L.p, L.t)
        h0, h1 = fat, fat - plane + excess
    assert h0.denominator == 1 and h1.denominator == 1
    flagged = h0 < 0 or h1 < 0
    return BlowupCohomology(max(int(h0), 0), max(int(h1), 0), flagged)


def h_blowup7(i: int, L: BlowupLine) -> int:
    _check_degree(i, 1)
    res = blowup7_cohomology(L)
    if res.flagged:
        warnings.warn(f"negative closed-form cohomology for {L}, clamped to 0", FormulaRangeWarning, stacklevel=2)
    return res.h0 if i == 0 else res.h1


def blowup7_euler_char(L: BlowupLine) -> int:
    """Riemann-Roch on the blow-up (``h^2 = 0`` regime): ``(p+1)(p+2)/2 - sum t(t-1)/2``."""
    val = Fraction((L.p + 1) * (L.p + 2), 2) - Fraction(sum(x * (x - 1) for x in L.t), 2)
    return int(val)


def h_blowup7_special(i: int, d: int) -> int:
    """Cohomology of ``L^{3d,-d}`` (the anticanonical power ``-dK``)."""
    _check_degree(i, 1)
    if d < 0:
        raise ValueError("d must be nonnegative")
    return d * d + 8 * d + 1 if i == 0 else 7 * d
