"""Chow ring of the plane, Chern characters and Hirzebruch-Riemann-Roch.

A class ``c0 + c1*H + c2*H^2`` is stored by its three rational coefficients;
products truncate at ``H^3 = 0`` and the degree map reads off ``c2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "ChowClass",
    "ChernPair",
    "chern_character_end0",
    "chern_character_line",
    "todd_p2",
    "euler_char",
    "chi_end0_twist",
]


@dataclass(frozen=True)
class ChowClass:
    c0: Fraction = Fraction(0)
    c1: Fraction = Fraction(0)
    c2: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("c0", "c1", "c2"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def __add__(self, other: "ChowClass") -> "ChowClass":
        return ChowClass(self.c0 + other.c0, self.c1 + other.c1, self.c2 + other.c2)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ChowClass(self.c0 * other, self.c1 * other, self.c2 * other)
        if not isinstance(other, ChowClass):
            return NotImplemented
        return ChowClass(
            self.c0 * other.c0,
            self.c0 * other.c1 + self.c1 * other.c0,
            self.c0 * other.c2 + self.c1 * other.c1 + self.c2 * other.c0,
        )

    __rmul__ = __mul__

    def degree(self) -> Fraction:
        return self.c2

    def as_tuple(self):
        return (self.c0, self.c1, self.c2)


@dataclass(frozen=True)
class ChernPair:
    """Integer coefficients of ``c1(E) = c1*H`` and ``c2(E) = c2*H^2``."""

    c1: int
    c2: int

    @property
    def discriminant(self) -> int:
        return self.c1 * self.c1 - 4 * self.c2


def chern_character_end0(c: ChernPair) -> ChowClass:
    """ch of the trace-free endomorphisms of a rank-two bundle: ``3 + (c1^2 - 4 c2) H^2``."""
    return ChowClass(3, 0, c.c1 * c.c1 - 4 * c.c2)


def chern_character_line(d: int) -> ChowClass:
    return ChowClass(1, d, Fraction(d * d, 2))


def todd_p2() -> ChowClass:
    return ChowClass(1, Fraction(3, 2), 1)


def euler_char(ch: ChowClass) -> Fraction:
    return (ch * todd_p2()).degree()


def chi_end0_twist(c: ChernPair, d: int) -> int:
    """Euler characteristic of ``End0(E)(d)`` on the plane.

    Raises ``ValueError`` when the Chern data produce a non-integral value.
    """
    chi = euler_char(chern_character_end0(c) * chern_character_line(d))
    if chi.denominator != 1:
        raise ValueError(f"non-integral Euler characteristic {chi} for {c}, d={d}")
    return int(chi)
