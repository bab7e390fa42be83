"""Higgs fields on split bundles ``O(m1) + O(m2)`` over the plane.

A field is a 2x2 matrix ``[[a, b], [c, e]]`` of homogeneous polynomials
in ``x0, x1, x2`` with ``deg a = deg e = d``,
``deg b = d + m1 - m2`` and ``deg c = d + m2 - m1``. Global endomorphisms are
the same object with ``d = 0``.

Random fields come from a 32-bit linear congruential generator
``x -> (1664525 x + 1013904223) mod 2**32``; each coefficient is
``NONZERO[(x >> 16) % 10]`` with ``NONZERO = (-5, ..., -1, 1, ..., 5)``.
The stream is seeded with ``seed mod 2**32`` and never reseeded between
attempts, so results are reproducible in any language.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Tuple

from .cohomology import h_p2
from .exact import HomPoly, RationalMatrix, det3, monomial_basis, rank

__all__ = [
    "PolyMatrix2",
    "SplitPair",
    "OracleResult",
    "CertificateError",
    "Lcg",
    "stability_bound",
    "higgs_param_count",
    "higgs_param_count_by_basis",
    "tangent_dim_split",
    "char_poly",
    "conic_is_smooth",
    "matmul",
    "commutator",
    "endomorphism_basis",
    "h0_end_split",
    "h0_end0_twist_split",
    "adjoint_matrix",
    "adjoint_rank_oracle",
    "random_traceless_higgs",
    "random_stable_higgs",
    "MAX_ATTEMPTS",
]

MAX_ATTEMPTS = 64
NONZERO = (-5, -4, -3, -2, -1, 1, 2, 3, 4, 5)


class CertificateError(RuntimeError):
    """No sampled field had a one-dimensional commutant."""


@dataclass(frozen=True)
class PolyMatrix2:
    m1: int
    m2: int
    d: int
    a: HomPoly
    b: HomPoly
    c: HomPoly
    e: HomPoly

    def __post_init__(self):
        want = {
            "a": self.d,
            "b": self.d + self.m1 - self.m2,
            "c": self.d + self.m2 - self.m1,
            "e": self.d,
        }
        for name, deg in want.items():
            p = getattr(self, name)
            if p.num_vars != 3:
                raise ValueError(f"entry {name} must be a polynomial in 3 variables")
            if p.degree != deg:
                raise ValueError(f"entry {name} has degree {p.degree}, expected {deg}")

    @classmethod
    def build(cls, m1: int, m2: int, d: int, a=None, b=None, c=None, e=None) -> "PolyMatrix2":
        """Fill omitted entries with zero polynomials of the right degree."""

        def z(deg):
            return HomPoly.zero(3, deg)

        return cls(
            m1, m2, d,
            a if a is not None else z(d),
            b if b is not None else z(d + m1 - m2),
            c if c is not None else z(d + m2 - m1),
            e if e is not None else z(d),
        )

    @classmethod
    def traceless(cls, m1: int, m2: int, d: int, a=None, b=None, c=None) -> "PolyMatrix2":
        a = a if a is not None else HomPoly.zero(3, d)
        return cls.build(m1, m2, d, a, b, c, -a)

    def entries(self) -> Tuple[HomPoly, HomPoly, HomPoly, HomPoly]:
        return self.a, self.b, self.c, self.e

    def is_traceless(self) -> bool:
        return self.e == -self.a

    def is_zero(self) -> bool:
        return not any(self.entries())

    def __str__(self) -> str:
        return f"[[{self.a}, {self.b}], [{self.c}, {self.e}]]"


@dataclass(frozen=True)
class SplitPair:
    """A Higgs field on ``E = O + O(m)``."""

    m: int
    d: int
    phi: PolyMatrix2

    def __post_init__(self):
        if (self.phi.m1, self.phi.m2, self.phi.d) != (0, self.m, self.d):
            raise ValueError("field does not live on O + O(m) twisted by O(d)")


def stability_bound(m1: int, m2: int, d: int) -> bool:
    """Necessary condition ``|m1 - m2| <= d`` for a stabilizing Higgs field."""
    return abs(m1 - m2) <= d


def _check_range(m: int, d: int) -> None:
    if not 0 <= m <= d:
        raise ValueError(f"need 0 <= m <= d, got m={m}, d={d}")


def higgs_param_count(m: int, d: int) -> Tuple[int, int]:
    """(all Higgs fields, fields modulo conjugation) on ``O + O(m)``."""
    _check_range(m, d)
    total = 2 * d * d + 6 * d + m * m + 4
    if m == 0:
        modulo = 2 * d * d + 6 * d + 1
    else:
        modulo = 2 * d * d + 6 * d + m * (m - 3) // 2 + 2
    return total, modulo


def higgs_param_count_by_basis(m: int, d: int) -> int:
    """Total Higgs parameters as the sum of the four entry monomial-basis sizes."""
    return sum(len(monomial_basis(3, k)) for k in (d, d - m, d + m, d))


def tangent_dim_split(m: int, d: int) -> int:
    _check_range(m, d)
    base = 3 * d * (d + 3) // 2
    return base if m == 0 else base + m * (m - 3) // 2 + 1


def char_poly(phi: PolyMatrix2) -> Tuple[HomPoly, HomPoly]:
    """Trace (degree d) and determinant (degree 2d) of the field."""
    return phi.a + phi.e, phi.a * phi.e - phi.b * phi.c


def conic_is_smooth(q: HomPoly) -> bool:
    if q.num_vars != 3 or q.degree != 2:
        raise ValueError("expected a ternary quadratic form")
    rows = [[Fraction(0)] * 3 for _ in range(3)]
    for exp, c in q.terms.items():
        idx = [i for i, k in enumerate(exp) for _ in range(k)]
        i, j = idx
        if i == j:
            rows[i][i] = c
        else:
            rows[i][j] = rows[j][i] = c / 2
    return det3(rows) != 0


def matmul(X: PolyMatrix2, Y: PolyMatrix2) -> PolyMatrix2:
    if (X.m1, X.m2) != (Y.m1, Y.m2):
        raise ValueError("matrices live on different split bundles")
    return PolyMatrix2(
        X.m1, X.m2, X.d + Y.d,
        X.a * Y.a + X.b * Y.c,
        X.a * Y.b + X.b * Y.e,
        X.c * Y.a + X.e * Y.c,
        X.c * Y.b + X.e * Y.e,
    )


def commutator(psi: PolyMatrix2, phi: PolyMatrix2) -> PolyMatrix2:
    """``psi * phi - phi * psi``."""
    x, y = matmul(psi, phi), matmul(phi, psi)
    return PolyMatrix2(x.m1, x.m2, x.d, x.a - y.a, x.b - y.b, x.c - y.c, x.e - y.e)


def endomorphism_basis(m1: int, m2: int) -> List[PolyMatrix2]:
    """Monomial basis of ``H^0(End(O(m1) + O(m2)))``."""
    out = []
    for slot, deg in (("a", 0), ("b", m1 - m2), ("c", m2 - m1), ("e", 0)):
        for exp in monomial_basis(3, deg):
            out.append(PolyMatrix2.build(m1, m2, 0, **{slot: HomPoly.monomial(exp)}))
    return out


def h0_end_split(m: int) -> int:
    return 2 + h_p2(0, m) + h_p2(0, -m)


def h0_end0_twist_split(m: int, d: int) -> int:
    """``h^0(End0(O + O(m))(d))`` by monomial counting."""
    return sum(len(monomial_basis(3, k)) for k in (d, d - m, d + m))


def adjoint_matrix(m: int, d: int, phi: PolyMatrix2) -> RationalMatrix:
    """Matrix of ``psi -> psi phi - phi psi`` from ``H^0(End E)`` into
    ``H^0(End0 E(d))``, both in monomial coordinates.

    Target coordinates are the ``a``, ``b``, ``c`` entries; ``e = -a`` holds
    automatically for a commutator.
    """
    if (phi.m1, phi.m2, phi.d) != (0, m, d):
        raise ValueError(f"field is not on O + O({m}) twisted by O({d})")
    if not phi.is_traceless():
        raise ValueError("field must be trace-free")
    row_index = {}
    for slot, deg in (("a", d), ("b", d - m), ("c", d + m)):
        for exp in monomial_basis(3, deg):
            row_index[(slot, exp)] = len(row_index)
    entries = {}
    basis = endomorphism_basis(0, m)
    for col, psi in enumerate(basis):
        br = commutator(psi, phi)
        assert br.e == -br.a
        for slot in ("a", "b", "c"):
            for exp, v in getattr(br, slot).terms.items():
                entries[(row_index[(slot, exp)], col)] = v
    return RationalMatrix(len(row_index), len(basis), entries)


class OracleResult(NamedTuple):
    commutant_dim: int
    orbit_dim: int
    quotient_dim: int


def adjoint_rank_oracle(m: int, d: int, phi: PolyMatrix2) -> OracleResult:
    """Brute-force conjugation count at ``phi`` on ``E = O + O(m)``.

    ``commutant_dim`` is the kernel of the adjoint map, ``orbit_dim`` its
    rank, and ``quotient_dim = h^0(End0 E(d)) - orbit_dim`` is the tangent
    dimension of Higgs fields modulo conjugation.
    """
    _check_range(m, d)
    M = adjoint_matrix(m, d, phi)
    orbit = rank(M)
    return OracleResult(M.cols - orbit, orbit, h0_end0_twist_split(m, d) - orbit)


class Lcg:
    A = 1664525
    C = 1013904223
    MOD = 2 ** 32

    def __init__(self, seed: int):
        self.state = seed % self.MOD

    def next(self) -> int:
        self.state = (self.A * self.state + self.C) % self.MOD
        return self.state

    def coefficient(self) -> int:
        return NONZERO[(self.next() >> 16) % len(NONZERO)]


def _random_poly(rng: Lcg, deg: int) -> HomPoly:
    basis = monomial_basis(3, deg)
    return HomPoly.from_coefficients(3, deg, [rng.coefficient() for _ in basis]) if basis else HomPoly.zero(3, deg)


def random_traceless_higgs(m: int, d: int, rng) -> PolyMatrix2:
    """Trace-free field on ``O + O(m)`` with every admissible coefficient drawn
    from ``NONZERO``. ``rng`` is an :class:`Lcg` or an integer seed."""
    if not isinstance(rng, Lcg):
        rng = Lcg(rng)
    a = _random_poly(rng, d)
    b = _random_poly(rng, d - m)
    c = _random_poly(rng, d + m)
    return PolyMatrix2.traceless(0, m, d, a, b, c)


def random_stable_higgs(m: int, d: int, seed: int, attempts: int = MAX_ATTEMPTS) -> PolyMatrix2:
    """Deterministic trace-free field whose commutant is exactly the scalars.

    Raises :class:`CertificateError` after ``attempts`` failures, which
    happens for degenerate ``(m, d)`` such as ``(0, 0)`` where every field is
    constant and commutes with itself.
    """
    _check_range(m, d)
    rng = Lcg(seed)
    for _ in range(attempts):
        phi = random_traceless_higgs(m, d, rng)
        if adjoint_rank_oracle(m, d, phi).commutant_dim == 1:
            return phi
    raise CertificateError(f"no field with trivial commutant found for m={m}, d={d} in {attempts} attempts")
