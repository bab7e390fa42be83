"""Deformation-complex bookkeeping for pairs ``(E_{r,s}, Phi)``.

The complex ``End0 E -> End0 E(d)`` (bracket with ``Phi``) has a two-row
spectral sequence; with ``d2 = 0`` the tangent space is
``E2^{1,0} + E2^{0,1}`` and the obstruction space ``E2^{2,0} + E2^{1,1}``.
Only dimensions are tracked here. Surjectivity of
``H^1(End0 E) -> H^1(End0 E(d))`` is taken as known when the target vanishes
or when ``d = 1``; elsewhere the terms are reported as unknown (``None``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from .chow import chi_end0_twist
from .report import Discrepancy
from .schwarzenberger import (
    H1_MODES,
    L1Bundle,
    chern_l1,
    h0_end0_l1,
    h1_end0_l1,
    h2_end0_l1,
    homogeneous_form,
)
from .split_higgs import h0_end_split

__all__ = [
    "SpectralTerms",
    "Hypercohomology",
    "EulerCheck",
    "theorem_dimension",
    "spectral_terms",
    "hypercohomology",
    "hyper_h1_dim",
    "hyper_h2_dim",
    "euler_consistency",
    "mode_discrepancies",
    "h1_discrepancy",
]


@dataclass(frozen=True)
class SpectralTerms:
    e10: int
    e01: Optional[int]
    e20: int
    e11: Optional[int]

    @property
    def known(self) -> bool:
        return self.e01 is not None and self.e11 is not None

    def to_json(self) -> Dict[str, Optional[int]]:
        return {"e10": self.e10, "e01": self.e01, "e20": self.e20, "e11": self.e11}


def _check_mode(mode: str) -> None:
    if mode not in H1_MODES:
        raise ValueError(f"mode must be one of {H1_MODES}, got {mode!r}")


def theorem_dimension(d: int) -> int:
    """Published dimension of components through type-1 bundles: ``3d(d+3)/2``."""
    return 3 * d * (d + 3) // 2


def _h0_end(B: L1Bundle) -> int:
    form = homogeneous_form(B)
    assert form is not None and form.kind == "split"
    a, b = form.degrees
    return h0_end_split(a - b)


def spectral_terms(r: int, s: int, d: int, h1_mode: str = "derived") -> SpectralTerms:
    _check_mode(h1_mode)
    if d < 1:
        raise ValueError("spectral terms are tracked for d >= 1")
    if s < r:
        raise ValueError("expected s >= r")
    B = L1Bundle(r, s)
    h0_twist = h0_end0_l1(B, d)
    if B.k <= 1:
        # conjugation image: all endomorphisms modulo the scalars
        e10 = h0_twist - (_h0_end(B) - 1)
    else:
        e10 = h0_twist
    h1_src = h1_end0_l1(B, 0, h1_mode)
    h1_tgt = h1_end0_l1(B, d, h1_mode)
    surjective = h1_tgt == 0 or d == 1
    if surjective:
        e01 = h1_src - h1_tgt
        e11 = h1_tgt - (h1_src - e01)
    else:
        e01 = e11 = None
    return SpectralTerms(e10, e01, 0, e11)


def h1_discrepancy(r: int, s: int, d: int) -> Optional[Discrepancy]:
    B = L1Bundle(r, s)
    paper, derived = h1_end0_l1(B, d, "paper"), h1_end0_l1(B, d, "derived")
    if paper == derived:
        return None
    return Discrepancy(f"h1(End0 E_{{{B.r},{B.s}}}({d}))", paper, derived)


def mode_discrepancies(r: int, s: int, d: int):
    """Paper-versus-derived disagreements for one cell."""
    B = L1Bundle(r, s)
    out = []
    h1 = h1_discrepancy(B.r, B.s, d)
    if h1 is not None:
        out.append(h1)
    if d >= 1:
        pt, dt = spectral_terms(B.r, B.s, d, "paper"), spectral_terms(B.r, B.s, d, "derived")
        if pt.known and not dt.known:
            out.append(Discrepancy(f"dim H1 at (E_{{{B.r},{B.s}}}, d={d})", theorem_dimension(d), None))
    return out


@dataclass(frozen=True)
class Hypercohomology:
    r: int
    s: int
    d: int
    mode: str
    terms: SpectralTerms
    h1: Optional[int]
    h2: Optional[int]
    discrepancies: Tuple[Discrepancy, ...] = ()
    candidates: Dict[str, int] = field(default_factory=dict)

    @property
    def known(self) -> bool:
        return self.h1 is not None


def hypercohomology(r: int, s: int, d: int, h1_mode: str = "derived") -> Hypercohomology:
    """Tangent and obstruction dimensions at a pair on ``E_{r,s}``.

    In the range ``d >= 2, s - r > d + 2`` the published ``h^1`` values
    contradict Riemann-Roch. There, paper mode echoes the published
    dimension and derived mode returns ``None`` together with the candidate
    numbers.
    """
    _check_mode(h1_mode)
    if d < 1:
        raise ValueError("d = 0 is excluded: only the zero field is stable")
    B = L1Bundle(r, s)
    r, s = B.r, B.s
    terms = spectral_terms(r, s, d, h1_mode)
    disc = tuple(mode_discrepancies(r, s, d))
    underdetermined = not spectral_terms(r, s, d, "derived").known
    candidates: Dict[str, int] = {}
    if underdetermined:
        candidates = {
            "theorem_value": theorem_dimension(d),
            "h0_end0_twist": h0_end0_l1(B, d),
            "h1_end0": h1_end0_l1(B, 0, "derived"),
            "h1_end0_twist": h1_end0_l1(B, d, "derived"),
        }
    if h1_mode == "paper" and underdetermined:
        h1, h2 = theorem_dimension(d), 0
    elif terms.known:
        h1, h2 = terms.e10 + terms.e01, terms.e20 + terms.e11
    else:
        h1 = h2 = None
    return Hypercohomology(r, s, d, h1_mode, terms, h1, h2, disc, candidates)


def hyper_h1_dim(r: int, s: int, d: int, h1_mode: str = "derived") -> Optional[int]:
    return hypercohomology(r, s, d, h1_mode).h1


def hyper_h2_dim(r: int, s: int, d: int, h1_mode: str = "derived") -> Optional[int]:
    return hypercohomology(r, s, d, h1_mode).h2


@dataclass(frozen=True)
class EulerCheck:
    h0: int
    h1: int
    h2: int
    chi: int
    passed: bool

    def to_json(self):
        return {"h0": self.h0, "h1": self.h1, "h2": self.h2, "chi": self.chi, "passed": self.passed}


def euler_consistency(r: int, s: int, d: int, h1_mode: str = "derived") -> EulerCheck:
    """Check ``h0 - h1 + h2 = chi`` for ``End0 E_{r,s}(d)``."""
    _check_mode(h1_mode)
    B = L1Bundle(r, s)
    h0 = h0_end0_l1(B, d)
    h1 = h1_end0_l1(B, d, h1_mode)
    h2 = h2_end0_l1(B, d)
    chi = chi_end0_twist(chern_l1(B), d)
    return EulerCheck(h0, h1, h2, chi, h0 - h1 + h2 == chi)
