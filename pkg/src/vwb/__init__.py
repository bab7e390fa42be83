"""Exact dimension counts, stability tests and fixed-point enumeration for
rank-two wild Vafa-Witten pairs on the projective plane."""

from .chow import ChernPair, ChowClass, chern_character_end0, chern_character_line, chi_end0_twist, euler_char, todd_p2
from .cohomology import BidegreeLine, BlowupLine, h_blowup7, h_blowup7_special, h_p1xp1, h_p2
from .exact import HomPoly, RationalMatrix, kernel_dim, monomial_basis, poly_mul, rank
from .fixed_points import FixedComponent, enumerate_fixed, higgs_family_dim, nilpotency_check
from .moduli import euler_consistency, hyper_h1_dim, hyper_h2_dim, hypercohomology, spectral_terms
from .report import Discrepancy, Report
from .schwarzenberger import (
    L1Bundle,
    L2Bundle,
    chern_l1,
    chern_l2,
    h0_end0_l1,
    h1_end0_l1,
    h2_end0_l1,
    homogeneous_form,
    is_isomorphic_l1,
    is_stable_l1,
    is_stable_l2,
    l2_isomorphism_image,
    overlap_l1_l2,
)
from .split_higgs import (
    PolyMatrix2,
    adjoint_rank_oracle,
    char_poly,
    conic_is_smooth,
    higgs_param_count,
    random_stable_higgs,
    stability_bound,
    tangent_dim_split,
)

__version__ = "0.1.0"
