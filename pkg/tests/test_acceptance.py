"""Acceptance gate. Every check is an exact integer comparison.

Run ``pytest tests/test_acceptance.py`` (or this file directly); the summary
prints one PASS/FAIL line per criterion.
"""

import subprocess
import sys

from vwb.chow import chi_end0_twist
from vwb.cohomology import BidegreeLine, BlowupLine, h_blowup7, h_blowup7_special, h_p1xp1, h_p2
from vwb.exact import monomial_basis
from vwb.fixed_points import enumerate_fixed
from vwb.moduli import hyper_h1_dim, hyper_h2_dim
from vwb.schwarzenberger import (
    L1Bundle,
    L2Bundle,
    chern_l1,
    chern_split,
    h0_end0_l1,
    h1_end0_l1,
    h2_end0_l1,
    is_stable_l1,
    is_stable_l2,
)
from vwb.split_higgs import (
    CertificateError,
    adjoint_rank_oracle,
    random_stable_higgs,
    random_traceless_higgs,
    tangent_dim_split,
)

R_VALUES = (-2, 0, 3)


def test_1_dimension_six_at_d1():
    for r in R_VALUES:
        for k in range(8):
            assert hyper_h1_dim(r, r + k, 1) == 6
            assert hyper_h2_dim(r, r + k, 1) == 0


def test_2_dimension_formula_for_d_above_1():
    for r in R_VALUES:
        for d in range(2, 6):
            for k in range(d + 3):
                assert hyper_h1_dim(r, r + k, d) == 3 * d * (d + 3) // 2
                assert hyper_h2_dim(r, r + k, d) == 0


def test_3_split_oracle_equivalence():
    mismatches = []
    for d in range(5):
        for m in range(d + 1):
            sizes = sum(len(monomial_basis(3, k)) for k in (d, d - m, d + m, d))
            assert 2 * d * d + 6 * d + m * m + 4 == sizes
            for seed in (1, 2, 3):
                try:
                    phi = random_stable_higgs(m, d, seed)
                except CertificateError:
                    # no field with scalar commutant exists; test a generic one
                    phi = random_traceless_higgs(m, d, seed)
                quotient = adjoint_rank_oracle(m, d, phi).quotient_dim
                if quotient != tangent_dim_split(m, d):
                    mismatches.append((m, d, seed, quotient, tangent_dim_split(m, d)))
    assert mismatches == [], f"(m, d, seed, oracle, closed form): {mismatches}"


def test_4_kunneth_oracle_for_h0():
    for k in range(8):
        for d in range(6):
            assembled = h_p1xp1(0, BidegreeLine(d, d)) + h_p1xp1(0, BidegreeLine(1 - k + d, 1 + k + d)) - h_p2(0, d)
            assert h0_end0_l1(L1Bundle(0, k), d) == assembled


def test_5_riemann_roch_gate():
    paper_failures = set()
    for k in range(8):
        for d in range(6):
            B = L1Bundle(0, k)
            chi = chi_end0_twist(chern_l1(B), d)
            h0, h2 = h0_end0_l1(B, d), h2_end0_l1(B, d)
            assert h0 - h1_end0_l1(B, d, "derived") + h2 == chi
            if h0 - h1_end0_l1(B, d, "paper") + h2 != chi:
                paper_failures.add((k, d))
    assert paper_failures == {(k, d) for k in range(8) for d in range(6) if k > d + 2 and d >= 2}
    B = L1Bundle(0, 5)
    assert (h1_end0_l1(B, 2, "paper"), h1_end0_l1(B, 2, "derived")) == (0, 9)


def test_6_fixed_point_examples():
    # n = 0, 1, 2 with j = 1, m = 0 (c1 = -1)
    assert [(c.l1, c.l2) for c in enumerate_fixed(-1, 0, 1)] == [(0, 0)]
    assert [(c.l1, c.l2) for c in enumerate_fixed(-1, 1, 1)] == [(1, 0)]
    assert [(c.l1, c.l2) for c in enumerate_fixed(-1, 2, 1)] == [(1, 1), (2, 0)]
    c = enumerate_fixed(-1, 0, 1)[0]
    assert (c.m, c.j, c.higgs_dim, c.stability_flag) == (0, 1, 1, "stable")
    for c1 in range(-6, 7):
        for d in range(5):
            for c2 in range(-6, 1):
                for comp in enumerate_fixed(c1, c2, d):
                    assert 0 <= comp.m <= comp.j
                    if comp.m in (0, comp.j):
                        assert comp.l1 + comp.l2 == c2 == 0
            for comp in enumerate_fixed(c1, 1, d):
                assert comp.m * (comp.m - comp.j) <= 1
                if comp.m in (0, comp.j):
                    assert (comp.l1, comp.l2) == (1, 0)
        for c2 in range(-30, 0):
            assert enumerate_fixed(c1, c2, 1) == []


def test_7_type2_consistency():
    count = 0
    for t in _nonnegative_sum5():
        assert is_stable_l2(L2Bundle(-1, t))
        count += 1
    assert count == 462
    for d in range(7):
        L = BlowupLine(3 * d, (-d,) * 7)
        assert h_blowup7(0, L) == h_blowup7_special(0, d)
        assert h_blowup7(1, L) == h_blowup7_special(1, d)


def test_8_type1_identities():
    for r in range(-5, 6):
        assert chern_l1(L1Bundle(r, r)) == chern_split(r, r - 1)
        assert chern_l1(L1Bundle(r, r + 1)) == chern_split(r, r)
        for k in range(8):
            assert is_stable_l1(L1Bundle(r, r + k)) == (k >= 2)


def test_9_verify_is_deterministic():
    cmd = [sys.executable, "-m", "vwb", "verify", "--json"]
    first = subprocess.run(cmd, capture_output=True, check=False)
    second = subprocess.run(cmd, capture_output=True, check=False)
    assert first.returncode == 0, first.stderr.decode()
    assert first.stdout and first.stdout == second.stdout


def _nonnegative_sum5():
    def rec(prefix, left, slots):
        if slots == 1:
            yield prefix + (left,)
            return
        for v in range(left + 1):
            yield from rec(prefix + (v,), left - v, slots - 1)

    return rec((), 5, 7)


if __name__ == "__main__":
    import pytest

    sys.exit(pytest.main([__file__, "-q"]))
