import warnings

import pytest
from hypothesis import given, strategies as st

from vwb.cohomology import (
    BidegreeLine,
    BlowupLine,
    FormulaRangeWarning,
    blowup7_cohomology,
    blowup7_euler_char,
    h_blowup7,
    h_blowup7_special,
    h_p1,
    h_p1xp1,
    h_p2,
)
from vwb.exact import monomial_basis


def cech_p1(i, n):
    # Laurent monomials x^u y^v with u + v = n: H^0 has u, v >= 0, H^1 has u, v <= -1
    span = range(-abs(n) - 2, abs(n) + 3)
    if i == 0:
        return sum(1 for u in span if u >= 0 and n - u >= 0)
    return sum(1 for u in span if u <= -1 and n - u <= -1)


def cech_quadric(i, a, b):
    return sum(cech_p1(p, a) * cech_p1(i - p, b) for p in (0, 1) if 0 <= i - p <= 1)


def test_p2_examples():
    assert h_p2(0, 2) == 6
    assert h_p2(2, -6) == len(monomial_basis(3, 3)) == 10
    assert all(h_p2(1, k) == 0 for k in range(-10, 11))


def test_p2_duality():
    for k in range(-10, 11):
        assert h_p2(2, k) == h_p2(0, -k - 3)


@pytest.mark.parametrize("k", range(-5, 11))
def test_p2_sections_are_monomials(k):
    assert h_p2(0, k) == len(monomial_basis(3, k))


def test_p1_matches_cech():
    for n in range(-8, 9):
        assert (h_p1(0, n), h_p1(1, n)) == (cech_p1(0, n), cech_p1(1, n))


def test_quadric_examples():
    for d in range(6):
        assert h_p1xp1(0, BidegreeLine(d, d)) == (d + 1) ** 2
        assert h_p1xp1(1, BidegreeLine(d, d)) == 0
    assert h_p1xp1(1, BidegreeLine(-2, 8)) == 9
    assert h_p1xp1(0, BidegreeLine(0, 0)) == 1


def test_quadric_matches_cech_grid():
    for a in range(-7, 8):
        for b in range(-7, 8):
            for i in range(3):
                assert h_p1xp1(i, BidegreeLine(a, b)) == cech_quadric(i, a, b)


def test_quadric_serre_duality():
    for a in range(-10, 11):
        for b in range(-10, 11):
            for i in range(3):
                assert h_p1xp1(i, BidegreeLine(a, b)) == h_p1xp1(2 - i, BidegreeLine(-a - 2, -b - 2))


def test_degree_out_of_range():
    with pytest.raises(ValueError):
        h_p2(3, 0)
    with pytest.raises(ValueError):
        h_blowup7(2, BlowupLine(0, (0,) * 7))


def test_blowup_examples():
    L = BlowupLine(3, (-1,) * 7)
    assert h_blowup7(0, L) == 10 and h_blowup7(1, L) == 7
    assert h_blowup7(0, BlowupLine(2, (0,) * 7)) == 6


def test_special_examples():
    assert h_blowup7_special(0, 0) == 1
    assert h_blowup7_special(1, 2) == 14
    assert h_blowup7_special(0, 2) == 21


@pytest.mark.parametrize("d", range(0, 7))
def test_special_agrees_with_general(d):
    L = BlowupLine(3 * d, (-d,) * 7)
    for i in (0, 1):
        assert h_blowup7(i, L) == h_blowup7_special(i, d)


def test_blowup_needs_seven_points():
    with pytest.raises(ValueError):
        BlowupLine(0, (0,) * 6)


def test_blowup_rejects_low_p():
    with pytest.raises(ValueError):
        blowup7_cohomology(BlowupLine(-2, (0,) * 7))


def test_negative_values_are_flagged():
    L = BlowupLine(0, (-3,) + (0,) * 6)
    assert blowup7_cohomology(L).flagged
    with pytest.warns(FormulaRangeWarning):
        assert h_blowup7(0, L) == 0


@given(st.integers(-1, 12), st.lists(st.integers(0, 6), min_size=7, max_size=7))
def test_nonnegative_t_riemann_roch(p, t):
    L = BlowupLine(p, tuple(t))
    res = blowup7_cohomology(L)
    assert not res.flagged
    chi = (p + 1) * (p + 2) // 2 - sum(x * (x - 1) for x in t) // 2
    assert res.h0 - res.h1 == chi == blowup7_euler_char(L)


@given(st.integers(-1, 12), st.lists(st.integers(-4, 4), min_size=7, max_size=7))
def test_riemann_roch_when_unflagged(p, t):
    L = BlowupLine(p, tuple(t))
    res = blowup7_cohomology(L)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        if not res.flagged:
            assert res.h0 - res.h1 == blowup7_euler_char(L)
