import pytest
import sympy

from vwb.exact import HomPoly, monomial_basis
from vwb.split_higgs import (
    CertificateError,
    Lcg,
    NONZERO,
    PolyMatrix2,
    SplitPair,
    adjoint_rank_oracle,
    char_poly,
    commutator,
    conic_is_smooth,
    endomorphism_basis,
    h0_end_split,
    higgs_param_count,
    higgs_param_count_by_basis,
    random_stable_higgs,
    random_traceless_higgs,
    stability_bound,
    tangent_dim_split,
)

x0, x1, x2 = (HomPoly.variable(i) for i in range(3))
GRID = [(m, d) for d in range(5) for m in range(d + 1)]


def test_stability_bound():
    assert stability_bound(0, 0, 1)
    assert not stability_bound(3, 0, 2)
    assert stability_bound(2, 0, 2)


def test_param_counts():
    assert higgs_param_count(0, 1) == (12, 9)
    assert higgs_param_count(0, 2) == (24, 21)
    # 2 d^2 + 6 d + m^2 + 4 at m = d = 1
    assert higgs_param_count(1, 1) == (13, 9)


@pytest.mark.parametrize("m,d", GRID)
def test_param_count_is_monomial_count(m, d):
    sizes = [len(monomial_basis(3, k)) for k in (d, d - m, d + m, d)]
    assert higgs_param_count(m, d)[0] == sum(sizes) == higgs_param_count_by_basis(m, d)


def test_tangent_examples():
    assert tangent_dim_split(0, 1) == 6
    assert tangent_dim_split(1, 1) == 6
    assert tangent_dim_split(2, 3) == 27


def test_range_checks():
    with pytest.raises(ValueError):
        tangent_dim_split(3, 2)
    with pytest.raises(ValueError):
        higgs_param_count(-1, 2)


def test_entry_degrees_enforced():
    with pytest.raises(ValueError):
        PolyMatrix2(0, 1, 1, x0, x0, x0, x0)


def test_split_pair_checks_bundle():
    phi = PolyMatrix2.traceless(0, 1, 1, x0, HomPoly.monomial((0, 0, 0)), x0 * x1)
    SplitPair(1, 1, phi)
    with pytest.raises(ValueError):
        SplitPair(0, 1, phi)


def test_char_poly_nilpotent():
    phi = PolyMatrix2.build(0, 0, 1, c=x2)
    tr, det = char_poly(phi)
    assert tr.is_zero() and det.is_zero() and det.degree == 2


def test_char_poly_diagonal():
    a = x0 + 2 * x1
    tr, det = char_poly(PolyMatrix2.traceless(0, 0, 1, a))
    assert tr.is_zero()
    assert det == -(a * a)


@pytest.mark.parametrize("seed", range(1, 11))
def test_char_poly_matches_sympy(seed):
    phi = random_traceless_higgs(0, 1, seed)
    xs = sympy.symbols("x0:3")

    def S(h):
        return sum(sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*[x ** e for x, e in zip(xs, exp)])
                   for exp, c in h.terms.items())

    tr, det = char_poly(phi)
    M = sympy.Matrix([[S(phi.a), S(phi.b)], [S(phi.c), S(phi.e)]])
    assert tr.is_zero()
    assert sympy.expand(M.det() - S(det)) == 0
    assert sympy.expand(-S(phi.a) ** 2 - S(phi.b) * S(phi.c) - S(det)) == 0


@pytest.mark.parametrize("m,d", GRID)
def test_trace_free_char_poly_degrees(m, d):
    phi = random_traceless_higgs(m, d, 5)
    tr, det = char_poly(phi)
    assert tr.is_zero() and tr.degree == d and det.degree == 2 * d


def test_conic_examples():
    assert conic_is_smooth(x0 * x1 - x2 * x2)
    assert not conic_is_smooth(x0 * x0)
    assert not conic_is_smooth(x0 * x1)
    with pytest.raises(ValueError):
        conic_is_smooth(x0)


def test_generic_determinant_conic_is_smooth():
    hits = sum(conic_is_smooth(char_poly(random_traceless_higgs(0, 1, seed))[1]) for seed in range(1, 101))
    assert hits >= 90


def test_endomorphisms():
    assert h0_end_split(0) == 4 == len(endomorphism_basis(0, 0))
    assert h0_end_split(1) == 5 == len(endomorphism_basis(0, 1))
    assert h0_end_split(2) == 8


def test_commutator_antisymmetric():
    psi = endomorphism_basis(0, 1)[2]
    phi = random_traceless_higgs(1, 1, 3)
    a = commutator(psi, PolyMatrix2.build(0, 1, 0, b=HomPoly.zero(3, -1), c=x0))
    b = commutator(PolyMatrix2.build(0, 1, 0, b=HomPoly.zero(3, -1), c=x0), psi)
    assert a.a == -b.a and a.c == -b.c
    assert commutator(psi, phi).is_traceless()


def test_oracle_examples():
    assert tuple(adjoint_rank_oracle(0, 1, random_stable_higgs(0, 1, 1))) == (1, 3, 6)
    assert tuple(adjoint_rank_oracle(1, 1, random_stable_higgs(1, 1, 7))) == (1, 4, 6)
    diagonal = PolyMatrix2.traceless(0, 0, 1, x0 + x1)
    assert adjoint_rank_oracle(0, 1, diagonal).commutant_dim >= 2


def test_oracle_rejects_trace():
    with pytest.raises(ValueError):
        adjoint_rank_oracle(0, 1, PolyMatrix2.build(0, 0, 1, a=x0))


@pytest.mark.parametrize("m,d", [c for c in GRID if c != (0, 0)])
@pytest.mark.parametrize("seed", [1, 2, 3])
def test_oracle_grid(m, d, seed):
    phi = random_stable_higgs(m, d, seed)
    res = adjoint_rank_oracle(m, d, phi)
    assert res.commutant_dim == 1
    assert res.quotient_dim == tangent_dim_split(m, d)
    assert res.orbit_dim == h0_end_split(m) - 1


def test_constant_fields_are_never_simple():
    # every field on O + O is a constant matrix, which commutes with itself
    with pytest.raises(CertificateError):
        random_stable_higgs(0, 0, 1)
    res = adjoint_rank_oracle(0, 0, random_traceless_higgs(0, 0, 1))
    assert res.commutant_dim == 2


def test_field_at_m_equals_d():
    phi = random_stable_higgs(3, 3, 4)
    assert phi.b.degree == 0 and not phi.b.is_zero()


def test_generator_is_reproducible():
    g = Lcg(1)
    assert g.next() == (1664525 * 1 + 1013904223) % 2 ** 32
    assert [Lcg(9).coefficient() for _ in range(3)] == [Lcg(9).coefficient() for _ in range(3)]
    assert set(Lcg(2).coefficient() for _ in range(1)) <= set(NONZERO)
    assert 0 not in NONZERO and len(NONZERO) == 10
    assert random_traceless_higgs(2, 3, 11) == random_traceless_higgs(2, 3, 11)
