
import pytest

from pcontract.charring import weights_with_dim_at_most, weyl_dim
from pcontract.hwmod import (
    annihilator_of_m,
    build_irreducible,
    check_annihilator,
    check_graded_identity,
    chevalley_for,
    lowest_weight,
    matrix_coeff_invariant_dim,
    matrix_coeff_invariants,
    module_bracket_violations,
    module_relation_violations,
    pbw_filtration,
    v_double_prime,
    v_prime,
    verma_gram,
)
from pcontract.irrep import ResourceError
from pcontract.linalg import rank
from pcontract.orbits import generator_weight, is_in_D
from pcontract.rootsys import DomainError, Weight

from conftest import TEST_MATRIX, W, contraction, rsys


def test_verma_gram_examples():
    a1 = rsys("A1")
    assert verma_gram(a1, W(1), W(1)) == [[1]]
    assert verma_gram(a1, W(1), W(-1)) == [[1]]
    assert verma_gram(a1, W(1), W(-3)) == [[0]]
    assert verma_gram(a1, W(3), W(-1)) == [[2 * 3 * 2]]
    with pytest.raises(DomainError):
        verma_gram(a1, W(1), W(3))
    with pytest.raises(ResourceError):
        verma_gram(rsys("A2"), W(1, 1), W(-11, 7), max_height=5)


@pytest.mark.parametrize("name,lam", [("A2", (1, 1)), ("A2", (2, 1)), ("B2", (1, 1)), ("A3", (1, 0, 1)), ("G2", (1, 0))])
def test_gram_ranks_match_module(name, lam):
    rs = rsys(name)
    lam = Weight(lam)
    M = build_irreducible(rs, lam)
    for mu, d in M.dims.items():
        if sum(rs.to_root_coords(lam - Weight(mu))) <= 4:
            g = verma_gram(rs, lam, Weight(mu))
            assert rank(g) == d


def test_build_examples():
    M = build_irreducible(rsys("A2"), Weight.zero(2))
    assert M.dim == 1
    M = build_irreducible(rsys("A2"), W(1, 0))
    assert M.dims == {(1, 0): 1, (-1, 1): 1, (0, -1): 1}
    M = build_irreducible(rsys("A1"), W(2))
    assert M.dims == {(2,): 1, (0,): 1, (-2,): 1}
    with pytest.raises(ResourceError):
        build_irreducible(rsys("A3"), W(3, 3, 3), dim_ceiling=300)
    with pytest.raises(DomainError):
        build_irreducible(rsys("A2"), W(-1, 0))


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3", "C3"])
def test_modules_satisfy_relations(name):
    rs = rsys(name)
    L = chevalley_for(rs)
    for lam in weights_with_dim_at_most(rs, 30)[:6]:
        M = build_irreducible(rs, lam, L=L)
        assert M.dim == weyl_dim(rs, lam)
        assert module_relation_violations(M) == []
        assert module_bracket_violations(M, L) == []
        assert M.dims[lowest_weight(M)] == 1


def test_filtration_examples():
    P = contraction("A2", "1")
    M = build_irreducible(P.rs, W(0, 1), L=P.L)
    f = pbw_filtration(M, P)
    assert v_prime(M, P).dim == 1
    assert [lev.dim for lev in f.levels] == [1, 3]
    assert f.gr_totals == [1, 2]
    assert check_graded_identity(M, P, f)
    M = build_irreducible(P.rs, W(1, 0), L=P.L)
    assert v_prime(M, P).dim == 2
    P = contraction("A1")
    M = build_irreducible(P.rs, W(2), L=P.L)
    assert pbw_filtration(M, P).gr_totals == [1, 1, 1]


def test_annihilator_examples():
    P = contraction("A2", "1")
    for lam, d in [((0, 0), 1), ((0, 1), 1), ((1, 0), 2)]:
        M = build_irreducible(P.rs, Weight(lam), L=P.L)
        assert check_annihilator(M, P)
        assert annihilator_of_m(M, P).dim == d


def test_invariant_examples():
    P = contraction("A2", "1")
    for lam, want in [((0, 0), 1), ((0, 1), 0), ((1, 1), 1), ((2, 2), 1), ((1, 0), 0)]:
        M = build_irreducible(P.rs, Weight(lam), L=P.L)
        assert matrix_coeff_invariant_dim(M, P) == want
    M = build_irreducible(P.rs, W(1, 1), L=P.L)
    assert matrix_coeff_invariants(M, P).weights == (W(0, 3),)


@pytest.mark.parametrize("t,pp", TEST_MATRIX)
def test_small_grid_prop_and_structure(t, pp):
    P = contraction(t, pp)
    rs = P.rs
    for lam in weights_with_dim_at_most(rs, 20):
        M = build_irreducible(rs, lam, L=P.L)
        f = pbw_filtration(M, P)
        assert check_annihilator(M, P)
        assert check_graded_identity(M, P, f)
        for mu, d in M.dims.items():
            assert sum(g.get(mu, 0) for g in f.gr_dims) == d
        inv = matrix_coeff_invariants(M, P)
        assert inv.dim == int(is_in_D(rs, P.pi_prime, lam))
        assert all(w == generator_weight(rs, P.pi_prime, lam) for w in inv.weights)


def test_v_double_prime_is_lowest_r_module():
    P = contraction("A2", "1")
    M = build_irreducible(P.rs, W(1, 1), L=P.L)
    vpp = v_double_prime(M, P)
    assert vpp.dim == 2
    assert set(vpp.graded_dims()) == {(-1, -1), (1, -2)}


def test_graded_identity_detects_wrong_filtration():
    P = contraction("A2", "1")
    M = build_irreducible(P.rs, W(1, 1), L=P.L)
    broken = pbw_filtration(M, P)
    broken.levels = broken.levels[1:]
    assert not check_graded_identity(M, P, broken)
