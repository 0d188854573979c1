import json
from fractions import Fraction
from pathlib import Path

import pytest

from pcontract.orbits import orbit_set
from pcontract.rootsys import Weight
from pcontract.syinv import (
    SymmetricAlgebra,
    ad_generator_matrix,
    enumerate_block,
    poly_mul,
    semi_invariants,
    sy_character,
    sy_nondegenerate,
    verify_lower_bound,
)

from conftest import W, contraction

GOLDEN = Path(__file__).parent / "golden"


def _borel_a1():
    P = contraction("A1")
    L = P.L
    return P, L.index((1,)), L.h_index(0)


def test_enumerate_block_examples():
    P, x, h = _borel_a1()
    S = SymmetricAlgebra(P)
    ix, ih = S.pos[x], S.pos[h]
    b = enumerate_block(P, 0, Weight.zero(1))
    assert b.monomials == ((0, 0),)
    b = enumerate_block(P, 1, W(2))
    assert len(b.monomials) == 1 and b.monomials[0][ix] == 1
    b = enumerate_block(P, 2, W(2))
    (m,) = b.monomials
    assert m[ix] == 1 and m[ih] == 1
    assert enumerate_block(P, 1, W(1)).dim == 0


def test_block_bookkeeping():
    P = contraction("B2", "1")
    S = SymmetricAlgebra(P)
    for k in range(4):
        for nu, mons in S.monomials_by_weight(k).items():
            assert mons == sorted(mons, reverse=True)
            for m in mons:
                assert sum(m) == k and S.weight_of(m) == nu


def test_ad_generator_matrix_examples():
    P, x, h = _borel_a1()
    S = SymmetricAlgebra(P)
    b = S.block(1, (0,))
    mat = ad_generator_matrix(P, x, b)
    ((target, col),) = mat.items()
    assert target[S.pos[x]] == 1 and col == {0: -2}
    assert ad_generator_matrix(P, x, S.block(0, (0,))) == {}
    P = contraction("A2")
    S = SymmetricAlgebra(P)
    for g in P.m_idx:
        for k in range(3):
            for nu, mons in S.monomials_by_weight(k).items():
                pure_m = [m for m in mons if all(m[S.pos[a]] == 0 for a in P.r_idx)]
                for m in pure_m:
                    assert S.apply(g, {m: 1}) == {}


def test_generator_moves_weight_by_root():
    P = contraction("A3", "1,2")
    S = SymmetricAlgebra(P)
    for g in P.generators_p_prime():
        shift = P.L.root_of(g)
        for nu, mons in S.monomials_by_weight(2).items():
            for m in mons[:3]:
                for t in S.apply(g, {m: 1}):
                    assert S.weight_of(t) == tuple(a + b for a, b in zip(nu, shift))


def test_semi_invariants_borel_a1():
    P, x, h = _borel_a1()
    S = SymmetricAlgebra(P)
    assert semi_invariants(P, 0) == [(Weight.zero(1), [{(0, 0): 1}])]
    ((nu, basis),) = semi_invariants(P, 1)
    assert nu == W(2) and len(basis) == 1 and list(basis[0])[0][S.pos[x]] == 1
    ((nu, basis),) = semi_invariants(P, 2)
    assert nu == W(4) and list(basis[0])[0][S.pos[x]] == 2
    ((nu, basis),) = sy_nondegenerate(P, 1)
    assert nu == W(2)


@pytest.mark.parametrize("t,pp,k", [("A2", "1", 3), ("B2", "1", 2), ("B2", "2", 2), ("A2", "", 2)])
def test_returned_vectors_are_semi_invariant_and_closed(t, pp, k):
    P = contraction(t, pp)
    S = SymmetricAlgebra(P)
    found = [(nu, p) for j in range(1, k + 1) for nu, basis in semi_invariants(P, j, algebra=S) for p in basis]
    for nu, p in found:
        assert S.is_semi_invariant(p)
    for (_, p), (_, q) in zip(found, found[1:]):
        assert S.is_semi_invariant(poly_mul(p, q))


def test_non_invariant_detected():
    P, x, h = _borel_a1()
    S = SymmetricAlgebra(P)
    hm = tuple(1 if i == S.pos[h] else 0 for i in range(2))
    assert not S.is_semi_invariant({hm: Fraction(1)})


def test_a2_borel_2rho_in_both_algebras():
    P = contraction("A2")
    two_rho = W(2, 2)
    first = {}
    for name, fn in [("contracted", semi_invariants), ("parabolic", sy_nondegenerate)]:
        for k in range(5):
            if any(nu == two_rho for nu, _ in fn(P, k)):
                first[name] = k
                break
    golden = json.loads((GOLDEN / "min_degrees.json").read_text())
    assert first == golden["A2_borel_2rho"]


def test_monotone_in_max_degree():
    P = contraction("B2", "2")
    orbs = orbit_set(P.rs, P.pi_prime)
    prev = None
    for K in range(5):
        rep = verify_lower_bound(P, orbs, 16, K)
        counts = [r.found for r in rep.rows]
        if prev is not None:
            assert all(a >= b for a, b in zip(counts, prev))
        prev = counts


@pytest.mark.parametrize("t,pp", [("A1", ""), ("A2", "1"), ("B2", "1"), ("B2", "2"), ("A3", "1,2")])
def test_min_degrees_golden(t, pp):
    P = contraction(t, pp)
    rep = verify_lower_bound(P, orbit_set(P.rs, P.pi_prime), 12, 8)
    got = {str(r.weight): r.min_degree for r in rep.rows}
    golden = json.loads((GOLDEN / "min_degrees.json").read_text())
    assert got == golden[f"{t}/{pp}"]


def test_verify_trivial_and_borel():
    P = contraction("A1")
    orbs = orbit_set(P.rs, set())
    rep = verify_lower_bound(P, orbs, 0, 8)
    assert [(r.weight, r.status, r.min_degree) for r in rep.rows] == [(Weight.zero(1), "confirmed", 0)]
    rep = verify_lower_bound(P, orbs, 8, 8)
    assert [(r.weight, r.min_degree) for r in rep.rows] == [(W(2 * n), n) for n in range(5)]
    assert rep.complete


def test_incomplete_is_not_refutation():
    P = contraction("A3", "1,2")
    rep = verify_lower_bound(P, orbit_set(P.rs, P.pi_prime), 12, 3)
    assert not rep.complete
    data = rep.to_json(P.rs)
    assert data["status"] == "incomplete"
    assert {r["status"] for r in data["rows"]} == {"confirmed", "not-yet-found"}


def test_sy_character_borel_a1_equality():
    from pcontract.charring import lower_bound_character

    P = contraction("A1")
    assert sy_character(P, 8, 8) == lower_bound_character(P.rs, orbit_set(P.rs, set()), 8)
