import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pcontract.rootsys import (
    ConfigurationError,
    DomainError,
    SimpleType,
    Weight,
    apply_w0,
    deg,
    inner_product,
    parse_subset,
    parse_weight,
)

from conftest import W, rsys

CLASSICAL = {
    "A1": (1, (1,)), "A2": (3, (1, 1)), "A3": (6, (1, 1, 1)), "A4": (10, (1, 1, 1, 1)),
    "B2": (4, (1, 2)), "B3": (9, (1, 2, 2)), "C3": (9, (2, 2, 1)), "D4": (12, (1, 2, 1, 1)),
    "G2": (6, (3, 2)), "F4": (24, (2, 3, 4, 2)), "E6": (36, (1, 2, 2, 3, 2, 1)),
    "E7": (63, (2, 2, 3, 4, 3, 2, 1)),
}


@pytest.mark.parametrize("name", sorted(CLASSICAL))
def test_root_counts_and_highest_root(name):
    rs = rsys(name)
    n, theta = CLASSICAL[name]
    assert len(rs.positive_roots) == n
    assert rs.highest_root == theta
    assert all(c >= 0 for r in rs.positive_roots for c in r)


def test_rank_admissibility():
    for bad in ["A0", "B1", "C1", "D2", "E5", "E9", "F3", "G3", "X2", "A", ""]:
        with pytest.raises(ConfigurationError):
            SimpleType.parse(bad)
    assert str(SimpleType.parse("d4")) == "D4"


def test_closure_examples():
    assert rsys("A1").positive_roots == ((1,),)
    assert set(rsys("A2").positive_roots) == {(1, 0), (0, 1), (1, 1)}
    g2 = rsys("G2")
    assert len(g2.positive_roots) == 6 and g2.highest_root == (3, 2)
    # alpha_1 is short
    assert g2.root_norm2((1, 0)) < g2.root_norm2((0, 1))


def test_roots_ordered_by_height_then_lex():
    for name in ["B3", "D4", "F4"]:
        roots = rsys(name).positive_roots
        keys = [(sum(r), r) for r in roots]
        assert keys == sorted(keys)


def test_form_normalisation_and_examples():
    a2 = rsys("A2")
    a1, a2r = a2.simple_root(0), a2.simple_root(1)
    assert inner_product(a2, a1, a2r) == -1
    assert inner_product(a2, W(1, 0), a1) == 1
    assert inner_product(a2, W(1, 0), Weight.zero(2)) == 0
    for name in ["B3", "C3", "G2", "F4"]:
        rs = rsys(name)
        theta = rs.root_to_weight(rs.highest_root)
        assert inner_product(rs, theta, theta) == 2


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4", "G2", "F4"])
def test_form_symmetric_positive_definite(name):
    g = rsys(name).symmetrized_form
    n = len(g)
    assert all(g[i][j] == g[j][i] for i in range(n) for j in range(n))
    # leading principal minors via elimination
    for k in range(1, n + 1):
        sub = [list(row[:k]) for row in g[:k]]
        det = Fraction(1)
        for c in range(k):
            piv = sub[c][c]
            assert piv > 0
            det *= piv
            for r in range(c + 1, k):
                f = sub[r][c] / piv
                sub[r] = [a - f * b for a, b in zip(sub[r], sub[c])]
        assert det > 0


weights3 = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=3), min_size=3, max_size=3)


@settings(max_examples=60, deadline=None)
@given(weights3, weights3, st.sampled_from(["A3", "B3", "C3"]), st.integers(0, 2))
def test_simple_reflections_preserve_form(x, y, name, i):
    rs = rsys(name)
    lam, mu = Weight(x), Weight(y)
    assert inner_product(rs, rs.reflect(i, lam), rs.reflect(i, mu)) == inner_product(rs, lam, mu)
    assert inner_product(rs, lam, mu) == inner_product(rs, mu, lam)


@settings(max_examples=60, deadline=None)
@given(weights3, st.sampled_from(["A3", "B3", "C3"]))
def test_root_coordinates_round_trip(x, name):
    rs = rsys(name)
    lam = Weight(x)
    assert rs.root_to_weight(rs.to_root_coords(lam)) == lam


def _brute_force_w0(rs, sub, lam):
    """Longest element of W_sub found by BFS over the group (as a word)."""
    sub = sorted(sub)
    probe = rs.rho * 7 + Weight(range(1, rs.rank + 1))
    seen = {probe: ()}
    frontier = [probe]
    while frontier:
        nxt = []
        for v in frontier:
            for i in sub:
                w = rs.reflect(i, v)
                if w not in seen:
                    seen[w] = (i,) + seen[v]
                    nxt.append(w)
        frontier = nxt
    word = max(seen.values(), key=len)
    for i in reversed(word):
        lam = rs.reflect(i, lam)
    return lam


def test_apply_w0_examples():
    a2 = rsys("A2")
    assert apply_w0(a2, {0, 1}, W(1, 0)) == W(0, -1)
    assert apply_w0(a2, {0}, W(1, 1)) == W(1, 1) - a2.simple_root(0)
    lam = W(3, -7)
    assert apply_w0(a2, set(), lam) == lam


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "B3", "G2"])
def test_apply_w0_matches_group_enumeration(name):
    rs = rsys(name)
    lams = [W(*c) for c in itertools.product([-2, 0, 1], repeat=rs.rank)]
    for r in range(rs.rank + 1):
        for sub in itertools.combinations(range(rs.rank), r):
            for lam in lams:
                assert apply_w0(rs, sub, lam) == _brute_force_w0(rs, sub, lam)


@pytest.mark.parametrize("name", ["A3", "A4", "B3", "C3", "D4", "D5", "E6", "F4", "G2"])
def test_w0_is_involution_and_permutes_minus_pi(name):
    rs = rsys(name)
    full = range(rs.rank)
    for i in full:
        a = rs.simple_root(i)
        img = -apply_w0(rs, full, a)
        assert img in [rs.simple_root(j) for j in full]
        assert apply_w0(rs, full, apply_w0(rs, full, a)) == a
    assert apply_w0(rs, full, rs.rho) == -rs.rho


def test_deg_examples_and_errors():
    a2 = rsys("A2")
    assert deg(a2, Weight.zero(2)) == 0
    assert deg(a2, W(1, 0)) == 2
    assert deg(a2, W(1, 1)) == 4
    with pytest.raises(DomainError):
        deg(a2, W(-1, 2))
    with pytest.raises(DomainError):
        deg(a2, W(Fraction(1, 2), 0))


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=3, max_size=3),
       st.lists(st.integers(0, 6), min_size=3, max_size=3),
       st.sampled_from(["A3", "B3", "C3"]))
def test_deg_additive(x, y, name):
    rs = rsys(name)
    assert deg(rs, Weight(x) + Weight(y)) == deg(rs, Weight(x)) + deg(rs, Weight(y))


def test_parsers():
    assert parse_subset("1,3", 3) == frozenset({0, 2})
    assert parse_subset("", 3) == frozenset()
    assert parse_subset(None, 3) == frozenset()
    assert parse_weight("1, 1/2", 2) == W(1, Fraction(1, 2))
    for bad in ["0", "4", "a", "1;2"]:
        with pytest.raises(ConfigurationError):
            parse_subset(bad, 3)
    with pytest.raises(ConfigurationError):
        parse_weight("1", 2)
    with pytest.raises(ConfigurationError):
        parse_weight("x,1", 2)


def test_coroot_table_matches_pairing():
    for name in ["B3", "G2", "F4"]:
        rs = rsys(name)
        for beta, cor in zip(rs.positive_roots, rs.coroot_table):
            lam = rs.root_to_weight(beta)
            for i in range(rs.rank):
                assert rs.pairing(beta, i) == lam[i]
            # <beta, beta^vee> = 2
            assert sum(c * lam[i] for i, c in enumerate(cor)) == 2
