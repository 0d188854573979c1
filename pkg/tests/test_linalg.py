import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from pcontract import linalg as la


def _dense(rows, n):
    return [[Fraction(r.get(j, 0)) for j in range(n)] for r in rows]


sparse_rows = st.lists(
    st.dictionaries(st.integers(0, 5), st.integers(-4, 4).filter(bool), max_size=4),
    max_size=7,
)


@settings(max_examples=150, deadline=None)
@given(sparse_rows)
def test_sparse_rank_matches_dense(rows):
    assert la.sparse_rank(rows) == la.rank(_dense(rows, 6))


@settings(max_examples=150, deadline=None)
@given(sparse_rows)
def test_sparse_nullspace_is_kernel_and_complete(rows):
    ker = la.sparse_nullspace(rows, 6)
    m = _dense(rows, 6)
    for v in ker:
        assert not any(la.matvec(m, v))
    assert len(ker) + la.rank(m) == 6
    assert la.rank(ker) == len(ker)


def test_sparse_echelon_is_reduced_and_primitive():
    rng = random.Random(3)
    for _ in range(50):
        rows = [{j: rng.randint(-3, 3) for j in rng.sample(range(8), 3)} for _ in range(6)]
        ech = la.sparse_echelon(rows)
        for c, row in ech.items():
            assert min(row) == c and row[c] > 0
            g = 0
            for x in row.values():
                from math import gcd

                g = gcd(g, int(x))
            assert g == 1
            for c2, row2 in ech.items():
                if c2 != c:
                    assert c not in row2


def test_nullspace_is_deterministic_under_row_order():
    rows = [{0: 1, 1: -1}, {2: 2, 3: 1}, {0: 2, 1: -2, 2: 2, 3: 1}]
    a = la.sparse_nullspace(rows, 4)
    b = la.sparse_nullspace(list(reversed(rows)), 4)
    assert a == b


def test_dense_helpers():
    m = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]]
    inv = la.inverse(m)
    assert la.matmul(m, inv) == la.identity(2)
    assert la.solve(m, [3, 2]) == [1, 1]
    assert la.in_span([[1, 1, 0]], [2, 2, 0], 3)
    assert not la.in_span([[1, 1, 0]], [1, 0, 0], 3)
    assert la.integer_vector([Fraction(1, 2), Fraction(-1, 3)]) == [3, -2]
