"""Exact linear algebra over Q.

Dense helpers work on lists of ``Fraction`` rows.  The sparse kernel works
on integer rows stored as ``{column: value}`` dicts and eliminates without
fractions: each reduction is ``p * row - c * pivot_row`` followed by division
by the content of the row.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Matrix = list[list[Fraction]]
SparseRow = dict[int, int]


# -- dense -------------------------------------------------------------------


def rref(m: Sequence[Sequence], ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    rows = [[Fraction(x) for x in r] for r in m]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        if p != 1:
            rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(m: Sequence[Sequence]) -> int:
    if not m:
        return 0
    return len(rref(m)[1])


def nullspace(m: Sequence[Sequence], ncols: int) -> Matrix:
    """Basis of {x : m x = 0}, one vector per free column."""
    if not m:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref(m, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def inverse(m: Sequence[Sequence]) -> Matrix:
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    red, pivots = rref(aug, n)
    if pivots != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def solve(m: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """One solution of m x = b, or None if inconsistent."""
    ncols = len(m[0]) if m else 0
    aug = [list(row) + [bi] for row, bi in zip(m, b)]
    red, pivots = rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [Fraction(0)] * ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[ncols]
    return x


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a or not b:
        return [[Fraction(0)] * (len(b[0]) if b else 0) for _ in a]
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col) if x and y), Fraction(0)) for col in bt] for row in a]


def matvec(a: Matrix, v: Sequence) -> list[Fraction]:
    nz = [(k, y) for k, y in enumerate(v) if y]
    return [sum((row[k] * y for k, y in nz if row[k]), Fraction(0)) for row in a]


def transpose(a: Matrix, nrows_if_empty: int = 0) -> Matrix:
    if not a:
        return [[] for _ in range(nrows_if_empty)]
    return [list(col) for col in zip(*a)]


def zeros(r: int, c: int) -> Matrix:
    return [[Fraction(0)] * c for _ in range(r)]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def span_basis(vectors: Iterable[Sequence], dim: int) -> Matrix:
    """Canonical (reduced echelon) basis of the span of ``vectors``."""
    vs = [list(v) for v in vectors]
    if not vs:
        return []
    return rref(vs, dim)[0]


def in_span(basis: Matrix, v: Sequence, dim: int) -> bool:
    if not basis:
        return not any(v)
    return rank(list(basis) + [list(v)]) == rank(basis)


# -- sparse, fraction-free ---------------------------------------------------


def _primitive(row: SparseRow) -> SparseRow:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g not in (0, 1):
        row = {k: v // g for k, v in row.items()}
    return row


def _eliminate(row: SparseRow, prow: SparseRow, c: int) -> SparseRow:
    """Integer combination of ``row`` and ``prow`` with zero in column ``c``."""
    p, f = prow[c], row[c]
    g = gcd(p, f)
    p //= g
    f //= g
    new = {k: p * v for k, v in row.items()} if p != 1 else dict(row)
    for k, v in prow.items():
        nv = new.get(k, 0) - f * v
        if nv:
            new[k] = nv
        else:
            new.pop(k, None)
    return new


def sparse_echelon(rows: Iterable[SparseRow]) -> dict[int, SparseRow]:
    """Fraction-free reduced echelon form.

    Returns ``{pivot_column: row}`` where every row is a primitive integer
    vector with positive pivot and zero in every other pivot column.
    Pivot choice is the first nonzero column of the incoming row in
    canonical order, so the result is independent of input order.
    """
    piv: dict[int, SparseRow] = {}
    for row in rows:
        row = {k: v for k, v in row.items() if v}
        while row:
            hits = [k for k in row if k in piv]
            if not hits:
                break
            c = min(hits)
            row = _eliminate(row, piv[c], c)
        if not row:
            continue
        row = _primitive(row)
        c = min(row)
        # clear column c from existing rows to keep the form reduced
        for pc, prow in list(piv.items()):
            if prow.get(c):
                piv[pc] = _primitive(_eliminate(prow, row, c))
        piv[c] = row
    return piv


def sparse_rank(rows: Iterable[SparseRow]) -> int:
    return len(sparse_echelon(rows))


def sparse_nullspace(rows: Iterable[SparseRow], ncols: int) -> list[list[Fraction]]:
    """Basis of the kernel, returned in reduced echelon form."""
    piv = sparse_echelon(rows)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for pc, prow in piv.items():
            x = prow.get(f)
            if x:
                v[pc] = Fraction(-x, prow[pc])
        basis.append(v)
    return canonical_basis(basis, ncols)


def canonical_basis(vectors: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    if not vectors:
        return []
    return rref(vectors, ncols)[0]


def integer_vector(v: Sequence[Fraction]) -> list[int]:
    """Smallest integer multiple of ``v`` with positive leading entry."""
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return ints
    lead = next(x for x in ints if x)
    if lead < 0:
        g = -g
    return [x // g for x in ints]
