"""Irreducible highest-weight modules from Cartan data alone.

V(lambda) is built one weight space at a time, from the top down.  Each
weight space V_mu is spanned by the vectors f_i w with w running over a basis
of V_{mu + alpha_i}.  The contravariant form on these candidates is

    <f_i w, f_k w'> = <w, e_i f_k w'>,   e_j f_i w = f_i e_j w + [i == j] h_i w,

and only needs data from shallower weight spaces.  Its rank is dim V_mu, and
quotienting by its radical is exactly the quotient of the Verma module by its
maximal submodule.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import linalg as la
from .rootsys import ConsistencyError, RootSystem, Weight

IntWeight = tuple[int, ...]

DEFAULT_DIM_CEILING = 300


class ResourceError(RuntimeError):
    """A configured size bound would be exceeded."""


def _add(a: IntWeight, b: Sequence[int]) -> IntWeight:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: IntWeight, b: Sequence[int]) -> IntWeight:
    return tuple(x - y for x, y in zip(a, b))


@dataclass
class GradedOperator:
    """A weight-homogeneous operator on a weight module.

    ``blocks[mu]`` is the matrix V_mu -> V_{mu + shift}; missing blocks are zero.
    """

    shift: IntWeight
    blocks: dict[IntWeight, la.Matrix] = field(default_factory=dict)

    def block(self, mu: IntWeight, dims: dict[IntWeight, int]) -> la.Matrix:
        b = self.blocks.get(mu)
        if b is not None:
            return b
        return la.zeros(dims.get(_add(mu, self.shift), 0), dims.get(mu, 0))

    def apply(self, mu: IntWeight, v: Sequence[Fraction]) -> list[Fraction] | None:
        """Image of the vector ``v`` of V_mu, or None when it is zero by weight."""
        b = self.blocks.get(mu)
        if b is None:
            return None
        return la.matvec(b, v)

    def scaled(self, c) -> "GradedOperator":
        c = Fraction(c)
        return GradedOperator(self.shift, {mu: [[c * x for x in row] for row in m] for mu, m in self.blocks.items()})

    def is_zero(self) -> bool:
        return all(not any(any(row) for row in m) for m in self.blocks.values())


def compose(a: GradedOperator, b: GradedOperator, dims: dict[IntWeight, int]) -> GradedOperator:
    """a after b."""
    out = {}
    for mu, mb in b.blocks.items():
        mid = _add(mu, b.shift)
        ma = a.blocks.get(mid)
        if ma is None or not dims.get(mid):
            continue
        tgt = _add(mid, a.shift)
        if not dims.get(tgt):
            continue
        out[mu] = la.matmul(ma, mb)
    return GradedOperator(_add(a.shift, b.shift), out)


def combine(terms: Iterable[tuple[Fraction, GradedOperator]], shift: IntWeight,
            dims: dict[IntWeight, int]) -> GradedOperator:
    out: dict[IntWeight, la.Matrix] = {}
    for c, op in terms:
        if op.shift != shift:
            raise ValueError("mixing operators of different weight")
        for mu, m in op.blocks.items():
            acc = out.get(mu)
            if acc is None:
                acc = out[mu] = la.zeros(len(m), len(m[0]) if m else dims.get(mu, 0))
            for r, row in enumerate(m):
                arow = acc[r]
                for k, x in enumerate(row):
                    if x:
                        arow[k] += c * x
    return GradedOperator(shift, out)


def commutator(a: GradedOperator, b: GradedOperator, dims: dict[IntWeight, int]) -> GradedOperator:
    shift = _add(a.shift, b.shift)
    return combine([(Fraction(1), compose(a, b, dims)), (Fraction(-1), compose(b, a, dims))], shift, dims)


@dataclass
class WeightModule:
    """Finite-dimensional weight module with Chevalley generator actions.

    Weights are integer tuples in fundamental coordinates.  ``e[i]``, ``f[i]``
    are the actions of the simple root vectors; ``gram[mu]`` is the
    contravariant form on the chosen basis of V_mu (normalised to 1 on the
    highest weight vector).
    """

    rs: RootSystem
    highest: IntWeight
    weights: list[IntWeight]
    dims: dict[IntWeight, int]
    e: list[GradedOperator]
    f: list[GradedOperator]
    gram: dict[IntWeight, la.Matrix]
    root_ops: dict[tuple[int, ...], GradedOperator] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return sum(self.dims.values())

    @property
    def lam(self) -> Weight:
        return Weight(self.highest)

    def h(self, i: int) -> GradedOperator:
        zero = tuple(0 for _ in self.highest)
        return GradedOperator(zero, {mu: [[Fraction(mu[i]) if a == b else Fraction(0) for b in range(d)]
                                          for a in range(d)] for mu, d in self.dims.items()})

    def offset(self) -> dict[IntWeight, int]:
        """Start index of each weight space in the concatenated basis."""
        out, k = {}, 0
        for mu in self.weights:
            out[mu] = k
            k += self.dims[mu]
        return out


def build_module(rs: RootSystem, lam: Weight | Sequence[int],
                 dim_ceiling: int | None = DEFAULT_DIM_CEILING,
                 expected_dim: int | None = None) -> WeightModule:
    top = tuple(int(c) for c in lam)
    if any(c < 0 for c in top) or any(Fraction(c) != int(c) for c in lam):
        raise ValueError(f"highest weight must be dominant integral, got {lam}")
    n = rs.rank
    alpha = [tuple(rs.cartan_matrix[i]) for i in range(n)]

    dims: dict[IntWeight, int] = {top: 1}
    weights = [top]
    gram: dict[IntWeight, la.Matrix] = {top: [[Fraction(1)]]}
    E = [GradedOperator(alpha[i]) for i in range(n)]
    F = [GradedOperator(tuple(-c for c in alpha[i])) for i in range(n)]
    total = 1
    layer = [top]
    while layer:
        cands_by_mu: dict[IntWeight, list[tuple[int, int]]] = {}
        for nu in layer:
            for i in range(n):
                mu = _sub(nu, alpha[i])
                for b in range(dims[nu]):
                    cands_by_mu.setdefault(mu, []).append((i, b))
        next_layer = []
        for mu in sorted(cands_by_mu, reverse=True):
            cands = cands_by_mu[mu]
            # e_j applied to each candidate, as vectors of V_{mu + alpha_j}
            ej: list[list[list[Fraction] | None]] = []
            for (i, b) in cands:
                nu = _add(mu, alpha[i])
                row = []
                for j in range(n):
                    tgt = _add(mu, alpha[j])
                    if tgt not in dims:
                        row.append(None)
                        continue
                    vec = [Fraction(0)] * dims[tgt]
                    up = _add(nu, alpha[j])
                    if up in dims:
                        w = [E[j].blocks[nu][r][b] for r in range(dims[up])]
                        if any(w):
                            fb = F[i].blocks.get(up)
                            if fb is not None:
                                vec = [a + c for a, c in zip(vec, la.matvec(fb, w))]
                    if i == j:
                        vec[b] += nu[i]
                    row.append(vec)
                ej.append(row)
            m = len(cands)
            G = la.zeros(m, m)
            for c1, (i, b) in enumerate(cands):
                nu = _add(mu, alpha[i])
                g_nu = gram[nu]
                for c2 in range(m):
                    v = ej[c2][i]
                    if v is None:
                        continue
                    G[c1][c2] = sum((g_nu[b][k] * v[k] for k in range(len(v)) if v[k]), Fraction(0))
            _, pivots = la.rref(G, m)
            d = len(pivots)
            if d == 0:
                continue
            total += d
            if dim_ceiling is not None and total > dim_ceiling:
                raise ResourceError(f"module dimension exceeds ceiling {dim_ceiling}")
            gbb = [[G[p][q] for q in pivots] for p in pivots]
            ginv = la.inverse(gbb)
            coords = la.matmul(ginv, [[G[p][c] for c in range(m)] for p in pivots])
            dims[mu] = d
            weights.append(mu)
            gram[mu] = gbb
            for i in range(n):
                nu = _add(mu, alpha[i])
                cols = [(c, b) for c, (ii, b) in enumerate(cands) if ii == i]
                if not cols:
                    continue
                blk = la.zeros(d, dims[nu])
                for c, b in cols:
                    for r in range(d):
                        blk[r][b] = coords[r][c]
                F[i].blocks[nu] = blk
            for j in range(n):
                tgt = _add(mu, alpha[j])
                if tgt not in dims:
                    continue
                blk = la.zeros(dims[tgt], d)
                for col, p in enumerate(pivots):
                    v = ej[p][j]
                    for r in range(dims[tgt]):
                        blk[r][col] = v[r]
                E[j].blocks[mu] = blk
            next_layer.append(mu)
        layer = next_layer
    mod = WeightModule(rs, top, weights, dims, E, F, gram)
    if expected_dim is not None and mod.dim != expected_dim:
        raise ConsistencyError(f"V({lam}) has dimension {mod.dim}, expected {expected_dim}")
    return mod


def root_vector_ops(mod: WeightModule, recipe: Callable) -> None:
    """Fill ``mod.root_ops`` following a Chevalley-basis recipe.

    ``recipe`` yields ``(root, kind, i, beta, scale)`` in an order where ``beta``
    is always already available: kind ``"simple"`` means e_i or f_i, kind
    ``"bracket"`` means scale * [x_{+-alpha_i}, x_beta].
    """
    dims = mod.dims
    ops = mod.root_ops
    for root, kind, i, beta, scale in recipe():
        if kind == "simple":
            ops[root] = mod.e[i] if sum(root) > 0 else mod.f[i]
        else:
            gen = mod.e[i] if sum(root) > 0 else mod.f[i]
            ops[root] = commutator(gen, ops[beta], dims).scaled(scale)
