"""Highest-weight modules, the generalized PBW filtration, and matrix-coefficient invariants.

Subspaces of a module are kept weight by weight as reduced echelon bases in
the module's own coordinates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Sequence

from . import linalg as la
from .charring import weyl_dim
from .chevalley import LieAlgebraBasis, ParabolicContraction, build_chevalley
from .irrep import (
    DEFAULT_DIM_CEILING,
    GradedOperator,
    IntWeight,
    ResourceError,
    WeightModule,
    build_module,
    commutator,
    root_vector_ops,
)
from .rootsys import ConsistencyError, DomainError, RootSystem, Weight, apply_w0

DEFAULT_MAX_HEIGHT = 10


@lru_cache(maxsize=None)
def chevalley_for(rs: RootSystem) -> LieAlgebraBasis:
    return build_chevalley(rs)


def _int_weight(lam) -> IntWeight:
    if any(Fraction(c).denominator != 1 for c in lam):
        raise DomainError(f"weight {lam} is not integral")
    return tuple(int(c) for c in lam)


# -- Verma module contravariant form ---------------------------------------------


class VermaModule:
    """M(lambda) with PBW basis f_{b1} ... f_{br} v, factors sorted by root order."""

    def __init__(self, L: LieAlgebraBasis, lam: Weight):
        self.L = L
        self.rs = L.rs
        self.lam = _int_weight(lam)
        self.N = L.n_pos
        self._cache: dict = {}

    def _neg_pos(self, a: int) -> int | None:
        """Position of a negative root vector in the PBW order, else None."""
        k = a - self.N - self.rs.rank
        return k if k >= 0 else None

    def weight(self, factors: tuple[int, ...]) -> IntWeight:
        w = list(self.lam)
        for p in factors:
            root = self.rs.positive_roots[p]
            for j in range(self.rs.rank):
                w[j] -= self.rs.pairing(root, j)
        return tuple(w)

    def act(self, a: int, factors: tuple[int, ...]) -> dict[tuple[int, ...], int]:
        """Basis element a of g applied to the PBW monomial ``factors`` v."""
        key = (a, factors)
        got = self._cache.get(key)
        if got is not None:
            return got
        L = self.L
        out: dict[tuple[int, ...], int] = {}
        p = self._neg_pos(a)
        if L.is_cartan(a):
            c = self.weight(factors)[a - self.N]
            if c:
                out[factors] = c
        elif not factors:
            if p is not None:
                out[(p,)] = 1
        elif p is not None and p <= factors[0]:
            out[(p,) + factors] = 1
        else:
            f0 = self.N + self.rs.rank + factors[0]
            rest = factors[1:]
            for t, c in self.act(a, rest).items():
                for t2, c2 in self.act(f0, t).items():
                    out[t2] = out.get(t2, 0) + c * c2
            for b, z in L.bracket(a, f0).items():
                for t, c in self.act(b, rest).items():
                    out[t] = out.get(t, 0) + z * c
        out = {t: c for t, c in out.items() if c}
        self._cache[key] = out
        return out

    def basis(self, mu: Weight) -> list[tuple[int, ...]]:
        """PBW monomials of weight mu (Kostant partitions of lambda - mu)."""
        diff = self.rs.to_root_coords(Weight(self.lam) - mu)
        if any(c.denominator != 1 or c < 0 for c in diff):
            return []
        target = tuple(int(c) for c in diff)
        roots = self.rs.positive_roots
        out = []

        def rec(start, remaining, acc):
            if not any(remaining):
                out.append(tuple(acc))
                return
            for k in range(start, len(roots)):
                r = roots[k]
                if all(x <= y for x, y in zip(r, remaining)):
                    rec(k, tuple(y - x for x, y in zip(r, remaining)), acc + [k])

        rec(0, target, [])
        return sorted(out)

    def form(self, u: tuple[int, ...], w: tuple[int, ...]) -> int:
        vec = {w: 1}
        for p in u:
            a = p  # positive root vector x_beta has global index p
            nxt: dict = {}
            for t, c in vec.items():
                for t2, c2 in self.act(a, t).items():
                    nxt[t2] = nxt.get(t2, 0) + c * c2
            vec = {t: c for t, c in nxt.items() if c}
        return vec.get((), 0)


def verma_gram(rs: RootSystem, lam: Weight, mu: Weight, max_height: int = DEFAULT_MAX_HEIGHT,
               L: LieAlgebraBasis | None = None) -> list[list[Fraction]]:
    """Contravariant form on the PBW basis of M(lambda)_mu."""
    diff = rs.to_root_coords(lam - mu)
    if any(c < 0 or c.denominator != 1 for c in diff):
        raise DomainError(f"{mu} is not below {lam} in the root order")
    if sum(diff) > max_height:
        raise ResourceError(f"height {sum(diff)} exceeds bound {max_height}")
    V = VermaModule(L or chevalley_for(rs), lam)
    basis = V.basis(mu)
    return [[Fraction(V.form(u, w)) for w in basis] for u in basis]


# -- irreducible modules ---------------------------------------------------------------


def build_irreducible(rs: RootSystem, lam: Weight, dim_ceiling: int | None = DEFAULT_DIM_CEILING,
                      L: LieAlgebraBasis | None = None) -> WeightModule:
    if not lam.is_dominant():
        raise DomainError(f"highest weight must be dominant, got {lam}")
    expected = weyl_dim(rs, lam)
    if dim_ceiling is not None and expected > dim_ceiling:
        raise ResourceError(f"dim V({lam}) = {expected} exceeds ceiling {dim_ceiling}")
    mod = build_module(rs, lam, dim_ceiling=None, expected_dim=expected)
    L = L or chevalley_for(rs)
    root_vector_ops(mod, L.module_recipe)
    return mod


def lowest_weight(M: WeightModule) -> IntWeight:
    return _int_weight(apply_w0(M.rs, range(M.rs.rank), M.lam))


def module_relation_violations(M: WeightModule) -> list[str]:
    """[e_i, f_j] = delta_ij h_i and [h_j, e_i] = <alpha_i, h_j> e_i on M."""
    bad = []
    n = M.rs.rank
    for i in range(n):
        for j in range(n):
            c = commutator(M.e[i], M.f[j], M.dims)
            want = M.h(i) if i == j else GradedOperator(c.shift)
            if not _same(c, want, M.dims):
                bad.append(f"[e{i + 1}, f{j + 1}]")
            c = commutator(M.h(j), M.e[i], M.dims)
            if not _same(c, M.e[i].scaled(M.rs.cartan_matrix[i][j]), M.dims):
                bad.append(f"[h{j + 1}, e{i + 1}]")
    return bad


def module_bracket_violations(M: WeightModule, L: LieAlgebraBasis) -> list[tuple[int, int]]:
    """Root-vector pairs whose commutator on M disagrees with the structure constants."""
    bad = []
    N = L.n_pos
    for a in range(L.dim):
        for b in range(a + 1, L.dim):
            ra, rb = L.roots[a], L.roots[b]
            if ra is None or rb is None:
                continue
            c = commutator(M.root_ops[ra], M.root_ops[rb], M.dims)
            terms = []
            for k, z in L.bracket(a, b).items():
                op = M.root_ops[L.roots[k]] if L.roots[k] is not None else M.h(k - N)
                terms.append(op.scaled(z))
            want = GradedOperator(c.shift)
            for t in terms:
                want = _sum(want, t, M.dims)
            if not _same(c, want, M.dims):
                bad.append((a, b))
    return bad


def _sum(a: GradedOperator, b: GradedOperator, dims) -> GradedOperator:
    from .irrep import combine
    return combine([(Fraction(1), a), (Fraction(1), b)], a.shift, dims)


def _same(a: GradedOperator, b: GradedOperator, dims) -> bool:
    for mu in dims:
        if a.shift != b.shift:
            return False
        if a.block(mu, dims) != b.block(mu, dims):
            return False
    return True


# -- subspaces ---------------------------------------------------------------------------


@dataclass
class Subspace:
    """Weight-graded subspace: ``basis[mu]`` is a reduced echelon basis of its mu part."""

    dims: dict[IntWeight, int]
    basis: dict[IntWeight, la.Matrix] = field(default_factory=dict)

    def dim_at(self, mu: IntWeight) -> int:
        return len(self.basis.get(mu, []))

    @property
    def dim(self) -> int:
        return sum(len(b) for b in self.basis.values())

    def graded_dims(self) -> dict[IntWeight, int]:
        return {mu: len(b) for mu, b in self.basis.items() if b}

    def add(self, mu: IntWeight, vectors: Iterable[Sequence[Fraction]]) -> bool:
        """Enlarge by ``vectors`` in V_mu; True when the dimension grew."""
        vectors = [list(v) for v in vectors if any(v)]
        if not vectors:
            return False
        old = self.basis.get(mu, [])
        new = la.span_basis(old + vectors, self.dims[mu])
        self.basis[mu] = new
        return len(new) > len(old)

    def copy(self) -> "Subspace":
        return Subspace(self.dims, {mu: [list(r) for r in b] for mu, b in self.basis.items()})

    def same_as(self, other: "Subspace") -> bool:
        keys = set(self.graded_dims()) | set(other.graded_dims())
        return all(self.basis.get(mu, []) == other.basis.get(mu, []) for mu in keys)

    def image(self, op: GradedOperator) -> dict[IntWeight, list[list[Fraction]]]:
        out: dict = {}
        for mu, vecs in self.basis.items():
            for v in vecs:
                w = op.apply(mu, v)
                if w is not None and any(w):
                    out.setdefault(tuple(x + y for x, y in zip(mu, op.shift)), []).append(w)
        return out


def closure(M: WeightModule, start: Subspace, ops: Sequence[GradedOperator]) -> Subspace:
    """Smallest subspace containing ``start`` and stable under ``ops``."""
    sub = start.copy()
    frontier = {mu: list(b) for mu, b in sub.basis.items()}
    while frontier:
        nxt: dict = {}
        for op in ops:
            for mu, vecs in frontier.items():
                for v in vecs:
                    w = op.apply(mu, v)
                    if w is None or not any(w):
                        continue
                    tgt = tuple(x + y for x, y in zip(mu, op.shift))
                    nxt.setdefault(tgt, []).append(w)
        frontier = {}
        for mu, vecs in nxt.items():
            before = sub.basis.get(mu, [])
            if sub.add(mu, vecs):
                frontier[mu] = [v for v in sub.basis[mu] if v not in before]
    return sub


def _highest_subspace(M: WeightModule) -> Subspace:
    s = Subspace(M.dims)
    s.add(M.highest, [[Fraction(1)]])
    return s


def _lowest_subspace(M: WeightModule) -> Subspace:
    mu = lowest_weight(M)
    if M.dims.get(mu) != 1:
        raise ConsistencyError(f"lowest weight space {mu} has dimension {M.dims.get(mu)}")
    s = Subspace(M.dims)
    s.add(mu, [[Fraction(1)]])
    return s


def v_prime(M: WeightModule, P: ParabolicContraction) -> Subspace:
    """V'(lambda) = U(r) v_lambda."""
    return closure(M, _highest_subspace(M), [M.f[i] for i in sorted(P.pi_prime)])


def v_double_prime(M: WeightModule, P: ParabolicContraction) -> Subspace:
    """V''(lambda) = U(r) v_{w0 lambda}."""
    return closure(M, _lowest_subspace(M), [M.e[i] for i in sorted(P.pi_prime)])


# -- PBW filtration ------------------------------------------------------------------------


@dataclass
class PBWFiltration:
    levels: list[Subspace]

    @property
    def gr_dims(self) -> list[dict[IntWeight, int]]:
        out = []
        prev: dict = {}
        for lev in self.levels:
            cur = lev.graded_dims()
            out.append({mu: d - prev.get(mu, 0) for mu, d in cur.items() if d - prev.get(mu, 0)})
            prev = cur
        return out

    @property
    def gr_totals(self) -> list[int]:
        return [sum(d.values()) for d in self.gr_dims]


def m_minus_ops(M: WeightModule, P: ParabolicContraction) -> list[GradedOperator]:
    return [M.root_ops[tuple(-c for c in r)] for r in P.m_roots]


def m_ops(M: WeightModule, P: ParabolicContraction) -> list[GradedOperator]:
    return [M.root_ops[r] for r in P.m_roots]


def pbw_filtration(M: WeightModule, P: ParabolicContraction) -> PBWFiltration:
    ops = m_minus_ops(M, P)
    cur = v_prime(M, P)
    levels = [cur]
    while cur.dim < M.dim:
        nxt = cur.copy()
        grew = False
        for op in ops:
            for mu, vecs in cur.image(op).items():
                grew |= nxt.add(mu, vecs)
        if not grew:
            raise ConsistencyError("PBW filtration stalled below dim V")
        levels.append(nxt)
        cur = nxt
    return PBWFiltration(levels)


def annihilator_of_m(M: WeightModule, P: ParabolicContraction) -> Subspace:
    """{v : x_gamma v = 0 for all gamma in the roots of m}."""
    ops = m_ops(M, P)
    out = Subspace(M.dims)
    for mu, d in M.dims.items():
        rows = []
        for op in ops:
            rows.extend(op.block(mu, M.dims))
        out.add(mu, la.nullspace(rows, d))
    return out


def check_annihilator(M: WeightModule, P: ParabolicContraction) -> bool:
    return annihilator_of_m(M, P).same_as(v_prime(M, P))


def ordered_monomials(n: int, k: int) -> list[tuple[int, ...]]:
    """Exponent vectors of total degree k in n ordered variables."""
    out = []
    for combo in itertools.combinations_with_replacement(range(n), k):
        e = [0] * n
        for c in combo:
            e[c] += 1
        out.append(tuple(e))
    return sorted(out, reverse=True)


def check_graded_identity(M: WeightModule, P: ParabolicContraction,
                          filt: PBWFiltration | None = None) -> bool:
    """gr_k has the dimensions of degree-k ordered m^- monomials applied to V' modulo F_{k-1}."""
    filt = filt or pbw_filtration(M, P)
    ops = m_minus_ops(M, P)
    vp = v_prime(M, P)
    if not filt.levels[0].same_as(vp):
        return False
    gr = filt.gr_dims
    for k in range(1, len(filt.levels)):
        acc = filt.levels[k - 1].copy()
        for mono in ordered_monomials(len(ops), k):
            imgs = {mu: list(b) for mu, b in vp.basis.items()}
            # rightmost factor acts first
            for idx in reversed(range(len(ops))):
                for _ in range(mono[idx]):
                    nxt: dict = {}
                    for mu, vecs in imgs.items():
                        for v in vecs:
                            w = ops[idx].apply(mu, v)
                            if w is not None and any(w):
                                nxt.setdefault(tuple(x + y for x, y in zip(mu, ops[idx].shift)), []).append(w)
                    imgs = nxt
            for mu, vecs in imgs.items():
                acc.add(mu, vecs)
        prev = filt.levels[k - 1].graded_dims()
        got = {mu: d - prev.get(mu, 0) for mu, d in acc.graded_dims().items() if d - prev.get(mu, 0)}
        if got != gr[k]:
            return False
    return True


# -- matrix-coefficient invariants -------------------------------------------------------------


def _coords(basis: la.Matrix, v: Sequence[Fraction]) -> list[Fraction]:
    """Coordinates of v in a reduced echelon basis (v assumed in the span)."""
    out = []
    for row in basis:
        piv = next(k for k, x in enumerate(row) if x)
        out.append(v[piv])
    recon = [sum((c * row[k] for c, row in zip(out, basis)), Fraction(0)) for k in range(len(v))]
    if recon != list(v):
        raise ConsistencyError("vector left the subspace")
    return out


def _restricted(sub: Subspace, op: GradedOperator) -> dict[IntWeight, la.Matrix]:
    """Matrix of op on ``sub`` in its echelon bases: mu -> (dim target x dim source)."""
    out = {}
    for mu, vecs in sub.basis.items():
        tgt = tuple(x + y for x, y in zip(mu, op.shift))
        tb = sub.basis.get(tgt, [])
        cols = []
        for v in vecs:
            w = op.apply(mu, v)
            if w is None or not any(w):
                cols.append([Fraction(0)] * len(tb))
            else:
                cols.append(_coords(tb, w))
        if tb:
            out[mu] = la.transpose(cols, len(tb))
    return out


def _int_row(row: dict) -> dict[int, int]:
    den = 1
    for x in row.values():
        den = lcm(den, Fraction(x).denominator)
    return {k: int(x * den) for k, x in row.items() if x}


@dataclass(frozen=True)
class InvariantResult:
    dim: int
    weights: tuple[Weight, ...]


def matrix_coeff_invariants(M: WeightModule, P: ParabolicContraction) -> InvariantResult:
    """r'-invariants of V''(lambda)^* (x) V'(lambda) under the diagonal action."""
    vp = v_prime(M, P)
    vpp = v_double_prime(M, P)
    gens = []
    for i in sorted(P.pi_prime):
        gens += [M.e[i], M.f[i]]
    A2 = [_restricted(vpp, g) for g in gens]
    A1 = [_restricted(vp, g) for g in gens]
    pi_p = sorted(P.pi_prime)
    blocks: dict[IntWeight, list[tuple]] = {}
    for mu, b2 in vpp.basis.items():
        for nu, b1 in vp.basis.items():
            tau = tuple(x - y for x, y in zip(nu, mu))
            if any(tau[i] for i in pi_p):
                continue
            for a in range(len(b2)):
                for b in range(len(b1)):
                    blocks.setdefault(tau, []).append((mu, a, nu, b))
    total = 0
    found = []
    for tau in sorted(blocks):
        cols = blocks[tau]
        rows: list[dict] = []
        for g, R2, R1 in zip(gens, A2, A1):
            s = g.shift
            images: dict[tuple, dict[int, Fraction]] = {}
            for k, (mu, a, nu, b) in enumerate(cols):
                # -(xi_a o g) (x) v_b : functional on V''_{mu - s}
                src = tuple(x - y for x, y in zip(mu, s))
                m2 = R2.get(src)
                if m2 is not None:
                    for bp in range(len(m2[a])):
                        z = m2[a][bp]
                        if z:
                            key = (src, bp, nu, b)
                            images.setdefault(key, {})[k] = images.get(key, {}).get(k, 0) - z
                m1 = R1.get(nu)
                if m1 is not None:
                    tgt = tuple(x + y for x, y in zip(nu, s))
                    for c in range(len(m1)):
                        z = m1[c][b]
                        if z:
                            key = (mu, a, tgt, c)
                            images.setdefault(key, {})[k] = images.get(key, {}).get(k, 0) + z
            rows.extend(_int_row(r) for _, r in sorted(images.items()))
        kdim = len(la.sparse_nullspace([r for r in rows if r], len(cols)))
        if kdim:
            total += kdim
            found.extend([Weight(tau)] * kdim)
    return InvariantResult(total, tuple(found))


def matrix_coeff_invariant_dim(M: WeightModule, P: ParabolicContraction) -> int:
    return matrix_coeff_invariants(M, P).dim
