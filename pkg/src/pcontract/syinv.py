"""Semi-invariants of the symmetric algebra by brute-force nullspaces.

S(p~) is split into blocks S_k(p~)_nu of fixed polynomial degree k and h-weight
nu.  A generator g of the derived algebra acts on a block as the derivation
extending ad(g); it sends (k, nu) to (k, nu + wt g).  The semi-invariants of
the block are the common kernel of these maps, computed by exact
fraction-free elimination.  Generators used: e_i, f_i for i in pi' and the
root vectors spanning m.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import linalg as la
from .charring import FormalCharacter, lower_bound_character
from .chevalley import ParabolicContraction
from .orbits import OrbitDatum
from .rootsys import Weight, linear_deg

Monomial = tuple[int, ...]
Poly = dict[Monomial, Fraction]
RootWeight = tuple[int, ...]

SCHEMA_VERSION = 1
DEFAULT_MAX_DEGREE = 8


@dataclass(frozen=True)
class GradedVectorBlock:
    degree: int
    weight: RootWeight
    monomials: tuple[Monomial, ...]

    @property
    def dim(self) -> int:
        return len(self.monomials)

    def index(self) -> dict[Monomial, int]:
        return {m: i for i, m in enumerate(self.monomials)}


class SymmetricAlgebra:
    """Monomial bookkeeping for S(p) over the frozen p basis, with a chosen bracket."""

    def __init__(self, P: ParabolicContraction, contracted: bool = True):
        self.P = P
        self.contracted = contracted
        self.vars = list(P.p_idx)
        self.n = len(self.vars)
        self.pos = {a: k for k, a in enumerate(self.vars)}
        self.var_weight = [P.L.root_of(a) for a in self.vars]
        self.bracket = P.bracket_ptilde if contracted else P.bracket_p
        self.generators = P.generators_p_prime()
        self._by_degree: dict[int, dict[RootWeight, list[Monomial]]] = {}
        self._ad_cache: dict[tuple[int, int], list[tuple[int, int]]] = {}

    # -- monomials -------------------------------------------------------------

    def weight_of(self, m: Monomial) -> RootWeight:
        r = self.P.rs.rank
        w = [0] * r
        for k, e in enumerate(m):
            if e:
                vw = self.var_weight[k]
                for i in range(r):
                    w[i] += e * vw[i]
        return tuple(w)

    def monomials_by_weight(self, k: int) -> dict[RootWeight, list[Monomial]]:
        got = self._by_degree.get(k)
        if got is not None:
            return got
        out: dict[RootWeight, list[Monomial]] = {}
        for combo in itertools.combinations_with_replacement(range(self.n), k):
            m = [0] * self.n
            for v in combo:
                m[v] += 1
            m = tuple(m)
            out.setdefault(self.weight_of(m), []).append(m)
        for lst in out.values():
            lst.sort(reverse=True)
        self._by_degree[k] = out
        return out

    def block(self, k: int, nu: Sequence[int]) -> GradedVectorBlock:
        mons = self.monomials_by_weight(k).get(tuple(nu), [])
        return GradedVectorBlock(k, tuple(nu), tuple(mons))

    # -- derivations -----------------------------------------------------------

    def _ad_var(self, g: int, v: int) -> list[tuple[int, int]]:
        key = (g, v)
        got = self._ad_cache.get(key)
        if got is None:
            got = [(self.pos[c], z) for c, z in sorted(self.bracket(g, self.vars[v]).items())]
            self._ad_cache[key] = got
        return got

    def apply(self, g: int, poly: dict[Monomial, object]) -> dict[Monomial, object]:
        """ad(g) extended to S(p) as a derivation."""
        out: dict = {}
        for m, c in poly.items():
            for v, e in enumerate(m):
                if not e:
                    continue
                for w, z in self._ad_var(g, v):
                    t = list(m)
                    t[v] -= 1
                    t[w] += 1
                    t = tuple(t)
                    out[t] = out.get(t, 0) + c * e * z
        return {m: c for m, c in out.items() if c}

    def generator_matrix(self, g: int, block: GradedVectorBlock) -> dict[Monomial, dict[int, int]]:
        """Sparse matrix of ad(g) on ``block``: target monomial -> {source column: coefficient}."""
        rows: dict[Monomial, dict[int, int]] = {}
        for col, m in enumerate(block.monomials):
            for t, c in self.apply(g, {m: 1}).items():
                rows.setdefault(t, {})[col] = c
        return rows

    def invariants(self, block: GradedVectorBlock, verify: bool = True) -> list[Poly]:
        if block.dim == 0:
            return []
        rows = []
        for g in self.generators:
            mat = self.generator_matrix(g, block)
            rows.extend(mat[t] for t in sorted(mat, reverse=True))
        basis = la.sparse_nullspace(rows, block.dim)
        polys = [{block.monomials[i]: c for i, c in enumerate(v) if c} for v in basis]
        if verify:
            for p in polys:
                for g in self.generators:
                    if self.apply(g, p):
                        raise AssertionError("returned vector is not annihilated")
        return polys

    def is_semi_invariant(self, poly: Poly) -> bool:
        return all(not self.apply(g, poly) for g in self.generators)


def poly_mul(a: Poly, b: Poly) -> Poly:
    out: dict = {}
    for m, c in a.items():
        for n, d in b.items():
            t = tuple(x + y for x, y in zip(m, n))
            out[t] = out.get(t, 0) + c * d
    return {m: c for m, c in out.items() if c}


def poly_to_json(poly: Poly) -> list[dict]:
    ints = la.integer_vector(list(poly.values()))
    return [{"monomial": list(m), "coefficient": c} for m, c in zip(poly, ints)]


# -- public operations -----------------------------------------------------------


def enumerate_block(P: ParabolicContraction, k: int, nu: Weight) -> GradedVectorBlock:
    rc = P.rs.to_root_coords(nu)
    if any(c.denominator != 1 for c in rc):
        return GradedVectorBlock(k, (), ())
    return SymmetricAlgebra(P).block(k, tuple(int(c) for c in rc))


def ad_generator_matrix(P: ParabolicContraction, g: int, block: GradedVectorBlock,
                        contracted: bool = True) -> dict[Monomial, dict[int, int]]:
    return SymmetricAlgebra(P, contracted).generator_matrix(g, block)


def semi_invariants(P: ParabolicContraction, k: int, contracted: bool = True,
                    algebra: SymmetricAlgebra | None = None) -> list[tuple[Weight, list[Poly]]]:
    """(weight, basis) for every weight with a nonzero space of degree-k semi-invariants."""
    S = algebra or SymmetricAlgebra(P, contracted)
    out = []
    for nu in sorted(S.monomials_by_weight(k)):
        basis = S.invariants(S.block(k, nu))
        if basis:
            out.append((P.rs.root_to_weight(nu), basis))
    return out


def sy_nondegenerate(P: ParabolicContraction, k: int) -> list[tuple[Weight, list[Poly]]]:
    """Same as ``semi_invariants`` for the original bracket of p."""
    return semi_invariants(P, k, contracted=False)


def sy_character(P: ParabolicContraction, trunc: int, max_degree: int,
                 contracted: bool = True) -> FormalCharacter:
    """Character of the semi-invariants found in degrees <= max_degree, truncated by deg."""
    S = SymmetricAlgebra(P, contracted)
    coeffs: dict[Weight, int] = {}
    for k in range(max_degree + 1):
        for nu, mons in S.monomials_by_weight(k).items():
            if any(c < 0 for c in nu) or 2 * sum(nu) > trunc:
                continue
            d = len(S.invariants(S.block(k, nu), verify=False))
            if d:
                w = P.rs.root_to_weight(nu)
                coeffs[w] = coeffs.get(w, 0) + d
    return FormalCharacter(P.rs, trunc, coeffs)


@dataclass
class WeightRow:
    weight: Weight
    lower_bound: int
    found: int = 0
    found_by_degree: dict[int, int] = field(default_factory=dict)

    @property
    def min_degree(self) -> int | None:
        return min(self.found_by_degree) if self.found_by_degree else None

    @property
    def status(self) -> str:
        return "confirmed" if self.found >= self.lower_bound else "not-yet-found"


@dataclass
class SemiInvariantReport:
    type: str
    pi_prime: list[int]
    trunc_deg: int
    max_poly_degree: int
    degree_reached: int
    rows: list[WeightRow]
    contracted: bool = True

    @property
    def complete(self) -> bool:
        return all(r.status == "confirmed" for r in self.rows)

    def to_json(self, rs) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "semi_invariant_report",
            "type": self.type,
            "pi_prime": self.pi_prime,
            "algebra": "contracted" if self.contracted else "parabolic",
            "trunc_deg": self.trunc_deg,
            "max_poly_degree": self.max_poly_degree,
            "degree_reached": self.degree_reached,
            "status": "confirmed" if self.complete else "incomplete",
            "rows": [
                {
                    "weight": r.weight.to_json(),
                    "weight_roots": Weight(rs.to_root_coords(r.weight)).to_json(),
                    "deg": linear_deg(rs, r.weight),
                    "lower_bound": r.lower_bound,
                    "found": r.found,
                    "found_by_degree": {str(k): v for k, v in sorted(r.found_by_degree.items())},
                    "min_degree": r.min_degree,
                    "status": r.status,
                }
                for r in self.rows
            ],
        }


def verify_lower_bound(P: ParabolicContraction, orbits: Iterable[OrbitDatum], trunc_deg: int,
                       max_poly_degree: int = DEFAULT_MAX_DEGREE, contracted: bool = True,
                       progress: Callable[[int], None] | None = None) -> SemiInvariantReport:
    """Search degrees 0, 1, ... up to ``max_poly_degree`` for semi-invariants.

    The search is one-sided: found counts can only undercount the true
    dimension of Sy, so a row is either confirmed or not yet found.
    """
    if max_poly_degree < 0:
        raise ValueError("max_poly_degree must be nonnegative")
    rs = P.rs
    lb = lower_bound_character(rs, list(orbits), trunc_deg)
    rows = [WeightRow(nu, c) for nu, c in lb.coeffs.items()]
    S = SymmetricAlgebra(P, contracted)
    targets = {tuple(int(x) for x in rs.to_root_coords(r.weight)): r for r in rows}
    reached = -1
    for k in range(max_poly_degree + 1):
        if all(r.status == "confirmed" for r in rows):
            break
        reached = k
        if progress:
            progress(k)
        by_w = S.monomials_by_weight(k)
        for nu, row in targets.items():
            if row.status == "confirmed" or nu not in by_w:
                continue
            d = len(S.invariants(S.block(k, nu)))
            if d:
                row.found += d
                row.found_by_degree[k] = d
    return SemiInvariantReport(
        type=str(rs),
        pi_prime=sorted(i + 1 for i in P.pi_prime),
        trunc_deg=trunc_deg,
        max_poly_degree=max_poly_degree,
        degree_reached=max(reached, 0),
        rows=rows,
        contracted=contracted,
    )
