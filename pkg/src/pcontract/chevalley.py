"""Chevalley basis, parabolic split, the contraction and the coadjoint action.

The structure constants are read off a faithful irreducible representation
built from the Cartan matrix.  Root vectors are normalised recursively: for a
non-simple positive root alpha, take the smallest i with beta = alpha - alpha_i
a root and set

    x_alpha  =  [e_i, x_beta] / (p + 1),
    x_-alpha = -[f_i, x_-beta] / (p + 1),

where p is the largest integer with beta - p alpha_i a root.  This fixes
N_{alpha_i, beta} = p + 1 on these (extraspecial) pairs and makes the basis
compatible with the Chevalley involution, so [x_alpha, x_-alpha] = h_alpha.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import factorial
from typing import Iterable, Mapping, Sequence

from . import linalg as la
from .charring import weyl_dim
from .irrep import build_module, commutator, root_vector_ops
from .rootsys import (
    ConfigurationError,
    ConsistencyError,
    DomainError,
    RootSystem,
    Weight,
)

Vec = dict[int, int]


def _neg(root):
    return tuple(-c for c in root)


@dataclass(eq=False)
class LieAlgebraBasis:
    """Chevalley basis of g.

    Index order: positive roots (height, then lexicographic), then h_1..h_n,
    then the negative roots in the same order as the positive ones.
    """

    rs: RootSystem
    roots: list[tuple[int, ...] | None]
    brackets: dict[tuple[int, int], Vec]
    recipe_steps: list[tuple]
    _index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index = {r: k for k, r in enumerate(self.roots) if r is not None}

    @property
    def dim(self) -> int:
        return len(self.roots)

    @property
    def n_pos(self) -> int:
        return len(self.rs.positive_roots)

    def h_index(self, i: int) -> int:
        return self.n_pos + i

    def index(self, root: Sequence[int]) -> int:
        return self._index[tuple(root)]

    def has_root(self, root: Sequence[int]) -> bool:
        return tuple(root) in self._index

    def root_of(self, a: int) -> tuple[int, ...]:
        """Root of a basis element in simple-root coordinates (zero for h)."""
        r = self.roots[a]
        return r if r is not None else (0,) * self.rs.rank

    def weight_of(self, a: int) -> Weight:
        return self.rs.root_to_weight(self.root_of(a))

    def is_cartan(self, a: int) -> bool:
        return self.roots[a] is None

    def label(self, a: int) -> str:
        r = self.roots[a]
        if r is None:
            return f"h{a - self.n_pos + 1}"
        sign = "x" if sum(r) > 0 else "x-"
        return sign + "".join(str(abs(c)) for c in r)

    def bracket(self, a: int, b: int) -> Vec:
        return self.brackets.get((a, b), {})

    def bracket_vec(self, u: Mapping[int, Fraction | int], v: Mapping[int, Fraction | int]) -> dict:
        out: dict = {}
        for a, x in u.items():
            for b, y in v.items():
                for c, z in self.bracket(a, b).items():
                    out[c] = out.get(c, 0) + x * y * z
        return {k: val for k, val in out.items() if val}

    def ad_matrix(self, a: int) -> list[list[int]]:
        m = [[0] * self.dim for _ in range(self.dim)]
        for b in range(self.dim):
            for c, z in self.bracket(a, b).items():
                m[c][b] = z
        return m

    @cached_property
    def killing(self) -> list[list[int]]:
        """K(a, b) = tr(ad a ad b) on the basis."""
        ads = [self.ad_matrix(a) for a in range(self.dim)]
        n = self.dim
        out = [[0] * n for _ in range(n)]
        for a in range(n):
            A = ads[a]
            for b in range(a, n):
                B = ads[b]
                t = 0
                for i in range(n):
                    Ai = A[i]
                    for k in range(n):
                        if Ai[k] and B[k][i]:
                            t += Ai[k] * B[k][i]
                out[a][b] = out[b][a] = t
        return out

    def killing_vec(self, u: Mapping, v: Mapping) -> Fraction:
        K = self.killing
        return sum((Fraction(x) * y * K[a][b] for a, x in u.items() for b, y in v.items()), Fraction(0))

    def module_recipe(self):
        """Steps for ``irrep.root_vector_ops``."""
        return iter(self.recipe_steps)

    def to_json(self) -> str:
        data = {
            "type": str(self.rs),
            "basis": [self.label(a) for a in range(self.dim)],
            "brackets": [
                [a, b, sorted(v.items())] for (a, b), v in sorted(self.brackets.items()) if v and a < b
            ],
        }
        return json.dumps(data, sort_keys=True)


def _recipe(rs: RootSystem) -> list[tuple]:
    steps = []
    n = rs.rank
    for root in rs.positive_roots:
        if sum(root) == 1:
            i = root.index(1)
            steps.append((root, "simple", i, None, None))
            steps.append((_neg(root), "simple", i, None, None))
            continue
        for i in range(n):
            beta = list(root)
            beta[i] -= 1
            beta = tuple(beta)
            if rs.root_index(beta) is not None:
                break
        p = 0
        down = list(beta)
        while True:
            down[i] -= 1
            if rs.root_index(tuple(down)) is None:
                break
            p += 1
        steps.append((root, "bracket", i, beta, Fraction(1, p + 1)))
        steps.append((_neg(root), "bracket", i, _neg(beta), Fraction(-1, p + 1)))
    return steps


def _faithful_weight(rs: RootSystem) -> Weight:
    best = min(range(rs.rank), key=lambda i: (weyl_dim(rs, Weight.fundamental(rs.rank, i)), i))
    return Weight.fundamental(rs.rank, best)


def build_chevalley(rs: RootSystem, check_jacobi: bool | None = None) -> LieAlgebraBasis:
    n = rs.rank
    pos = list(rs.positive_roots)
    roots: list = pos + [None] * n + [_neg(r) for r in pos]
    steps = _recipe(rs)
    lam = _faithful_weight(rs)
    mod = build_module(rs, lam, dim_ceiling=None, expected_dim=weyl_dim(rs, lam))
    root_vector_ops(mod, lambda: iter(steps))
    ops = mod.root_ops
    dims = mod.dims
    index = {r: k for k, r in enumerate(roots) if r is not None}
    N = len(pos)

    brackets: dict[tuple[int, int], Vec] = {}
    for a, ra in enumerate(roots):
        for b in range(a + 1, len(roots)):
            rb = roots[b]
            if ra is None and rb is None:
                continue
            if ra is None or rb is None:
                i, root = (a - N, rb) if ra is None else (b - N, ra)
                c = rs.pairing(root, i)
                tgt = index[root]
                if ra is None:
                    vec = {tgt: c} if c else {}
                else:
                    vec = {tgt: -c} if c else {}
            else:
                vec = _root_bracket(rs, ops, dims, index, N, ra, rb)
            brackets[(a, b)] = vec
            brackets[(b, a)] = {k: -v for k, v in vec.items()}
    L = LieAlgebraBasis(rs, roots, brackets, steps)
    if check_jacobi is None:
        check_jacobi = n <= 3
    if check_jacobi:
        bad = jacobi_violations(L)
        if bad:
            raise ConsistencyError(f"Jacobi identity fails on {bad[:3]}")
    return L


def _root_bracket(rs, ops, dims, index, N, ra, rb) -> Vec:
    com = commutator(ops[ra], ops[rb], dims)
    s = tuple(x + y for x, y in zip(ra, rb))
    if not any(s):
        # element of h: on V_mu it is the scalar sum_i c_i mu_i
        eqs, rhs = [], []
        for mu in dims:
            blk = com.block(mu, dims)
            for k in range(len(blk)):
                eqs.append([Fraction(m) for m in mu])
                rhs.append(blk[k][k])
                if any(blk[k][j] for j in range(len(blk)) if j != k):
                    raise ConsistencyError("[x_a, x_-a] is not diagonal")
        c = la.solve(eqs, rhs)
        if c is None:
            raise ConsistencyError("[x_a, x_-a] is not in h")
        expected = rs.coroot_coefficients(ra) if sum(ra) > 0 else tuple(-x for x in rs.coroot_coefficients(rb))
        if tuple(c) != tuple(Fraction(x) for x in expected):
            raise ConsistencyError(f"[x_{ra}, x_{rb}] = {c}, expected coroot {expected}")
        return {N + i: int(x) for i, x in enumerate(c) if x}
    if s not in index:
        if not com.is_zero():
            raise ConsistencyError(f"[x_{ra}, x_{rb}] should vanish")
        return {}
    target = ops[s]
    coef = None
    for mu, blk in target.blocks.items():
        cb = com.blocks.get(mu)
        for r, row in enumerate(blk):
            for k, x in enumerate(row):
                if x:
                    y = cb[r][k] if cb is not None else Fraction(0)
                    coef = y / x
                    break
            if coef is not None:
                break
        if coef is not None:
            break
    if coef is None or coef.denominator != 1:
        raise ConsistencyError(f"bad structure constant {coef} for {ra}, {rb}")
    if not _ops_equal(com, target.scaled(coef)):
        raise ConsistencyError(f"[x_{ra}, x_{rb}] is not proportional to x_{s}")
    return {index[s]: int(coef)} if coef else {}


def _ops_equal(a, b) -> bool:
    keys = set(a.blocks) | set(b.blocks)
    for mu in keys:
        x, y = a.blocks.get(mu), b.blocks.get(mu)
        if x is None:
            x = [[0] * len(r) for r in y]
        if y is None:
            y = [[0] * len(r) for r in x]
        if x != y:
            return False
    return True


def jacobi_violations(L: LieAlgebraBasis, limit: int = 10) -> list[tuple[int, int, int]]:
    bad = []
    for a, b, c in itertools.combinations(range(L.dim), 3):
        tot: dict = {}
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            for k, v in L.bracket_vec({x: 1}, L.bracket(y, z)).items():
                tot[k] = tot.get(k, 0) + v
        if any(tot.values()):
            bad.append((a, b, c))
            if len(bad) >= limit:
                break
    return bad


def antisymmetry_violations(L: LieAlgebraBasis) -> list[tuple[int, int]]:
    bad = []
    for a in range(L.dim):
        if L.bracket(a, a):
            bad.append((a, a))
        for b in range(a + 1, L.dim):
            u, v = L.bracket(a, b), L.bracket(b, a)
            if {k: -x for k, x in v.items()} != u:
                bad.append((a, b))
    return bad


# -- parabolic split and contraction -------------------------------------------


class ParabolicContraction:
    """p = r + m for the parabolic attached to ``pi_prime``, and its contraction.

    All elements are sparse vectors over the global basis of g.
    """

    def __init__(self, L: LieAlgebraBasis, pi_prime: Iterable[int]):
        rs = L.rs
        self.L = L
        self.rs = rs
        self.pi_prime = frozenset(pi_prime)
        if not self.pi_prime <= set(range(rs.rank)):
            raise ConfigurationError(f"pi' = {sorted(self.pi_prime)} is not a subset of pi")
        if len(self.pi_prime) == rs.rank:
            raise ConfigurationError("parabolic must be proper")
        levi = [r for r in rs.positive_roots if all(r[i] == 0 for i in range(rs.rank) if i not in self.pi_prime)]
        levi_set = set(levi)
        self.levi_roots = levi
        self.m_roots = [r for r in rs.positive_roots if r not in levi_set]
        cartan = [L.h_index(i) for i in range(rs.rank)]
        pos_levi = [L.index(r) for r in levi]
        neg_levi = [L.index(_neg(r)) for r in levi]
        self.r_idx = sorted(pos_levi + cartan + neg_levi)
        self.m_idx = [L.index(r) for r in self.m_roots]
        self.m_minus_idx = [L.index(_neg(r)) for r in self.m_roots]
        self.p_idx = sorted(self.r_idx + self.m_idx)
        self.p_minus_idx = sorted(self.r_idx + self.m_minus_idx)
        self._r, self._m, self._mm = set(self.r_idx), set(self.m_idx), set(self.m_minus_idx)

    def __repr__(self):
        return f"ParabolicContraction({self.rs}, pi'={sorted(i + 1 for i in self.pi_prime)})"

    @property
    def dim_r(self) -> int:
        return len(self.r_idx)

    @property
    def dim_m(self) -> int:
        return len(self.m_idx)

    @property
    def dim_p(self) -> int:
        return len(self.p_idx)

    def in_r(self, a: int) -> bool:
        return a in self._r

    def in_m(self, a: int) -> bool:
        return a in self._m

    def in_m_minus(self, a: int) -> bool:
        return a in self._mm

    def generators_r_prime(self) -> list[int]:
        """e_i, f_i for i in pi' (global indices)."""
        out = []
        for i in sorted(self.pi_prime):
            simple = tuple(1 if j == i else 0 for j in range(self.rs.rank))
            out += [self.L.index(simple), self.L.index(_neg(simple))]
        return out

    def generators_p_prime(self) -> list[int]:
        """Generators of the derived algebra of the contraction: r' generators plus a basis of m."""
        return self.generators_r_prime() + list(self.m_idx)

    def bracket_p(self, a: int, b: int) -> Vec:
        return self.L.bracket(a, b)

    def bracket_ptilde(self, a: int, b: int) -> Vec:
        if a in self._m and b in self._m:
            return {}
        return self.L.bracket(a, b)

    def bracket_ptilde_vec(self, u: Mapping, v: Mapping) -> dict:
        out: dict = {}
        for a, x in u.items():
            for b, y in v.items():
                for c, z in self.bracket_ptilde(a, b).items():
                    out[c] = out.get(c, 0) + x * y * z
        return {k: val for k, val in out.items() if val}

    def project_r(self, v: Mapping) -> dict:
        return {k: x for k, x in v.items() if k in self._r}

    def coadjoint(self, a: int, b: int) -> dict:
        """ad* of the basis element a of p~ on the basis element b of p^-."""
        if a not in self._r and a not in self._m:
            raise DomainError(f"{self.L.label(a)} is not in p~")
        if b not in self._r and b not in self._mm:
            raise DomainError(f"{self.L.label(b)} is not in p^-")
        br = self.L.bracket(a, b)
        if a in self._r:
            return dict(br)
        return self.project_r(br)

    def coadjoint_vec(self, x: Mapping, y: Mapping) -> dict:
        out: dict = {}
        for a, s in x.items():
            for b, t in y.items():
                for c, z in self.coadjoint(a, b).items():
                    out[c] = out.get(c, 0) + s * t * z
        return {k: val for k, val in out.items() if val}

    def pairing_gram(self) -> list[list[int]]:
        """Killing form on the p basis against the p^- basis."""
        K = self.L.killing
        return [[K[a][b] for b in self.p_minus_idx] for a in self.p_idx]

    def summary(self) -> dict:
        L = self.L
        return {
            "type": str(self.rs),
            "pi_prime": sorted(i + 1 for i in self.pi_prime),
            "dim_g": L.dim,
            "dim_p": self.dim_p,
            "dim_r": self.dim_r,
            "dim_m": self.dim_m,
            "dim_m_minus": len(self.m_minus_idx),
            "r_basis": [L.label(a) for a in self.r_idx],
            "m_basis": [L.label(a) for a in self.m_idx],
        }


def split_parabolic(L: LieAlgebraBasis, pi_prime: Iterable[int]) -> ParabolicContraction:
    return ParabolicContraction(L, pi_prime)


def coadjoint_action(P: ParabolicContraction, x: Mapping, y: Mapping) -> dict:
    return P.coadjoint_vec(x, y)


def sym_killing_pairing(L: LieAlgebraBasis, k: int, a: Sequence[int], b: Sequence[int]) -> Fraction:
    """(1/k!) sum over permutations of prod K(x_i, y_sigma(i)) for monomials a, b."""
    if len(a) != k or len(b) != k:
        raise DomainError(f"monomials of degrees {len(a)}, {len(b)} paired at degree {k}")
    K = L.killing
    tot = 0
    for perm in itertools.permutations(range(k)):
        prod = 1
        for i, j in enumerate(perm):
            prod *= K[a[i]][b[j]]
            if not prod:
                break
        tot += prod
    return Fraction(tot, factorial(k))


# -- identity checks -------------------------------------------------------------


def contraction_violations(P: ParabolicContraction) -> list[tuple[int, int]]:
    """Pairs where the contracted bracket disagrees with the rule that defines it."""
    bad = []
    for a in P.p_idx:
        for b in P.p_idx:
            got = P.bracket_ptilde(a, b)
            full = P.bracket_p(a, b)
            if P.in_m(a) and P.in_m(b):
                want = {k: v for k, v in full.items() if not P.in_m(k)}
            else:
                want = full
            if got != want or any(k not in P._r and k not in P._m for k in got):
                bad.append((a, b))
    return bad


def coadjoint_action_violations(P: ParabolicContraction) -> list[tuple[int, int, int]]:
    """Basis triples where ad* fails to be a representation of p~."""
    bad = []
    for x in P.p_idx:
        for xp in P.p_idx:
            bxx = P.bracket_ptilde(x, xp)
            for y in P.p_minus_idx:
                lhs = _sub_vec(P.coadjoint_vec({x: 1}, P.coadjoint(xp, y)),
                               P.coadjoint_vec({xp: 1}, P.coadjoint(x, y)))
                rhs = P.coadjoint_vec(bxx, {y: 1})
                if lhs != rhs:
                    bad.append((x, xp, y))
    return bad


def intertwiner_violations(P: ParabolicContraction) -> list[tuple[int, int, int]]:
    """Triples with K([x, y]~, z) != -K(y, ad* x (z))."""
    L = P.L
    bad = []
    for x in P.p_idx:
        for y in P.p_idx:
            bxy = P.bracket_ptilde(x, y)
            for z in P.p_minus_idx:
                lhs = L.killing_vec(bxy, {z: 1})
                rhs = -L.killing_vec({y: 1}, P.coadjoint(x, z))
                if lhs != rhs:
                    bad.append((x, y, z))
    return bad


def _sub_vec(u: Mapping, v: Mapping) -> dict:
    out = dict(u)
    for k, x in v.items():
        out[k] = out.get(k, 0) - x
    return {k: x for k, x in out.items() if x}
