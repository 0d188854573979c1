"""The involutions i, j on pi, the orbit set E(pi') and the semigroup D.

D is the set of dominant weights lambda with (w0' lambda - w0 lambda, alpha) = 0
for every alpha in pi'.  It is free on the orbit sums d_Gamma.  Membership is
decided two ways (the defining equation and a decomposition over the d_Gamma)
and the two answers are compared on every call.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import linalg as la
from .rootsys import (
    ConsistencyError,
    DomainError,
    RootSystem,
    Weight,
    apply_w0,
    dominant_weights,
    inner_product,
    linear_deg,
)


def _simple_index(rs: RootSystem, lam: Weight) -> int:
    """Index i when lam is the simple root alpha_i, else raise."""
    for i in range(rs.rank):
        if rs.simple_root(i) == lam:
            return i
    raise ConsistencyError(f"{lam} is not a simple root")


def involution_j(rs: RootSystem, a: int) -> int:
    """j(alpha) = -w0(alpha)."""
    return _simple_index(rs, -apply_w0(rs, range(rs.rank), rs.simple_root(a)))


def involution_i(rs: RootSystem, pi_prime: Iterable[int], a: int) -> int:
    pi_prime = frozenset(pi_prime)
    if a in pi_prime:
        return _simple_index(rs, -apply_w0(rs, pi_prime, rs.simple_root(a)))
    cur = a
    # j (ij)^r (alpha), r minimal; i is only ever evaluated on pi' here
    for _ in range(rs.rank + 1):
        b = involution_j(rs, cur)
        if b not in pi_prime:
            return b
        cur = involution_i(rs, pi_prime, b)
    raise ConsistencyError(f"i({a + 1}) did not leave pi' within {rs.rank} steps")


@dataclass(frozen=True)
class OrbitDatum:
    gamma: tuple[int, ...]
    d_gamma: Weight
    delta_gamma: Weight

    def to_json(self, rs: RootSystem) -> dict:
        return {
            "gamma": [g + 1 for g in self.gamma],
            "d_gamma": self.d_gamma.to_json(),
            "d_gamma_roots": Weight(rs.to_root_coords(self.d_gamma)).to_json(),
            "delta_gamma": self.delta_gamma.to_json(),
            "delta_gamma_roots": Weight(rs.to_root_coords(self.delta_gamma)).to_json(),
            "deg_delta": linear_deg(rs, self.delta_gamma),
        }


def generator_weight(rs: RootSystem, pi_prime: Iterable[int], lam: Weight) -> Weight:
    """w0' lambda - w0 lambda."""
    return apply_w0(rs, pi_prime, lam) - apply_w0(rs, range(rs.rank), lam)


def orbit_set(rs: RootSystem, pi_prime: Iterable[int]) -> list[OrbitDatum]:
    pi_prime = frozenset(pi_prime)
    ij = {a: involution_i(rs, pi_prime, involution_j(rs, a)) for a in range(rs.rank)}
    seen: set[int] = set()
    out = []
    for a in range(rs.rank):
        if a in seen:
            continue
        orb = []
        b = a
        while b not in orb:
            orb.append(b)
            b = ij[b]
        if b != a:
            raise ConsistencyError("ij is not a permutation of pi")
        seen.update(orb)
        gamma = tuple(sorted(orb))
        d = Weight([1 if k in gamma else 0 for k in range(rs.rank)])
        out.append(OrbitDatum(gamma, d, generator_weight(rs, pi_prime, d)))
    return out


def _check_dominant(lam: Weight):
    if not lam.is_dominant():
        raise DomainError(f"expected a dominant integral weight, got {lam}")


def is_in_D(rs: RootSystem, pi_prime: Iterable[int], lam: Weight) -> bool:
    _check_dominant(lam)
    pi_prime = frozenset(pi_prime)
    diff = generator_weight(rs, pi_prime, lam)
    return all(inner_product(rs, diff, rs.simple_root(a)) == 0 for a in pi_prime)


def _solve_over_generators(rs: RootSystem, orbits: list[OrbitDatum], lam: Weight) -> list[Fraction] | None:
    # columns are the d_Gamma in fundamental coordinates
    m = [[orb.d_gamma[i] for orb in orbits] for i in range(rs.rank)]
    return la.solve(m, list(lam.coords))


def decompose_in_D(rs: RootSystem, pi_prime: Iterable[int], lam: Weight,
                   orbits: list[OrbitDatum] | None = None) -> dict[tuple[int, ...], int] | None:
    """{gamma: n_gamma} with lam = sum n_gamma d_gamma, or None when lam is not in D."""
    _check_dominant(lam)
    pi_prime = frozenset(pi_prime)
    if orbits is None:
        orbits = orbit_set(rs, pi_prime)
    sol = _solve_over_generators(rs, orbits, lam)
    ok = sol is not None and all(x >= 0 and x.denominator == 1 for x in sol)
    if ok != is_in_D(rs, pi_prime, lam):
        raise ConsistencyError(
            f"membership of {lam} in D: decomposition says {ok}, defining equation disagrees"
        )
    if not ok:
        return None
    return {orb.gamma: int(x) for orb, x in zip(orbits, sol)}


def generators_rank(rs: RootSystem, orbits: list[OrbitDatum]) -> int:
    return la.rank([list(orb.d_gamma.coords) for orb in orbits])


def levi_projection(rs: RootSystem, pi_prime: Iterable[int], lam: Weight) -> Weight:
    """Projection to P(pi'), in the fundamental weights of r' ordered like pi'."""
    return Weight(lam[a] for a in sorted(set(pi_prime)))


@dataclass(frozen=True)
class SemigroupCheck:
    checked: int
    in_D: int
    counterexamples: tuple

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def semigroup_check(rs: RootSystem, pi_prime: Iterable[int], max_deg: int | None = None) -> SemigroupCheck:
    """Both directions of free generation up to a deg cutoff.

    Every dominant weight up to the cutoff is tested with both membership
    routes, and every N-combination of the d_Gamma up to the cutoff must pass
    the defining equation.
    """
    pi_prime = frozenset(pi_prime)
    if max_deg is None:
        max_deg = 2 * linear_deg(rs, rs.rho)
    orbits = orbit_set(rs, pi_prime)
    bad = []
    n_in = 0
    for lam in dominant_weights(rs, max_deg):
        try:
            dec = decompose_in_D(rs, pi_prime, lam, orbits)
        except ConsistencyError:
            bad.append(lam)
            continue
        if dec is not None:
            n_in += 1
            back = sum((orb.d_gamma * dec[orb.gamma] for orb in orbits), Weight.zero(rs.rank))
            if back != lam:
                bad.append(lam)
    steps = [linear_deg(rs, orb.d_gamma) for orb in orbits]

    def rec(k, acc, budget):
        if k == len(orbits):
            if not is_in_D(rs, pi_prime, acc):
                bad.append(acc)
            return
        for c in range(budget // steps[k] + 1):
            rec(k + 1, acc + orbits[k].d_gamma * c, budget - c * steps[k])

    rec(0, Weight.zero(rs.rank), max_deg)
    if generators_rank(rs, orbits) != len(orbits):
        bad.append("d_Gamma linearly dependent")
    return SemigroupCheck(len(dominant_weights(rs, max_deg)), n_in, tuple(bad))
