"""Formal characters truncated by ``deg`` and the orbit lower-bound product."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .rootsys import DomainError, RootSystem, Weight, inner_product, linear_deg


@dataclass(frozen=True, eq=False)
class FormalCharacter:
    """Finitely supported sum of c_nu e^nu with deg(nu) <= trunc."""

    rs: RootSystem
    trunc: int
    coeffs: Mapping[Weight, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for nu, c in self.coeffs.items():
            if c < 0:
                raise DomainError(f"negative coefficient {c} at {nu}")
            if c == 0:
                continue
            if any(x < 0 for x in self.rs.to_root_coords(nu)):
                raise DomainError(f"weight {nu} is not in the positive root cone")
            if linear_deg(self.rs, nu) > self.trunc:
                continue
            clean[nu] = c
        object.__setattr__(self, "coeffs", dict(sorted(clean.items(), key=lambda kv: _key(self.rs, kv[0]))))

    def __getitem__(self, nu: Weight) -> int:
        return self.coeffs.get(nu, 0)

    def __eq__(self, other):
        return (isinstance(other, FormalCharacter) and self.rs == other.rs
                and self.trunc == other.trunc and self.coeffs == other.coeffs)

    def __mul__(self, other: "FormalCharacter") -> "FormalCharacter":
        return char_mul(self, other)

    @property
    def support(self) -> list[Weight]:
        return list(self.coeffs)

    def to_json(self) -> list[dict]:
        return [{"weight": nu.to_json(), "coefficient": c} for nu, c in self.coeffs.items()]

    @classmethod
    def from_json(cls, rs: RootSystem, trunc: int, data: Iterable[dict]) -> "FormalCharacter":
        return cls(rs, trunc, {Weight(Fraction(x) for x in d["weight"]): int(d["coefficient"]) for d in data})

    @classmethod
    def one(cls, rs: RootSystem, trunc: int) -> "FormalCharacter":
        return cls(rs, trunc, {Weight.zero(rs.rank): 1})

    @classmethod
    def monomial(cls, rs: RootSystem, trunc: int, nu: Weight, c: int = 1) -> "FormalCharacter":
        return cls(rs, trunc, {nu: c})


def _key(rs, nu):
    return (linear_deg(rs, nu), tuple(nu.coords))


def char_mul(a: FormalCharacter, b: FormalCharacter) -> FormalCharacter:
    if a.rs != b.rs:
        raise DomainError("characters of different root systems")
    trunc = min(a.trunc, b.trunc)
    out: dict[Weight, int] = {}
    for nu, c in a.coeffs.items():
        dn = linear_deg(a.rs, nu)
        if dn > trunc:
            continue
        for mu, d in b.coeffs.items():
            if dn + linear_deg(a.rs, mu) > trunc:
                continue
            k = nu + mu
            out[k] = out.get(k, 0) + c * d
    return FormalCharacter(a.rs, trunc, out)


def char_add(a: FormalCharacter, b: FormalCharacter) -> FormalCharacter:
    trunc = min(a.trunc, b.trunc)
    out = dict(a.coeffs)
    for nu, c in b.coeffs.items():
        out[nu] = out.get(nu, 0) + c
    return FormalCharacter(a.rs, trunc, out)


def geometric_series(rs: RootSystem, delta: Weight, trunc: int) -> FormalCharacter:
    """sum_n e^{n delta}, truncated."""
    step = linear_deg(rs, delta)
    if step <= 0:
        raise DomainError(f"series in e^{delta} is not locally finite")
    return FormalCharacter(rs, trunc, {delta * n: 1 for n in range(trunc // step + 1)})


def lower_bound_character(rs: RootSystem, orbits: Iterable, trunc: int) -> FormalCharacter:
    """prod over orbits of (1 - e^{delta})^{-1}, truncated at deg <= trunc."""
    if trunc < 0:
        raise DomainError("trunc must be nonnegative")
    out = FormalCharacter.one(rs, trunc)
    for orb in orbits:
        out = char_mul(out, geometric_series(rs, orb.delta_gamma, trunc))
    return out


@dataclass(frozen=True)
class Comparison:
    holds: bool
    witness: Weight | None = None

    def __bool__(self):
        return self.holds


def char_leq(a: FormalCharacter, b: FormalCharacter) -> Comparison:
    if a.trunc != b.trunc:
        raise DomainError(f"truncation mismatch {a.trunc} != {b.trunc}")
    for nu, c in a.coeffs.items():
        if c > b[nu]:
            return Comparison(False, nu)
    return Comparison(True)


def weyl_dim(rs: RootSystem, lam: Weight) -> int:
    if not lam.is_dominant():
        raise DomainError(f"weyl_dim needs a dominant weight, got {lam}")
    num = Fraction(1)
    den = Fraction(1)
    lr = lam + rs.rho
    for beta in rs.positive_roots:
        b = rs.root_to_weight(beta)
        num *= inner_product(rs, lr, b)
        den *= inner_product(rs, rs.rho, b)
    d = num / den
    if d.denominator != 1:
        raise DomainError(f"non-integral Weyl dimension {d}")
    return int(d)


def weights_with_dim_at_most(rs: RootSystem, bound: int) -> list[Weight]:
    """Dominant weights with weyl_dim <= bound, lexicographically ordered.

    weyl_dim is strictly increasing in every fundamental coordinate, so the
    search stops along an axis as soon as the bound is crossed.
    """
    out: list[Weight] = []

    def rec(prefix: list[int]):
        if len(prefix) == rs.rank:
            out.append(Weight(prefix))
            return
        c = 0
        while True:
            probe = Weight(prefix + [c] + [0] * (rs.rank - len(prefix) - 1))
            if weyl_dim(rs, probe) > bound:
                return
            rec(prefix + [c])
            c += 1

    rec([])
    return out
