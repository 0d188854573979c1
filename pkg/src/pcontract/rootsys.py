"""Root systems of simple Lie algebras in Bourbaki numbering.

Weights are stored in the fundamental-weight basis with exact rational
coordinates.  The bilinear form is normalised so that long roots have
squared length 2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .linalg import inverse

ADMISSIBLE = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}

DEFAULT_MAX_RANK = 6


class ConfigurationError(ValueError):
    """Bad type string, rank or simple-root subset."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; indicates a bug."""


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        ok = ADMISSIBLE.get(self.family)
        if ok is None or not ok(self.rank):
            raise ConfigurationError(f"inadmissible type {self.family}{self.rank}")

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text)
        if not m:
            raise ConfigurationError(f"cannot parse type string {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Weight:
    """A weight written in the fundamental-weight basis."""

    coords: tuple[Fraction, ...]

    def __init__(self, coords: Iterable):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in coords))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls([0] * rank)

    @classmethod
    def fundamental(cls, rank: int, i: int) -> "Weight":
        """The fundamental weight with 0-based index ``i``."""
        return cls([1 if j == i else 0 for j in range(rank)])

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "Weight":
        return Weight(-a for a in self.coords)

    def __mul__(self, k) -> "Weight":
        return Weight(k * a for a in self.coords)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_dominant(self) -> bool:
        return all(c >= 0 and c.denominator == 1 for c in self.coords)

    def to_json(self) -> list:
        return [_frac_json(c) for c in self.coords]

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coords) + ")"


def _frac_json(c: Fraction):
    return c.numerator if c.denominator == 1 else str(c)


def parse_subset(text: str | None, rank: int) -> frozenset[int]:
    """Parse ``"1,3"`` (1-based Bourbaki indices) into 0-based indices."""
    if text is None or not text.strip():
        return frozenset()
    out = set()
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if not part.isdigit():
            raise ConfigurationError(f"bad simple-root index {part!r}")
        i = int(part)
        if not 1 <= i <= rank:
            raise ConfigurationError(f"simple-root index {i} outside 1..{rank}")
        out.add(i - 1)
    return frozenset(out)


def parse_weight(text: str, rank: int) -> Weight:
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if len(parts) != rank:
        raise ConfigurationError(f"weight {text!r} needs {rank} coordinates")
    try:
        return Weight(Fraction(p) for p in parts)
    except ValueError as exc:
        raise ConfigurationError(f"bad weight {text!r}") from exc


def _gram(t: SimpleType) -> list[list[Fraction]]:
    """Gram matrix (alpha_i, alpha_j) of the simple roots, long roots of length 2."""
    n, fam = t.rank, t.family
    g = [[Fraction(0)] * n for _ in range(n)]
    lengths = [Fraction(2)] * n
    edges: list[tuple[int, int]] = []
    if fam in "ABC":
        edges = [(i, i + 1) for i in range(n - 1)]
        if fam == "B":
            lengths[n - 1] = Fraction(1)
        elif fam == "C":
            lengths = [Fraction(1)] * (n - 1) + [Fraction(2)]
    elif fam == "D":
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    elif fam == "E":
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, n - 1)]
    elif fam == "F":
        edges = [(0, 1), (1, 2), (2, 3)]
        lengths = [Fraction(2), Fraction(2), Fraction(1), Fraction(1)]
    elif fam == "G":
        edges = [(0, 1)]
        lengths = [Fraction(2, 3), Fraction(2)]
    for i in range(n):
        g[i][i] = lengths[i]
    for i, j in edges:
        short, long_ = sorted((lengths[i], lengths[j]))
        # the bond multiplicity is long/short; (a_i, a_j) = -long/2
        g[i][j] = g[j][i] = -long_ / 2
    return g


@dataclass(frozen=True, eq=False)
class RootSystem:
    simple_type: SimpleType
    cartan_matrix: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    inverse_cartan: tuple[tuple[Fraction, ...], ...]
    symmetrized_form: tuple[tuple[Fraction, ...], ...]
    _root_index: dict = field(repr=False, compare=False, default_factory=dict)

    @property
    def rank(self) -> int:
        return self.simple_type.rank

    def __str__(self):
        return str(self.simple_type)

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.simple_type == other.simple_type

    def __hash__(self):
        return hash(self.simple_type)

    # -- coordinates -------------------------------------------------------

    def root_to_weight(self, root: Sequence) -> Weight:
        """Simple-root coordinates to fundamental coordinates."""
        n = self.rank
        return Weight(
            sum(Fraction(root[i]) * self.cartan_matrix[i][j] for i in range(n)) for j in range(n)
        )

    def to_root_coords(self, lam: Weight) -> tuple[Fraction, ...]:
        n = self.rank
        return tuple(
            sum(lam[i] * self.inverse_cartan[i][j] for i in range(n)) for j in range(n)
        )

    def simple_root(self, i: int) -> Weight:
        return Weight(self.cartan_matrix[i])

    @cached_property
    def rho(self) -> Weight:
        return Weight([1] * self.rank)

    @property
    def highest_root(self) -> tuple[int, ...]:
        return self.positive_roots[-1]

    def root_index(self, root: Sequence[int]) -> int | None:
        return self._root_index.get(tuple(root))

    def is_root(self, root: Sequence[int]) -> bool:
        r = tuple(root)
        return r in self._root_index or tuple(-c for c in r) in self._root_index

    def pairing(self, root: Sequence[int], i: int) -> int:
        """<root, alpha_i^vee> for a root in simple-root coordinates."""
        return sum(root[j] * self.cartan_matrix[j][i] for j in range(self.rank))

    def root_norm2(self, root: Sequence) -> Fraction:
        g = self.symmetrized_form
        n = self.rank
        return sum(root[i] * root[j] * g[i][j] for i in range(n) for j in range(n))

    def coroot_coefficients(self, root: Sequence[int]) -> tuple[int, ...]:
        """Coefficients of alpha^vee on the simple coroots."""
        norm = self.root_norm2(root)
        out = []
        for i in range(self.rank):
            c = Fraction(root[i]) * self.symmetrized_form[i][i] / norm
            if c.denominator != 1:
                raise ConsistencyError("non-integral coroot")
            out.append(int(c))
        return tuple(out)

    @cached_property
    def coroot_table(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.coroot_coefficients(r) for r in self.positive_roots)

    # -- Weyl group --------------------------------------------------------

    def reflect(self, i: int, lam: Weight) -> Weight:
        c = lam[i]
        if c == 0:
            return lam
        row = self.cartan_matrix[i]
        return Weight(lam[j] - c * row[j] for j in range(self.rank))

    def longest_word(self, sub: Iterable[int]) -> tuple[int, ...]:
        """Reduced word (applied left to right) of the longest element of W_sub."""
        sub = sorted(set(sub))
        lam = Weight([1 if i in sub else 0 for i in range(self.rank)])
        word = []
        while True:
            for i in sub:
                if lam[i] > 0:
                    lam = self.reflect(i, lam)
                    word.append(i)
                    break
            else:
                return tuple(word)


def build_root_system(t: SimpleType | str) -> RootSystem:
    if isinstance(t, str):
        t = SimpleType.parse(t)
    n = t.rank
    g = _gram(t)
    cartan = tuple(
        tuple(int(2 * g[i][j] / g[j][j]) for j in range(n)) for i in range(n)
    )
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = set()
        for beta in layer:
            for i in range(n):
                # q: how far down the alpha_i-string through beta goes
                q = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        q += 1
                    else:
                        break
                p = q - sum(beta[j] * cartan[j][i] for j in range(n))
                if p > 0:
                    up = list(beta)
                    up[i] += 1
                    nxt.add(tuple(up))
        nxt -= roots
        roots |= nxt
        layer = sorted(nxt)
    ordered = tuple(sorted(roots, key=lambda r: (sum(r), r)))
    inv = inverse([[Fraction(c) for c in row] for row in cartan])
    rs = RootSystem(
        simple_type=t,
        cartan_matrix=cartan,
        positive_roots=ordered,
        inverse_cartan=tuple(tuple(row) for row in inv),
        symmetrized_form=tuple(tuple(row) for row in g),
    )
    rs._root_index.update({r: k for k, r in enumerate(ordered)})
    return rs


def apply_w0(rs: RootSystem, sub: Iterable[int], lam: Weight) -> Weight:
    """Image of ``lam`` under the longest element of the parabolic subgroup W_sub."""
    for i in rs.longest_word(sub):
        lam = rs.reflect(i, lam)
    return lam


def inner_product(rs: RootSystem, lam: Weight, mu: Weight) -> Fraction:
    m = rs.to_root_coords(mu)
    g = rs.symmetrized_form
    return sum(lam[i] * m[i] * g[i][i] / 2 for i in range(rs.rank))


def deg(rs: RootSystem, lam: Weight) -> int:
    if not lam.is_dominant():
        raise DomainError(f"deg is defined on dominant weights, got {lam}")
    return linear_deg(rs, lam)


def linear_deg(rs: RootSystem, lam: Weight) -> int:
    """Twice the sum of simple-root coordinates, without the dominance check."""
    d = 2 * sum(rs.to_root_coords(lam))
    if d.denominator != 1:
        raise ConsistencyError(f"non-integral deg {d} for {lam}")
    return int(d)


def dominant_weights(rs: RootSystem, max_deg: int) -> list[Weight]:
    """All dominant weights with deg <= max_deg, in lexicographic order."""
    unit = [linear_deg(rs, Weight.fundamental(rs.rank, i)) for i in range(rs.rank)]
    out: list[Weight] = []

    def rec(i, prefix, budget):
        if i == rs.rank:
            out.append(Weight(prefix))
            return
        for c in range(budget // unit[i] + 1):
            rec(i + 1, prefix + [c], budget - c * unit[i])

    rec(0, [], max_deg)
    return out
