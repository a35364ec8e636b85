from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Optional


def bits(mask: int):
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(items) -> int:
    mask = 0
    for i in items:
        mask |= 1 << i
    return mask


def members(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    adj[i] has bit j set iff {i, j} is an edge. Values are immutable and
    hashable, so graphs can be used as dict keys and sent to worker processes.
    """

    n: int
    adj: tuple[int, ...]

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return members(self.adj[v])

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (i, j) for j in range(self.n) for i in range(j) if self.adj[i] >> j & 1
        )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"<Graph n={self.n} edges={self.edge_count}>"


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Total-order key; two graphs (or two posets) are isomorphic iff keys are equal."""

    key: bytes


@dataclass(frozen=True)
class Poset:
    """Strict partial order on 0..n-1.

    lt[i] has bit j set iff i < j. The relation is kept transitively closed.
    """

    n: int
    lt: tuple[int, ...]

    def less(self, i: int, j: int) -> bool:
        return bool(self.lt[i] >> j & 1)

    def comparable(self, i: int, j: int) -> bool:
        return self.less(i, j) or self.less(j, i)

    @cached_property
    def below(self) -> tuple[int, ...]:
        """below[x] is the mask of elements strictly less than x."""
        rows = [0] * self.n
        for i in range(self.n):
            for j in bits(self.lt[i]):
                rows[j] |= 1 << i
        return tuple(rows)

    @cached_property
    def relations(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, j) for i in range(self.n) for j in bits(self.lt[i]))

    def __repr__(self) -> str:
        return f"<Poset n={self.n} relations={len(self.relations)}>"


class PatternKind(Enum):
    X = "X"
    N = "N"
    DIAMOND = "DIAMOND"
    WEDGE = "WEDGE"

    @property
    def points(self) -> tuple[str, ...]:
        return _PATTERN_SHAPES[self][0]

    @property
    def relations(self) -> tuple[tuple[int, int], ...]:
        """Required strict relations, as index pairs into points."""
        names = self.points
        return tuple((names.index(a), names.index(b)) for a, b in _PATTERN_SHAPES[self][1])

    @property
    def incomparabilities(self) -> tuple[tuple[int, int], ...]:
        names = self.points
        return tuple((names.index(a), names.index(b)) for a, b in _PATTERN_SHAPES[self][2])


# points, required relations (a < b), required incomparabilities.
# Pairs not listed are unconstrained; N leaves (z1, z4) free, see posets.contains_pattern.
_PATTERN_SHAPES = {
    PatternKind.X: (
        ("b", "e", "c", "d", "f"),
        (("b", "c"), ("e", "c"), ("c", "d"), ("c", "f")),
        (("b", "e"), ("d", "f")),
    ),
    PatternKind.N: (
        ("z1", "z2", "z3", "z4"),
        (("z1", "z2"), ("z3", "z2"), ("z3", "z4")),
        (("z1", "z3"), ("z2", "z4")),
    ),
    PatternKind.DIAMOND: (
        ("p", "q", "r", "s"),
        (("p", "q"), ("p", "r"), ("q", "s"), ("r", "s")),
        (("q", "r"),),
    ),
    PatternKind.WEDGE: (
        ("p", "p'", "q"),
        (("p", "q"), ("p'", "q")),
        (("p", "p'"),),
    ),
}


@dataclass(frozen=True)
class LatticePointSet:
    """0/1 points of a polytope, sorted lexicographically.

    labels[k] is the vertex (or element) subset whose indicator is points[k].
    """

    dim: int
    points: tuple[tuple[int, ...], ...]
    labels: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class SemigroupRing:
    """Degree-graded affine semigroup generated by homogenized 0/1 vectors.

    gens[k] = (1, a_1, ..., a_n); the first coordinate is the degree.
    """

    n: int
    gens: tuple[tuple[int, ...], ...]
    labels: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.gens)

    def __repr__(self) -> str:
        return f"<SemigroupRing n={self.n} generators={self.size}>"


@dataclass(frozen=True, order=True)
class BinomialRelation:
    """left and right are sorted multisets of generator indices with equal sums."""

    degree: int
    left: tuple[int, ...]
    right: tuple[int, ...]
    essential: bool = field(default=True, compare=False)

    def key(self) -> frozenset:
        return frozenset((self.left, self.right))

    def balanced(self, ring: SemigroupRing) -> bool:
        def total(side):
            return tuple(sum(col) for col in zip(*(ring.gens[k] for k in side)))

        return (
            len(self.left) == len(self.right) == self.degree
            and self.left != self.right
            and total(self.left) == total(self.right)
        )

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "left": list(self.left),
            "right": list(self.right),
            "essential": self.essential,
        }


@dataclass(frozen=True)
class KoszulWitness:
    pair: tuple[int, int]
    vector: tuple[int, ...]
    degree: int

    def to_dict(self) -> dict:
        return {"pair": list(self.pair), "vector": list(self.vector), "degree": self.degree}


@dataclass(frozen=True)
class ColonWitness:
    """An element of (u_prefix) : u_target of the given degree not reached from degree one."""

    prefix: tuple[int, ...]
    target: int
    vector: tuple[int, ...]
    degree: int


@dataclass(frozen=True)
class KoszulVerdict:
    strongly_koszul: bool
    witness: Optional[KoszulWitness]
    degree_bound_used: int

    def to_dict(self) -> dict:
        return {
            "strongly_koszul": self.strongly_koszul,
            "degree_bound": self.degree_bound_used,
            "witness": self.witness.to_dict() if self.witness else None,
        }


@dataclass(frozen=True)
class InvariantBundle:
    alpha: int
    m: int
    omega: int
    theta: int
    chi: int

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "m": self.m,
            "omega": self.omega,
            "theta": self.theta,
            "chi": self.chi,
        }


# Flag order used by records, tables and reports
CLASS_FLAGS = (
    "bipartite",
    "almost_bipartite",
    "chordal",
    "perfect",
    "comparability",
    "hl_comparability",
    "threshold",
    "trivially_perfect",
    "strongly_koszul",
)

# (premise, conclusion) pairs every record must satisfy
FLAG_IMPLICATIONS = (
    ("threshold", "trivially_perfect"),
    ("trivially_perfect", "perfect"),
    ("hl_comparability", "comparability"),
    ("bipartite", "comparability"),
)


@dataclass(frozen=True)
class ClassificationRecord:
    graph6: str
    n: int
    edge_count: int
    invariants: InvariantBundle
    bipartite: bool
    almost_bipartite: bool
    chordal: bool
    perfect: bool
    comparability: bool
    hl_comparability: bool
    threshold: bool
    trivially_perfect: bool
    # None when the graph is above the oracle bound
    strongly_koszul: Optional[bool]
    degree_bound: int

    def flags(self) -> dict:
        return {name: getattr(self, name) for name in CLASS_FLAGS}

    def implication_violations(self) -> list[str]:
        errors = []
        for premise, conclusion in FLAG_IMPLICATIONS:
            if getattr(self, premise) and not getattr(self, conclusion):
                errors.append(f"{premise} without {conclusion}")
        return errors

    def to_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "edges": self.edge_count,
            "invariants": self.invariants.to_dict(),
            "flags": self.flags(),
            "degree_bound": self.degree_bound,
        }

    def __repr__(self) -> str:
        return f"<ClassificationRecord {self.graph6} n={self.n}>"
