import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Set, Tuple

import numpy as np

from koszulgraphs.errors import (
    EmptyGenerators,
    InvalidDegree,
    InvalidGenerator,
    PatternPrecondition,
    TooLarge,
    check_bound,
)
from koszulgraphs.invariants import stable_sets
from koszulgraphs.limits import MAX_DEGREE_BOUND
from koszulgraphs.models import (
    BinomialRelation,
    Graph,
    LatticePointSet,
    PatternKind,
    Poset,
    SemigroupRing,
    mask_of,
)
from koszulgraphs.posets import (
    antichains,
    comparability_graph,
    contains_pattern,
    ideal_masks,
    maximal_elements,
    poset_ideals,
)

logger = logging.getLogger(__name__)


# -------------------------
# Lattice points
# -------------------------


def _indicator(n: int, subset: Sequence[int]) -> Tuple[int, ...]:
    chosen = set(subset)
    return tuple(1 if i in chosen else 0 for i in range(n))


def _point_set(n: int, subsets) -> LatticePointSet:
    pairs = sorted((_indicator(n, s), tuple(s)) for s in subsets)
    return LatticePointSet(
        dim=n,
        points=tuple(p for p, _ in pairs),
        labels=tuple(s for _, s in pairs),
    )


def stable_polytope_vertices(g: Graph) -> LatticePointSet:
    """Indicator vectors of the stable sets of g."""
    return _point_set(g.n, stable_sets(g))


def order_polytope_vertices(p: Poset) -> LatticePointSet:
    """Indicator vectors of the poset ideals of p."""
    return _point_set(p.n, poset_ideals(p))


def chain_polytope_vertices(p: Poset) -> LatticePointSet:
    """Indicator vectors of the antichains of p."""
    return _point_set(p.n, antichains(p))


def semigroup_of(points: LatticePointSet) -> SemigroupRing:
    """
    Semigroup generated by the homogenized points (1, a_1, ..., a_n).

    Generators keep the lexicographic order of the points; the first
    coordinate is the degree.
    """
    errors = []

    if not points.points:
        raise EmptyGenerators("A semigroup needs at least one generator.")
    for k, point in enumerate(points.points):
        if len(point) != points.dim:
            errors.append(f"point {k} has length {len(point)}, expected {points.dim}")
        elif any(a not in (0, 1) for a in point):
            errors.append(f"point {k} is not a 0/1 vector")
    if len(set(points.points)) != len(points.points):
        errors.append("points are not distinct")

    if errors:
        raise InvalidGenerator("Invalid generators: " + "; ".join(errors) + ".")

    pairs = sorted(zip(points.points, points.labels))
    return SemigroupRing(
        n=points.dim,
        gens=tuple((1,) + point for point, _ in pairs),
        labels=tuple(label for _, label in pairs),
    )


def stable_ring(g: Graph) -> SemigroupRing:
    """The semigroup of k[Q_G]."""
    return semigroup_of(stable_polytope_vertices(g))


def hibi_ring(p: Poset) -> SemigroupRing:
    """The semigroup of R_k[P]."""
    return semigroup_of(order_polytope_vertices(p))


def generator_table(ring: SemigroupRing) -> List[dict]:
    return [
        {"index": k, "vector": list(vector), "subset": list(label)}
        for k, (vector, label) in enumerate(zip(ring.gens, ring.labels))
    ]


# -------------------------
# Degree tables
# -------------------------


@dataclass(frozen=True, eq=False)
class DegreeTable:
    """
    Semigroup elements of every degree 0..max_degree, encoded as integers.

    A homogenized vector is read as the digits of a base-(max_degree + 1)
    number, degree digit most significant, so integer order is lexicographic
    order and adding codes adds vectors. levels[d] is sorted and unique.
    """

    ring: SemigroupRing
    max_degree: int
    base: int
    gens: np.ndarray
    levels: Tuple[np.ndarray, ...]

    def decode(self, code: int) -> Tuple[int, ...]:
        digits = []
        code = int(code)
        for _ in range(self.ring.n + 1):
            code, digit = divmod(code, self.base)
            digits.append(digit)
        return tuple(reversed(digits))


def _check_degree(d: int, bound: int) -> None:
    if d < 0:
        raise InvalidDegree(f"Degree must be non-negative, got {d}.")
    check_bound(d, bound, "Degree")


def degree_table(ring: SemigroupRing, max_degree: int, bound: int = MAX_DEGREE_BOUND) -> DegreeTable:
    _check_degree(max_degree, bound)
    return _degree_table(ring, max_degree)


@lru_cache(maxsize=256)
def _degree_table(ring: SemigroupRing, max_degree: int) -> DegreeTable:
    base = max_degree + 1
    if base ** (ring.n + 1) >= 2**62:
        raise TooLarge(f"Dimension {ring.n} is too large to encode degree {max_degree} elements.")

    weights = np.array([base**k for k in range(ring.n, -1, -1)], dtype=np.int64)
    gens = np.array(ring.gens, dtype=np.int64) @ weights

    levels = [np.zeros(1, dtype=np.int64)]
    for _ in range(max_degree):
        levels.append(np.unique(np.add.outer(levels[-1], gens).ravel()))
    logger.debug(
        "Degree table for %r up to %d: sizes %s",
        ring, max_degree, [int(level.size) for level in levels],
    )
    return DegreeTable(ring, max_degree, base, gens, tuple(levels))


def elements_of_degree(ring: SemigroupRing, d: int, bound: int = MAX_DEGREE_BOUND) -> Set[Tuple[int, ...]]:
    """All distinct sums of d generators, as homogenized vectors."""
    table = degree_table(ring, d, bound)
    return {table.decode(code) for code in table.levels[d]}


def hilbert_function(ring: SemigroupRing, d: int, bound: int = MAX_DEGREE_BOUND) -> int:
    return int(degree_table(ring, d, bound).levels[d].size)


# -------------------------
# Relations
# -------------------------


def _side_sum(ring: SemigroupRing, side: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sum(col) for col in zip(*(ring.gens[k] for k in side)))


def _fibers(ring: SemigroupRing, d: int) -> List[List[Tuple[int, ...]]]:
    """Degree-d generator multisets grouped by their vector sum; singletons dropped."""
    groups: Dict[Tuple[int, ...], List[Tuple[int, ...]]] = defaultdict(list)
    for multiset in combinations_with_replacement(range(ring.size), d):
        groups[_side_sum(ring, multiset)].append(multiset)
    return [groups[key] for key in sorted(groups) if len(groups[key]) > 1]


def _components(fiber: List[Tuple[int, ...]]) -> List[int]:
    """Union multisets of one fiber that share a generator; returns a root per multiset."""
    parent = list(range(len(fiber)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    first_with: Dict[int, int] = {}
    for k, multiset in enumerate(fiber):
        for g in set(multiset):
            if g in first_with:
                parent[find(k)] = find(first_with[g])
            else:
                first_with[g] = k
    return [find(k) for k in range(len(fiber))]


def toric_relations_up_to(ring: SemigroupRing, max_degree: int, bound: int = MAX_DEGREE_BOUND) -> List[BinomialRelation]:
    """
    Every pair of distinct degree-d multisets with equal sums, for 2 <= d <= max_degree.

    A relation is essential when its two sides cannot be linked by moves that
    keep a common generator fixed, i.e. it does not follow from relations of
    lower degree.
    """
    if max_degree < 2:
        raise InvalidDegree(f"Relations start in degree 2, got bound {max_degree}.")
    check_bound(max_degree, bound, "Degree")

    relations = []
    for d in range(2, max_degree + 1):
        for fiber in _fibers(ring, d):
            roots = _components(fiber)
            for a, b in combinations(range(len(fiber)), 2):
                relations.append(
                    BinomialRelation(d, fiber[a], fiber[b], essential=roots[a] != roots[b])
                )
    relations.sort()
    logger.debug("%r has %d relations up to degree %d", ring, len(relations), max_degree)
    return relations


def is_quadratically_generated(ring: SemigroupRing, max_degree: int, bound: int = MAX_DEGREE_BOUND) -> bool:
    """No relation of degree 3..max_degree is essential."""
    return not any(
        rel.essential and rel.degree >= 3
        for rel in toric_relations_up_to(ring, max_degree, bound)
    )


def relation_to_json(rel: BinomialRelation) -> dict:
    return rel.to_dict()


def hibi_relations(p: Poset) -> List[BinomialRelation]:
    """
    One degree-2 relation per unordered pair of incomparable ideals {I, J},
    relating {I, J} to {I∩J, I∪J}. Indices refer to hibi_ring(p).
    """
    ring = hibi_ring(p)
    index = {mask_of(label): k for k, label in enumerate(ring.labels)}

    relations = []
    for a, b in combinations(ideal_masks(p), 2):
        if a & ~b and b & ~a:
            left = tuple(sorted((index[a], index[b])))
            right = tuple(sorted((index[a & b], index[a | b])))
            relations.append(BinomialRelation(2, left, right))
    relations.sort()
    return relations


def hibi_moves_connect_fibers(p: Poset) -> bool:
    """
    Every hibi relation is a degree-2 toric relation of hibi_ring(p), and the
    hibi relations connect every degree-2 fiber.
    """
    ring = hibi_ring(p)
    fiber_of = {}
    fibers = _fibers(ring, 2)
    for k, fiber in enumerate(fibers):
        for multiset in fiber:
            fiber_of[multiset] = k

    moves = defaultdict(set)
    for rel in hibi_relations(p):
        if fiber_of.get(rel.left) is None or fiber_of.get(rel.left) != fiber_of.get(rel.right):
            return False
        moves[rel.left].add(rel.right)
        moves[rel.right].add(rel.left)

    for fiber in fibers:
        seen = {fiber[0]}
        stack = [fiber[0]]
        while stack:
            for other in moves[stack.pop()]:
                if other not in seen:
                    seen.add(other)
                    stack.append(other)
        if len(seen) != len(fiber):
            return False
    return True


# -------------------------
# Transfer between R_k[P] and k[Q_G(P)]
# -------------------------


def _relation_keys(relations: List[BinomialRelation]) -> Set[frozenset]:
    return {rel.key() for rel in relations}


def _mapped_keys(relations: List[BinomialRelation], phi: Sequence[int]) -> Set[frozenset]:
    return {
        frozenset(
            (
                tuple(sorted(phi[k] for k in rel.left)),
                tuple(sorted(phi[k] for k in rel.right)),
            )
        )
        for rel in relations
    }


def _transfer_rings(p: Poset) -> Tuple[SemigroupRing, SemigroupRing, List[int]]:
    """hibi_ring(p), the stable ring of its comparability graph, and the transfer map on indices."""
    source = hibi_ring(p)
    target = stable_ring(comparability_graph(p))
    target_index = {label: k for k, label in enumerate(target.labels)}
    seed = [
        target_index[maximal_elements(p, mask_of(label))] for label in source.labels
    ]
    return source, target, seed


def transfer_map_preserves_relations(p: Poset, max_degree: int = 3, bound: int = MAX_DEGREE_BOUND) -> bool:
    """Whether I ↦ max(I) on generators already carries relations onto relations."""
    source, target, seed = _transfer_rings(p)
    return _mapped_keys(toric_relations_up_to(source, max_degree, bound), seed) == _relation_keys(
        toric_relations_up_to(target, max_degree, bound)
    )


def _degree_two_fibers(ring: SemigroupRing) -> Dict[Tuple[int, int], int]:
    return {
        multiset: _side_sum(ring, multiset)
        for multiset in combinations_with_replacement(range(ring.size), 2)
    }


def find_relation_bijection(
    source: SemigroupRing,
    target: SemigroupRing,
    max_degree: int,
    seed: Optional[Sequence[int]] = None,
    bound: int = MAX_DEGREE_BOUND,
) -> Optional[Tuple[int, ...]]:
    """
    A generator bijection source -> target carrying the relations of degree
    <= max_degree of one ring exactly onto those of the other, or None.

    Candidates for generator k are tried with seed[k] first. A partial map is
    kept only while it matches degree-2 fibers one to one.
    """
    if source.size != target.size:
        return None

    source_rel = toric_relations_up_to(source, max_degree, bound)
    target_keys = _relation_keys(toric_relations_up_to(target, max_degree, bound))
    if len(source_rel) != len(target_keys):
        return None

    fib_s = _degree_two_fibers(source)
    fib_t = _degree_two_fibers(target)
    t = source.size
    phi: List[int] = [-1] * t
    used = [False] * t
    forward: Dict = {}
    backward: Dict = {}

    def assign(k: int, h: int) -> Optional[List]:
        added = []
        for x in range(k + 1):
            image = h if x == k else phi[x]
            a = fib_s[(x, k)]
            b = fib_t[tuple(sorted((image, h)))]
            if a in forward or b in backward:
                if forward.get(a) != b or backward.get(b) != a:
                    for key_a, key_b in added:
                        del forward[key_a], backward[key_b]
                    return None
                continue
            forward[a] = b
            backward[b] = a
            added.append((a, b))
        return added

    def extend(k: int) -> bool:
        if k == t:
            return _mapped_keys(source_rel, phi) == target_keys
        order = list(range(t))
        if seed is not None:
            order.remove(seed[k])
            order.insert(0, seed[k])
        for h in order:
            if used[h]:
                continue
            phi[k] = h
            added = assign(k, h)
            if added is None:
                continue
            used[h] = True
            if extend(k + 1):
                return True
            used[h] = False
            for key_a, key_b in added:
                del forward[key_a], backward[key_b]
        phi[k] = -1
        return False

    return tuple(phi) if extend(0) else None


def transfer_consistency(p: Poset, max_degree: int = 3, bound: int = MAX_DEGREE_BOUND) -> bool:
    """
    True iff some generator bijection, searched from the transfer map
    I ↦ max(I), carries the relations of R_k[P] up to max_degree onto those
    of k[Q_G(P)].
    """
    witness = contains_pattern(p, PatternKind.X)
    if witness is not None:
        raise PatternPrecondition(f"Poset contains the X pattern at elements {witness}.")

    source, target, seed = _transfer_rings(p)
    phi = find_relation_bijection(source, target, max_degree, seed, bound)
    if phi is not None and list(phi) != seed:
        logger.debug("%r: relation bijection differs from the transfer map", p)
    return phi is not None
