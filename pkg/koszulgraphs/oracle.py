"""
Strong Koszulness of degree-one generated semigroup rings.

The primary test is pairwise: for generators a_i, a_j the intersection of the
principal ideals (u_i) and (u_j) must be generated by its degree-2 elements.
Everything is checked up to a degree bound D. Membership questions are
answered from encoded degree tables (see toric.DegreeTable).
"""

import logging
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import List, Optional, Sequence, Set, Tuple

import numpy as np

from koszulgraphs.errors import InvalidDegree, InvalidGenerator, check_bound
from koszulgraphs.graphs import canonical_graph, induced_subgraph_mask
from koszulgraphs.limits import DEFAULT_DEGREE_BOUND, HEREDITY_BOUND, MAX_DEGREE_BOUND, MIN_DEGREE_BOUND
from koszulgraphs.models import ColonWitness, Graph, KoszulVerdict, KoszulWitness, SemigroupRing
from koszulgraphs.toric import DegreeTable, degree_table, stable_ring

logger = logging.getLogger(__name__)


def _check_bound(max_degree: int, bound: int) -> None:
    if max_degree < MIN_DEGREE_BOUND:
        raise InvalidDegree(
            f"Degree bound must be at least {MIN_DEGREE_BOUND}, got {max_degree}."
        )
    check_bound(max_degree, bound, "Degree bound")


def _check_index(ring: SemigroupRing, k: int) -> None:
    if not 0 <= k < ring.size:
        raise InvalidGenerator(f"Generator index {k} is outside 0..{ring.size - 1}.")


def _common(table: DegreeTable, i: int, j: int, d: int) -> np.ndarray:
    """Degree-d elements v with v - a_i and v - a_j both in S."""
    below = table.levels[d - 1]
    return np.intersect1d(table.gens[i] + below, table.gens[j] + below, assume_unique=True)


def _first_bad(table: DegreeTable, i: int, j: int, d: int) -> Optional[int]:
    """Least degree-d intersection element not of the form w + s with deg w = 2."""
    generated = np.unique(np.add.outer(_common(table, i, j, 2), table.levels[d - 2]).ravel())
    bad = np.setdiff1d(_common(table, i, j, d), generated, assume_unique=True)
    return int(bad[0]) if bad.size else None


def intersection_generated_in_degree_two(
    ring: SemigroupRing,
    i: int,
    j: int,
    max_degree: int = DEFAULT_DEGREE_BOUND,
    bound: int = MAX_DEGREE_BOUND,
) -> Optional[KoszulWitness]:
    """
    None when (u_i) ∩ (u_j) is generated in degree 2 up to max_degree,
    otherwise the least-degree, lexicographically least counterexample.
    """
    _check_index(ring, i)
    _check_index(ring, j)
    if i == j:
        raise InvalidGenerator(f"Pair needs two distinct generators, got {i} twice.")
    _check_bound(max_degree, bound)

    i, j = min(i, j), max(i, j)
    table = degree_table(ring, max_degree, bound)
    for d in range(3, max_degree + 1):
        code = _first_bad(table, i, j, d)
        if code is not None:
            return KoszulWitness(pair=(i, j), vector=table.decode(code), degree=d)
    return None


def is_strongly_koszul(
    ring: SemigroupRing,
    max_degree: int = DEFAULT_DEGREE_BOUND,
    bound: int = MAX_DEGREE_BOUND,
) -> KoszulVerdict:
    """
    Pairwise intersection test over all generator pairs.

    The witness is taken at the least failing degree, then the least pair,
    then the least vector.
    """
    _check_bound(max_degree, bound)
    table = degree_table(ring, max_degree, bound)

    for d in range(3, max_degree + 1):
        for i, j in combinations(range(ring.size), 2):
            code = _first_bad(table, i, j, d)
            if code is not None:
                witness = KoszulWitness(pair=(i, j), vector=table.decode(code), degree=d)
                logger.debug("%r is not strongly Koszul: %s", ring, witness)
                return KoszulVerdict(False, witness, max_degree)
    return KoszulVerdict(True, None, max_degree)


def verdict_to_json(verdict: KoszulVerdict) -> dict:
    return verdict.to_dict()


# -------------------------
# Independent checks
# -------------------------


def _elements(ring: SemigroupRing, d: int) -> Set[Tuple[int, ...]]:
    if d == 0:
        return {(0,) * (ring.n + 1)}
    return {
        tuple(sum(col) for col in zip(*(ring.gens[k] for k in multiset)))
        for multiset in combinations_with_replacement(range(ring.size), d)
    }


def _minus(v: Sequence[int], a: Sequence[int]) -> Tuple[int, ...]:
    return tuple(x - y for x, y in zip(v, a))


def verify_witness(ring: SemigroupRing, witness: KoszulWitness) -> bool:
    """
    Re-check a witness with plain tuple arithmetic: v - a_i and v - a_j lie in
    S, and no degree-2 intersection element w leaves v - w in S.
    """
    i, j = witness.pair
    v = tuple(witness.vector)
    d = witness.degree
    if v[0] != d or d < 3:
        return False

    a_i, a_j = ring.gens[i], ring.gens[j]
    below = _elements(ring, d - 1)
    if _minus(v, a_i) not in below or _minus(v, a_j) not in below:
        return False

    ones = set(ring.gens)
    rest = _elements(ring, d - 2)
    for w in _elements(ring, 2):
        if _minus(w, a_i) in ones and _minus(w, a_j) in ones and _minus(v, w) in rest:
            return False
    return True


def colon_condition_direct(
    ring: SemigroupRing,
    subsequence: Sequence[int],
    max_degree: int = DEFAULT_DEGREE_BOUND,
    bound: int = MAX_DEGREE_BOUND,
) -> Optional[ColonWitness]:
    """
    For each position j of the subsequence, every v of degree 2..max_degree
    in (u_prefix) : u_target must be a multiple of a degree-1 element of
    that colon ideal. Returns the least-degree counterexample, if any.
    """
    errors = []

    if len(subsequence) < 2:
        errors.append("subsequence needs at least two generators")
    if len(set(subsequence)) != len(subsequence):
        errors.append("subsequence repeats a generator")
    for k in subsequence:
        if not 0 <= k < ring.size:
            errors.append(f"generator index {k} is outside 0..{ring.size - 1}")

    if errors:
        raise InvalidGenerator("Invalid subsequence: " + "; ".join(errors) + ".")
    if max_degree < 2:
        raise InvalidDegree(f"Degree bound must be at least 2, got {max_degree}.")
    check_bound(max_degree, bound, "Degree bound")

    # membership of v + a_target needs one degree more
    table = degree_table(ring, max_degree + 1, bound + 1)
    levels = table.levels

    def ideal(prefix: Sequence[int], e: int) -> np.ndarray:
        return np.unique(np.concatenate([table.gens[k] + levels[e - 1] for k in prefix]))

    for e in range(2, max_degree + 1):
        for position in range(1, len(subsequence)):
            prefix = tuple(subsequence[:position])
            target = subsequence[position]
            shift = table.gens[target]

            ones = table.gens[np.isin(table.gens + shift, ideal(prefix, 2))]
            colon = levels[e][np.isin(levels[e] + shift, ideal(prefix, e + 1))]
            generated = np.unique(np.add.outer(ones, levels[e - 1]).ravel())
            bad = np.setdiff1d(colon, generated, assume_unique=True)
            if bad.size:
                return ColonWitness(prefix, target, table.decode(bad[0]), e)
    return None


# -------------------------
# Graph verdicts
# -------------------------


@lru_cache(maxsize=None)
def _canonical_verdict(g: Graph, max_degree: int) -> bool:
    return is_strongly_koszul(stable_ring(g), max_degree).strongly_koszul


def graph_is_strongly_koszul(g: Graph, max_degree: int = DEFAULT_DEGREE_BOUND) -> bool:
    """Verdict for k[Q_G], memoised by isomorphism class."""
    _check_bound(max_degree, MAX_DEGREE_BOUND)
    return _canonical_verdict(canonical_graph(g), max_degree)


def induced_failures(g: Graph, max_degree: int = DEFAULT_DEGREE_BOUND) -> List[Tuple[int, ...]]:
    """Vertex sets W whose induced subgraph is not strongly Koszul."""
    failures = []
    for mask in range(1, 1 << g.n):
        if not graph_is_strongly_koszul(induced_subgraph_mask(g, mask), max_degree):
            failures.append(tuple(v for v in range(g.n) if mask >> v & 1))
    return failures


def heredity_check(
    g: Graph,
    max_degree: int = DEFAULT_DEGREE_BOUND,
    bound: int = HEREDITY_BOUND,
) -> bool:
    """If k[Q_G] is strongly Koszul, so is k[Q_{G_W}] for every nonempty W."""
    check_bound(g.n, bound, "Vertex count")
    if not graph_is_strongly_koszul(g, max_degree):
        return True
    return not induced_failures(g, max_degree)
