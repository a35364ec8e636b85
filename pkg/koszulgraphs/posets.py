import logging
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from koszulgraphs.canon_utils import minimal_code, refine_cells, twin_classes
from koszulgraphs.errors import (
    InvalidElement,
    NotAntisymmetric,
    ParseError,
    check_bound,
)
from koszulgraphs.graphs import components
from koszulgraphs.limits import CANONICAL_BOUND, POSET_ENUMERATION_BOUND
from koszulgraphs.models import CanonicalForm, Graph, PatternKind, Poset, bits, members

logger = logging.getLogger(__name__)


def _closure(rows: List[int]) -> List[int]:
    n = len(rows)
    for k in range(n):
        for i in range(n):
            if rows[i] >> k & 1:
                rows[i] |= rows[k]
    return rows


def make_poset(n: int, relations: Iterable[Sequence[int]]) -> Poset:
    """Poset whose order is the transitive closure of the given (i, j) pairs meaning i < j."""
    if n < 1:
        raise InvalidElement("A poset needs at least one element.")

    rows = [0] * n
    for pair in relations:
        i, j = pair
        if not (0 <= i < n and 0 <= j < n):
            raise InvalidElement(f"Relation {i}<{j} names an element outside 0..{n - 1}.")
        rows[i] |= 1 << j

    rows = _closure(rows)
    cyclic = [i for i in range(n) if rows[i] >> i & 1]
    if cyclic:
        raise NotAntisymmetric(
            f"Relations form a cycle through element(s) {', '.join(map(str, cyclic))}."
        )
    return Poset(n, tuple(rows))


def chain_poset(n: int) -> Poset:
    return make_poset(n, [(i, i + 1) for i in range(n - 1)])


def antichain_poset(n: int) -> Poset:
    return make_poset(n, [])


def dual(p: Poset) -> Poset:
    return Poset(p.n, p.below)


def relabel_poset(p: Poset, perm: Sequence[int]) -> Poset:
    rows = [0] * p.n
    for i, j in p.relations:
        rows[perm[i]] |= 1 << perm[j]
    return Poset(p.n, tuple(rows))


def down_set(p: Poset, x: int) -> Tuple[int, ...]:
    """Elements strictly below x."""
    return members(p.below[x])


def up_set(p: Poset, x: int) -> Tuple[int, ...]:
    return members(p.lt[x])


def minimal_elements(p: Poset, within: int = -1) -> Tuple[int, ...]:
    if within == -1:
        within = (1 << p.n) - 1
    return tuple(x for x in bits(within) if not p.below[x] & within)


def maximal_elements(p: Poset, within: int = -1) -> Tuple[int, ...]:
    if within == -1:
        within = (1 << p.n) - 1
    return tuple(x for x in bits(within) if not p.lt[x] & within)


def _is_chain(p: Poset, mask: int) -> bool:
    return all(p.comparable(a, b) for a, b in combinations(bits(mask), 2))


def _is_antichain(p: Poset, mask: int) -> bool:
    return all(not p.lt[x] & mask for x in bits(mask))


def _size_then_lex(masks: Iterable[int]) -> List[Tuple[int, ...]]:
    return sorted((members(m) for m in masks), key=lambda s: (len(s), s))


# -------------------------
# Ideals and antichains
# -------------------------


def ideal_masks(p: Poset) -> List[int]:
    return [
        mask
        for mask in range(1 << p.n)
        if all(not p.below[x] & ~mask for x in bits(mask))
    ]


def poset_ideals(p: Poset) -> List[Tuple[int, ...]]:
    """Down-closed subsets ordered by size, then lexicographically; ∅ first."""
    return _size_then_lex(ideal_masks(p))


def antichain_masks(p: Poset) -> List[int]:
    return [mask for mask in range(1 << p.n) if _is_antichain(p, mask)]


def antichains(p: Poset) -> List[Tuple[int, ...]]:
    return _size_then_lex(antichain_masks(p))


def transfer_map(p: Poset) -> Dict[Tuple[int, ...], Tuple[int, ...]]:
    """Each ideal mapped to the antichain of its maximal elements."""
    return {
        members(mask): maximal_elements(p, mask) for mask in ideal_masks(p)
    }


def comparability_graph(p: Poset) -> Graph:
    return Graph(p.n, tuple(p.lt[i] | p.below[i] for i in range(p.n)))


# -------------------------
# Pattern containment
# -------------------------


def _bridged(p: Poset, placed: Sequence[int]) -> bool:
    z1, z2, z3, z4 = placed
    return bool(p.lt[z1] & p.lt[z3] & p.below[z2] & p.below[z4])


def contains_pattern(p: Poset, kind: PatternKind) -> Optional[Tuple[int, ...]]:
    """
    First injective placement of the pattern's points (in pattern point order)
    keeping every required strict relation and every required incomparability.
    Unlisted pairs are unconstrained. None when the pattern does not occur.

    An N placement with z1 < z4 is refused when some element lies above
    z1 and z3 and below z2 and z4: all four relations then pass through it.
    """
    size = len(kind.points)
    # constraints to test when point k is placed, against earlier points
    checks: List[List[Tuple[int, str]]] = [[] for _ in range(size)]
    for a, b in kind.relations:
        if a < b:
            checks[b].append((a, "below"))
        else:
            checks[a].append((b, "above"))
    for a, b in kind.incomparabilities:
        checks[max(a, b)].append((min(a, b), "apart"))

    placed: List[int] = []

    def fits(x: int, k: int) -> bool:
        for earlier, how in checks[k]:
            y = placed[earlier]
            if how == "below" and not p.less(y, x):
                return False
            if how == "above" and not p.less(x, y):
                return False
            if how == "apart" and p.comparable(x, y):
                return False
        return True

    def place(k: int) -> bool:
        if k == size:
            return kind is not PatternKind.N or not _bridged(p, placed)
        for x in range(p.n):
            if x in placed or not fits(x, k):
                continue
            placed.append(x)
            if place(k + 1):
                return True
            placed.pop()
        return False

    return tuple(placed) if place(0) else None


def is_tree_poset_by_definition(p: Poset) -> bool:
    """
    Every strict down-set is a chain, and every connected component of the
    comparability graph has exactly one minimal element.
    """
    if not all(_is_chain(p, p.below[x]) for x in range(p.n)):
        return False
    return all(
        len(minimal_elements(p, comp)) == 1
        for comp in components(comparability_graph(p))
    )


TREE_PATTERNS = (PatternKind.X, PatternKind.N, PatternKind.DIAMOND)


def is_tree_poset_by_forbidden(p: Poset) -> bool:
    return all(contains_pattern(p, kind) is None for kind in TREE_PATTERNS)


def is_tree_poset_by_wedge(p: Poset) -> bool:
    return contains_pattern(p, PatternKind.WEDGE) is None


# -------------------------
# Canonical forms and enumeration
# -------------------------


def _relation_code(p: Poset, u: int, v: int) -> int:
    if p.less(u, v):
        return 1
    if p.less(v, u):
        return 2
    return 0


def _canonical(p: Poset) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    def signature(v, ranks):
        return (
            tuple(sorted(ranks[u] for u in bits(p.below[v]))),
            tuple(sorted(ranks[u] for u in bits(p.lt[v]))),
        )

    start = [(p.below[v].bit_count(), p.lt[v].bit_count()) for v in range(p.n)]
    cells = refine_cells(p.n, start, signature)
    twins = twin_classes(p.n, lambda v, w: _relation_code(p, v, w))
    return minimal_code(p.n, cells, lambda u, v: _relation_code(p, u, v), twins)


def poset_canonical_pair(p: Poset, bound: int = CANONICAL_BOUND) -> Tuple[CanonicalForm, Poset]:
    check_bound(p.n, bound, "Element count")
    code, order = _canonical(p)
    perm = [0] * p.n
    for position, v in enumerate(order):
        perm[v] = position
    return CanonicalForm(bytes([p.n]) + bytes(code)), relabel_poset(p, perm)


def poset_canonical_form(p: Poset, bound: int = CANONICAL_BOUND) -> CanonicalForm:
    return poset_canonical_pair(p, bound)[0]


def _natural_posets(n: int) -> Iterator[Tuple[int, ...]]:
    """Every poset on 0..n-1 in which i < j implies i precedes j in label order."""

    def extend(rows: List[int], below: List[int]) -> Iterator[Tuple[int, ...]]:
        k = len(rows)
        if k == n:
            yield tuple(rows)
            return
        for down in range(1 << k):
            # the new element's down-set must be down-closed
            if any(below[x] & ~down for x in bits(down)):
                continue
            new_rows = [row | (1 << k if down >> i & 1 else 0) for i, row in enumerate(rows)]
            yield from extend(new_rows + [0], below + [down])

    yield from extend([], [])


@lru_cache(maxsize=None)
def _poset_classes(n: int) -> Tuple[Poset, ...]:
    found = {}
    for rows in _natural_posets(n):
        key, representative = poset_canonical_pair(Poset(n, rows))
        found.setdefault(key, representative)
    logger.debug("Enumerated %d posets on %d elements", len(found), n)
    return tuple(found[key] for key in sorted(found))


def enumerate_posets(n: int, bound: int = POSET_ENUMERATION_BOUND) -> List[Poset]:
    """One representative per isomorphism class of posets on n elements."""
    if n < 1:
        raise InvalidElement("A poset needs at least one element.")
    check_bound(n, bound, "Element count")
    return list(_poset_classes(n))


# -------------------------
# Poset JSON
# -------------------------


def poset_to_json(p: Poset) -> dict:
    return {"n": p.n, "relations": [[i, j] for i, j in p.relations]}


def poset_from_json(data) -> Poset:
    errors = []

    if not isinstance(data, dict):
        raise ParseError("Poset JSON must be an object with 'n' and 'relations'.")
    n = data.get("n")
    relations = data.get("relations", [])
    if not isinstance(n, int) or isinstance(n, bool):
        errors.append("'n' must be an integer.")
    if not isinstance(relations, list) or not all(
        isinstance(r, list) and len(r) == 2 and all(isinstance(x, int) for x in r)
        for r in relations
    ):
        errors.append("'relations' must be a list of [i, j] integer pairs.")

    if errors:
        raise ParseError(" ".join(errors))
    return make_poset(n, relations)
