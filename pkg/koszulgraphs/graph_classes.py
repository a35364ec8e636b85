import logging
from collections import deque
from itertools import combinations
from typing import Iterator, List, Optional, Tuple

from koszulgraphs.errors import check_bound
from koszulgraphs.graphs import induced_subgraph_mask
from koszulgraphs.invariants import (
    chromatic_number,
    clique_number,
    maximal_clique_count,
    stability_number,
)
from koszulgraphs.limits import ORIENTATION_BOUND, PERFECT_BOUND, TRIVIALLY_PERFECT_BOUND
from koszulgraphs.models import Graph, PatternKind, Poset, bits, mask_of
from koszulgraphs.posets import contains_pattern, is_tree_poset_by_definition

logger = logging.getLogger(__name__)


def _two_coloring(g: Graph, within: int) -> bool:
    side = {}
    for start in bits(within):
        if start in side:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in bits(g.adj[v] & within):
                if u not in side:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return False
    return True


def is_bipartite(g: Graph) -> bool:
    return _two_coloring(g, g.vertex_mask)


def is_almost_bipartite(g: Graph) -> bool:
    """Some single vertex deletion leaves a bipartite graph."""
    if g.n == 1:
        return True
    return any(_two_coloring(g, g.vertex_mask & ~(1 << v)) for v in range(g.n))


# -------------------------
# Four-vertex induced shapes
# -------------------------


def _shape(g: Graph, quad: Tuple[int, ...]) -> Optional[str]:
    mask = mask_of(quad)
    degrees = sorted((g.adj[v] & mask).bit_count() for v in quad)
    if degrees == [2, 2, 2, 2]:
        return "C4"
    if degrees == [1, 1, 2, 2]:
        return "P4"
    if degrees == [1, 1, 1, 1]:
        return "2K2"
    return None


def induced_shapes(g: Graph) -> Iterator[Tuple[str, Tuple[int, ...]]]:
    """(shape, vertices) for every 4-subset inducing C4, P4 or 2K2."""
    for quad in combinations(range(g.n), 4):
        shape = _shape(g, quad)
        if shape:
            yield shape, quad


def is_c4_p4_free(g: Graph) -> bool:
    return all(shape == "2K2" for shape, _ in induced_shapes(g))


def is_threshold_forbidden(g: Graph) -> bool:
    return next(induced_shapes(g), None) is None


def is_threshold_constructive(g: Graph) -> bool:
    """
    Undo the build: while more than one vertex remains, delete a vertex that
    is isolated or dominating in what is left.
    """
    remaining = g.vertex_mask
    while remaining.bit_count() > 1:
        size = remaining.bit_count()
        for v in bits(remaining):
            degree = (g.adj[v] & remaining).bit_count()
            if degree == 0 or degree == size - 1:
                remaining &= ~(1 << v)
                break
        else:
            return False
    return True


# -------------------------
# Induced-subgraph definitions
# -------------------------


def _all_induced(g: Graph) -> Iterator[Graph]:
    for mask in range(1, 1 << g.n):
        yield induced_subgraph_mask(g, mask)


def is_trivially_perfect_by_definition(g: Graph, bound: int = TRIVIALLY_PERFECT_BOUND) -> bool:
    """α = m on every nonempty induced subgraph."""
    check_bound(g.n, bound, "Vertex count")
    return all(stability_number(h) == maximal_clique_count(h) for h in _all_induced(g))


def is_perfect_desk(g: Graph, bound: int = PERFECT_BOUND) -> bool:
    """ω = χ on every nonempty induced subgraph."""
    check_bound(g.n, bound, "Vertex count")
    return all(clique_number(h) == chromatic_number(h) for h in _all_induced(g))


# -------------------------
# Transitive orientations
# -------------------------


def iter_transitive_orientations(g: Graph, bound: int = ORIENTATION_BOUND) -> Iterator[Poset]:
    """
    Every transitive orientation of g as a poset, in a fixed order.

    Edges are oriented one at a time. Orienting u < v is refused when some
    already oriented w gives w < u with w, v non-adjacent, or v < w with u, w
    non-adjacent, or v < w < u (a directed triangle).
    """
    check_bound(g.n, bound, "Vertex count")
    edges = g.edges
    up = [0] * g.n
    down = [0] * g.n

    def allowed(u: int, v: int) -> bool:
        if down[u] & ~g.adj[v] & ~(1 << v):
            return False
        if up[v] & ~g.adj[u] & ~(1 << u):
            return False
        return not up[v] & down[u]

    def orient(k: int) -> Iterator[Poset]:
        if k == len(edges):
            yield Poset(g.n, tuple(up))
            return
        i, j = edges[k]
        for u, v in ((i, j), (j, i)):
            if not allowed(u, v):
                continue
            up[u] |= 1 << v
            down[v] |= 1 << u
            yield from orient(k + 1)
            up[u] &= ~(1 << v)
            down[v] &= ~(1 << u)

    yield from orient(0)


def transitive_orientations(g: Graph, bound: int = ORIENTATION_BOUND) -> List[Poset]:
    found = list(iter_transitive_orientations(g, bound))
    logger.debug("%r has %d transitive orientations", g, len(found))
    return found


def is_comparability(g: Graph, bound: int = ORIENTATION_BOUND) -> bool:
    return next(iter_transitive_orientations(g, bound), None) is not None


def is_hl_comparability(g: Graph, bound: int = ORIENTATION_BOUND) -> bool:
    """Some transitive orientation avoids the X pattern."""
    return any(
        contains_pattern(p, PatternKind.X) is None
        for p in iter_transitive_orientations(g, bound)
    )


def tree_orientation(g: Graph, bound: int = ORIENTATION_BOUND) -> Optional[Poset]:
    """A transitive orientation of g that is a tree poset, if one exists."""
    return next(
        (p for p in iter_transitive_orientations(g, bound) if is_tree_poset_by_definition(p)),
        None,
    )
