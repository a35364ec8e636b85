import logging
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple

from koszulgraphs.canon_utils import minimal_code, refine_cells, twin_classes
from koszulgraphs.errors import EmptySubset, InvalidVertex, ParseError, SelfLoop, check_bound
from koszulgraphs.limits import CANONICAL_BOUND, GRAPH_ENUMERATION_BOUND
from koszulgraphs.models import CanonicalForm, Graph, bits, mask_of

logger = logging.getLogger(__name__)


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on 0..n-1; repeated pairs collapse to one edge."""
    if n < 1:
        raise InvalidVertex("A graph needs at least one vertex.")

    rows = [0] * n
    for pair in edges:
        i, j = pair
        if not (0 <= i < n and 0 <= j < n):
            raise InvalidVertex(f"Edge {i}-{j} has an endpoint outside 0..{n - 1}.")
        if i == j:
            raise SelfLoop(f"Self-loop at vertex {i}.")
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def _from_rows(rows: Sequence[int]) -> Graph:
    return Graph(len(rows), tuple(rows))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """G_W relabeled by increasing original label."""
    chosen = sorted(set(vertices))
    if not chosen:
        raise EmptySubset("Induced subgraph needs at least one vertex.")
    for v in chosen:
        if not 0 <= v < g.n:
            raise InvalidVertex(f"Vertex {v} is outside 0..{g.n - 1}.")
    return induced_subgraph_mask(g, mask_of(chosen))


def induced_subgraph_mask(g: Graph, mask: int) -> Graph:
    if not mask:
        raise EmptySubset("Induced subgraph needs at least one vertex.")
    chosen = list(bits(mask))
    position = {v: k for k, v in enumerate(chosen)}
    rows = []
    for v in chosen:
        row = 0
        for u in bits(g.adj[v] & mask):
            row |= 1 << position[u]
        rows.append(row)
    return _from_rows(rows)


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return _from_rows([full & ~g.adj[v] & ~(1 << v) for v in range(g.n)])


def is_connected(g: Graph) -> bool:
    return component_mask(g, 0) == g.vertex_mask


def component_mask(g: Graph, start: int) -> int:
    """Vertices reachable from start."""
    seen = 1 << start
    frontier = seen
    while frontier:
        reached = 0
        for v in bits(frontier):
            reached |= g.adj[v]
        frontier = reached & ~seen
        seen |= frontier
    return seen


def components(g: Graph) -> List[int]:
    """Connected components as vertex masks, ordered by smallest vertex."""
    remaining = g.vertex_mask
    found = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = component_mask(g, start)
        found.append(comp)
        remaining &= ~comp
    return found


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex v renamed perm[v]."""
    rows = [0] * g.n
    for i, j in g.edges:
        rows[perm[i]] |= 1 << perm[j]
        rows[perm[j]] |= 1 << perm[i]
    return _from_rows(rows)


# -------------------------
# Canonical forms
# -------------------------


def _canonical(g: Graph) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    def signature(v, ranks):
        return tuple(sorted(ranks[u] for u in bits(g.adj[v])))

    cells = refine_cells(g.n, [g.degree(v) for v in range(g.n)], signature)
    twins = twin_classes(g.n, lambda v, w: g.has_edge(v, w))
    return minimal_code(g.n, cells, lambda u, v: 1 if g.has_edge(u, v) else 0, twins)


def canonical_form(g: Graph, bound: int = CANONICAL_BOUND) -> CanonicalForm:
    return canonical_pair(g, bound)[0]


def canonical_graph(g: Graph, bound: int = CANONICAL_BOUND) -> Graph:
    """The representative of g's isomorphism class: g relabeled into canonical order."""
    return canonical_pair(g, bound)[1]


def canonical_pair(g: Graph, bound: int = CANONICAL_BOUND) -> Tuple[CanonicalForm, Graph]:
    check_bound(g.n, bound, "Vertex count")
    code, order = _canonical(g)
    perm = [0] * g.n
    for position, v in enumerate(order):
        perm[v] = position
    return CanonicalForm(bytes([g.n]) + bytes(code)), relabel(g, perm)


@lru_cache(maxsize=None)
def _all_classes(n: int) -> Tuple[Graph, ...]:
    if n == 1:
        return (make_graph(1, []),)

    found = {}
    for base in _all_classes(n - 1):
        for neighbours in range(1 << (n - 1)):
            rows = list(base.adj) + [neighbours]
            for u in bits(neighbours):
                rows[u] |= 1 << (n - 1)
            key, representative = canonical_pair(_from_rows(rows))
            found.setdefault(key, representative)

    logger.debug("Enumerated %d graphs on %d vertices", len(found), n)
    return tuple(found[key] for key in sorted(found))


def enumerate_graphs(
    n: int,
    connected_only: bool = False,
    bound: int = GRAPH_ENUMERATION_BOUND,
) -> List[Graph]:
    """One canonical representative per isomorphism class, in canonical-key order."""
    if n < 1:
        raise InvalidVertex("A graph needs at least one vertex.")
    check_bound(n, bound, "Vertex count")
    graphs = list(_all_classes(n))
    if connected_only:
        graphs = [g for g in graphs if is_connected(g)]
    return graphs


# -------------------------
# Named graphs and constructions
# -------------------------


def empty_graph(n: int) -> Graph:
    return make_graph(n, [])


def complete_graph(n: int) -> Graph:
    return make_graph(n, [(i, j) for j in range(n) for i in range(j)])


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(r: int) -> Graph:
    """K_{1,r} with center 0."""
    return make_graph(r + 1, [(0, i) for i in range(1, r + 1)])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Complete r-partite graph; part k takes the next sizes[k] labels."""
    part = []
    for k, size in enumerate(sizes):
        part.extend([k] * size)
    n = len(part)
    return make_graph(n, [(i, j) for j in range(n) for i in range(j) if part[i] != part[j]])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return _from_rows(list(g.adj) + [row << g.n for row in h.adj])


def add_isolated_vertex(g: Graph) -> Graph:
    return _from_rows(list(g.adj) + [0])


def suspension(g: Graph) -> Graph:
    """Add one vertex adjacent to every existing vertex."""
    new = 1 << g.n
    return _from_rows([row | new for row in g.adj] + [g.vertex_mask])


# -------------------------
# Edge-list JSON
# -------------------------


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [[i, j] for i, j in g.edges]}


def graph_from_json(data) -> Graph:
    errors = []

    if not isinstance(data, dict):
        raise ParseError("Graph JSON must be an object with 'n' and 'edges'.")
    n = data.get("n")
    edges = data.get("edges", [])
    if not isinstance(n, int) or isinstance(n, bool):
        errors.append("'n' must be an integer.")
    if not isinstance(edges, list) or not all(
        isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e) for e in edges
    ):
        errors.append("'edges' must be a list of [i, j] integer pairs.")

    if errors:
        raise ParseError(" ".join(errors))
    return make_graph(n, edges)
