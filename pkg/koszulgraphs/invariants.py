from typing import Iterator, List, Tuple

from koszulgraphs.graphs import complement
from koszulgraphs.models import Graph, InvariantBundle, bits, members


def stable_set_masks(g: Graph) -> Iterator[int]:
    """Stable sets as masks, in lexicographic order of their sorted vertex lists (∅ first)."""

    def extend(current: int, allowed: int) -> Iterator[int]:
        yield current
        for v in bits(allowed):
            # only vertices after v remain candidates, minus v's neighbours
            later = allowed & ~((2 << v) - 1)
            yield from extend(current | 1 << v, later & ~g.adj[v])

    return extend(0, g.vertex_mask)


def stable_sets(g: Graph) -> List[Tuple[int, ...]]:
    return [members(mask) for mask in stable_set_masks(g)]


def _max_stable(g: Graph, candidates: int) -> int:
    if not candidates:
        return 0
    v = (candidates & -candidates).bit_length() - 1
    rest = candidates & ~(1 << v)
    # an isolated candidate lies in some maximum stable set
    if not g.adj[v] & rest:
        return 1 + _max_stable(g, rest)
    return max(_max_stable(g, rest), 1 + _max_stable(g, rest & ~g.adj[v]))


def stability_number(g: Graph) -> int:
    return _max_stable(g, g.vertex_mask)


def _clique_masks(g: Graph) -> List[int]:
    found = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            found.append(r)
            return
        pivot = max(bits(p | x), key=lambda u: (g.adj[u] & p).bit_count())
        for v in bits(p & ~g.adj[pivot]):
            expand(r | 1 << v, p & g.adj[v], x & g.adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, g.vertex_mask, 0)
    return found


def maximal_cliques(g: Graph) -> List[Tuple[int, ...]]:
    """Inclusion-maximal cliques (Bron–Kerbosch with pivoting), sorted lexicographically."""
    return sorted(members(mask) for mask in _clique_masks(g))


def maximal_clique_count(g: Graph) -> int:
    return len(_clique_masks(g))


def clique_number(g: Graph) -> int:
    return max(mask.bit_count() for mask in _clique_masks(g))


def chromatic_number(g: Graph) -> int:
    """Exact χ by DSATUR-ordered branch and bound with the clique number as lower bound."""
    n = g.n
    lower = clique_number(g)
    best = n
    colors = [-1] * n

    def search(colored: int, used: int) -> None:
        nonlocal best
        if used >= best or best == lower:
            return
        if colored == n:
            best = used
            return

        # most saturated uncolored vertex; ties by degree, then label
        v = max(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (
                len({colors[w] for w in bits(g.adj[u]) if colors[w] >= 0}),
                g.degree(u),
                -u,
            ),
        )
        taken = {colors[w] for w in bits(g.adj[v]) if colors[w] >= 0}
        for c in range(used):
            if c not in taken:
                colors[v] = c
                search(colored + 1, used)
                colors[v] = -1
        if used + 1 < best:
            colors[v] = used
            search(colored + 1, used + 1)
            colors[v] = -1

    search(0, 0)
    return best


def clique_cover_number(g: Graph) -> int:
    return chromatic_number(complement(g))


def is_chordal(g: Graph) -> bool:
    """True iff repeatedly removing simplicial vertices empties the graph."""
    remaining = g.vertex_mask
    while remaining:
        for v in bits(remaining):
            nbrs = g.adj[v] & remaining
            if all(nbrs & ~g.adj[u] & ~(1 << u) == 0 for u in bits(nbrs)):
                remaining &= ~(1 << v)
                break
        else:
            return False
    return True


def invariant_bundle(g: Graph) -> InvariantBundle:
    return InvariantBundle(
        alpha=stability_number(g),
        m=maximal_clique_count(g),
        omega=clique_number(g),
        theta=clique_cover_number(g),
        chi=chromatic_number(g),
    )
