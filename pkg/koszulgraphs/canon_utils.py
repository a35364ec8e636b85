import hashlib
from typing import Callable, Hashable, List, Sequence, Tuple


def refine_cells(
    n: int,
    colors: Sequence[Hashable],
    signature: Callable[[int, List[int]], Hashable],
) -> List[List[int]]:
    """
    Split 0..n-1 into an ordered partition that every isomorphism respects.

    colors are the starting invariants; signature(v, ranks) must depend only on
    v's own rank and the ranks of its related vertices. Refinement repeats
    until the number of cells stops growing. Cells come back ordered by rank,
    each sorted by vertex label.
    """
    ranks = _rank(list(colors))
    while True:
        sigs = [(ranks[v], signature(v, ranks)) for v in range(n)]
        new_ranks = _rank(sigs)
        if len(set(new_ranks)) == len(set(ranks)):
            break
        ranks = new_ranks

    cells: List[List[int]] = [[] for _ in range(max(ranks) + 1)]
    for v in range(n):
        cells[ranks[v]].append(v)
    return [c for c in cells if c]


def _rank(values: list) -> List[int]:
    order = {value: idx for idx, value in enumerate(sorted(set(values)))}
    return [order[value] for value in values]


def minimal_code(
    n: int,
    cells: List[List[int]],
    pair_code: Callable[[int, int], int],
    twin_class: Sequence[int],
) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """
    Lexicographically least code over all cell-respecting vertex orders.

    The code lists pair_code(order[i], order[k]) for k = 1..n-1 and i < k
    (column order), so every prefix of an order fixes a prefix of the code and
    branches whose partial code already exceeds the best are cut. Vertices with
    the same twin_class are interchangeable: only the smallest unused one of a
    class is tried at each position.

    Returns (code, order) where order[position] = original vertex.
    """
    slots: List[List[int]] = []
    for cell in cells:
        slots.extend([cell] * len(cell))

    best: list = [None, None]
    order: List[int] = []
    code: List[int] = []
    used = [False] * n

    def extend(k: int) -> None:
        if k == n:
            candidate = tuple(code)
            if best[0] is None or candidate < best[0]:
                best[0] = candidate
                best[1] = tuple(order)
            return

        tried_classes = set()
        for v in slots[k]:
            if used[v] or twin_class[v] in tried_classes:
                continue
            tried_classes.add(twin_class[v])

            start = len(code)
            code.extend(pair_code(order[i], v) for i in range(k))
            if best[0] is not None and tuple(code) > best[0][: len(code)]:
                del code[start:]
                continue

            used[v] = True
            order.append(v)
            extend(k + 1)
            order.pop()
            used[v] = False
            del code[start:]

    extend(0)
    return best[0], best[1]


def twin_classes(n: int, profile: Callable[[int, int], Hashable]) -> List[int]:
    """
    Group vertices whose relation to every third vertex is identical.

    profile(v, w) describes how v relates to w; u and v are twins when
    profile(u, v) == profile(v, u) and profile(u, w) == profile(v, w) for
    every w outside {u, v}. Swapping twins is an automorphism.
    """
    classes = list(range(n))
    for v in range(n):
        for u in range(v):
            if classes[u] != u or profile(u, v) != profile(v, u):
                continue
            if all(profile(u, w) == profile(v, w) for w in range(n) if w not in (u, v)):
                classes[v] = u
                break
    return classes


def build_report_code_and_name(
    kind: str,
    n: int,
    degree_bound: int,
    keys: List[str],
) -> Tuple[str, str]:
    """
    Given the ordered record keys of a report, generate a deterministic report
    code and a human-readable report name.

    Assumes keys are already in canonical order (graph6 of canonical forms).
    """
    # Canonical signature: keys in order + sizes
    canonical = "|".join(keys) + f"|n={n}|D={degree_bound}"
    digest = hashlib.sha256(canonical.encode("utf-8")).hexdigest().upper()
    short = digest[:8]

    code = f"{kind.upper()}_N{n}_D{degree_bound}_{short}"
    name = f"{kind} of connected {n}-vertex graphs, {len(keys)} items, degree bound {degree_bound}"
    return code, name
