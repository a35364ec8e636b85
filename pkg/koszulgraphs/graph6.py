"""graph6 strings (no header) for graphs with at most 62 vertices, via networkx."""

from pathlib import Path
from typing import Iterable, List

import networkx as nx

from koszulgraphs.errors import ParseError, TooLarge
from koszulgraphs.graphs import make_graph
from koszulgraphs.models import Graph

_OFFSET = 63
_SMALL_N = 62


def graph6_encode(g: Graph) -> str:
    if g.n > _SMALL_N:
        raise TooLarge(f"graph6 short form covers at most {_SMALL_N} vertices, got {g.n}.")

    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return nx.to_graph6_bytes(G, header=False).decode("ascii").strip()


def _padding_is_clear(data: str, n: int) -> bool:
    # networkx ignores the unused low bits of the last character
    pad = 6 * (len(data) - 1) - n * (n - 1) // 2
    return pad <= 0 or (ord(data[-1]) - _OFFSET) & ((1 << pad) - 1) == 0


def graph6_decode(text: str) -> Graph:
    data = text.strip()
    if not data:
        raise ParseError("Empty graph6 string.")
    if any(not _OFFSET <= ord(ch) <= 126 for ch in data):
        raise ParseError(f"graph6 string {data!r} has characters outside '?'..'~'.")
    if data[0] == "~":
        raise ParseError("graph6 strings for more than 62 vertices are not supported.")

    n = ord(data[0]) - _OFFSET
    if n == 0:
        raise ParseError("graph6 string encodes a graph without vertices.")

    try:
        G = nx.from_graph6_bytes(data.encode("ascii"))
    except (nx.NetworkXError, ValueError) as exc:
        raise ParseError(f"graph6 string {data!r}: {exc}") from exc

    if not _padding_is_clear(data, n):
        raise ParseError(f"graph6 string {data!r} has non-zero padding bits.")
    return make_graph(n, G.edges())


def read_graph6_file(path) -> List[Graph]:
    """One graph6 record per line; blank lines are skipped."""
    graphs = []
    with open(path, "r", encoding="latin-1") as f:
        for lineno, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                graphs.append(graph6_decode(line))
            except ParseError as exc:
                raise ParseError(f"{path}, line {lineno}: {exc}") from exc
    return graphs


def write_graph6_file(path, graphs: Iterable[Graph]) -> None:
    Path(path).write_text("".join(graph6_encode(g) + "\n" for g in graphs), encoding="ascii")
