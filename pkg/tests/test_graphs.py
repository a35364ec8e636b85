import json
import random

import networkx as nx
import pytest

from conftest import atlas, to_networkx
from koszulgraphs.errors import EmptySubset, InvalidVertex, ParseError, SelfLoop, TooLarge
from koszulgraphs.graphs import (
    add_isolated_vertex,
    canonical_form,
    canonical_graph,
    complement,
    complete_graph,
    complete_multipartite,
    components,
    cycle_graph,
    empty_graph,
    enumerate_graphs,
    graph_from_json,
    graph_to_json,
    induced_subgraph,
    is_connected,
    make_graph,
    path_graph,
    relabel,
    star_graph,
    suspension,
)


def test_make_graph_collapses_repeated_edges() -> None:
    g = make_graph(3, [(0, 1), (1, 0), (1, 2)])
    assert g.edges == ((0, 1), (1, 2))
    assert g.degree(1) == 2


def test_make_graph_rejects_bad_input() -> None:
    with pytest.raises(InvalidVertex):
        make_graph(3, [(0, 3)])
    with pytest.raises(SelfLoop):
        make_graph(3, [(1, 1)])
    with pytest.raises(InvalidVertex):
        make_graph(0, [])


def test_induced_subgraph_relabels_by_original_order() -> None:
    g = cycle_graph(5)
    h = induced_subgraph(g, [4, 0, 2])
    # 4-0 stays an edge; it becomes 0-2 after relabeling 0,2,4 -> 0,1,2
    assert h.n == 3
    assert h.edges == ((0, 2),)
    with pytest.raises(EmptySubset):
        induced_subgraph(g, [])
    with pytest.raises(InvalidVertex):
        induced_subgraph(g, [7])


def test_complement_of_c5_is_c5() -> None:
    assert canonical_form(complement(cycle_graph(5))) == canonical_form(cycle_graph(5))
    assert complement(complete_graph(4)).edge_count == 0


@pytest.mark.slow
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_complement_is_an_involution_and_commutes_with_restriction(n) -> None:
    for g in atlas(n):
        assert complement(complement(g)) == g
        for mask in range(1, 1 << n):
            chosen = [v for v in range(n) if mask >> v & 1]
            assert complement(induced_subgraph(g, chosen)) == induced_subgraph(complement(g), chosen)


def test_components_and_connectivity() -> None:
    g = make_graph(5, [(0, 1), (2, 3)])
    assert components(g) == [0b00011, 0b01100, 0b10000]
    assert not is_connected(g)
    assert is_connected(path_graph(5))


def test_named_constructions() -> None:
    assert star_graph(3).degree(0) == 3
    assert complete_multipartite([2, 2, 2]).edge_count == 12
    assert canonical_form(suspension(empty_graph(3))) == canonical_form(star_graph(3))
    assert add_isolated_vertex(path_graph(2)).n == 3
    assert empty_graph(4).edge_count == 0


def test_canonical_form_separates_c4_from_p4() -> None:
    assert canonical_form(cycle_graph(4)) != canonical_form(path_graph(4))
    assert canonical_form(path_graph(4)) == canonical_form(make_graph(4, [(2, 0), (0, 3), (3, 1)]))


def test_canonical_form_rejects_large_graphs() -> None:
    with pytest.raises(TooLarge):
        canonical_form(empty_graph(11))


@pytest.mark.slow
def test_canonical_form_is_relabeling_invariant() -> None:
    rng = random.Random(20241)
    for g in enumerate_graphs(6):
        perm = list(range(6))
        rng.shuffle(perm)
        h = relabel(g, perm)
        assert canonical_form(h) == canonical_form(g)
        assert canonical_graph(h) == canonical_graph(g)


@pytest.mark.parametrize(
    "n, total, connected",
    [(1, 1, 1), (2, 2, 1), (3, 4, 2), (4, 11, 6), (5, 34, 21)],
)
def test_enumeration_counts(n, total, connected) -> None:
    assert len(enumerate_graphs(n)) == total
    assert len(enumerate_graphs(n, connected_only=True)) == connected


@pytest.mark.slow
def test_six_vertex_enumeration() -> None:
    assert len(enumerate_graphs(6)) == 156
    assert len(enumerate_graphs(6, connected_only=True)) == 112


@pytest.mark.slow
@pytest.mark.parametrize("n", [4, 5, 6])
def test_enumeration_matches_networkx_atlas(n) -> None:
    ours = enumerate_graphs(n)
    theirs = atlas(n)
    assert len(ours) == len(theirs)
    assert {canonical_form(g) for g in ours} == {canonical_form(g) for g in theirs}
    assert sum(is_connected(g) for g in ours) == sum(nx.is_connected(to_networkx(g)) for g in theirs)


def test_enumeration_bounds() -> None:
    with pytest.raises(TooLarge):
        enumerate_graphs(8)
    with pytest.raises(InvalidVertex):
        enumerate_graphs(0)


def test_graph_json_round_trip_and_errors() -> None:
    g = cycle_graph(5)
    data = json.loads(json.dumps(graph_to_json(g)))
    assert data == {"n": 5, "edges": [[0, 1], [1, 2], [2, 3], [0, 4], [3, 4]]}
    assert graph_from_json(data) == g

    with pytest.raises(ParseError):
        graph_from_json([1, 2])
    with pytest.raises(ParseError, match="'n' must be an integer"):
        graph_from_json({"n": "five", "edges": []})
    with pytest.raises(SelfLoop):
        graph_from_json({"n": 2, "edges": [[1, 1]]})
