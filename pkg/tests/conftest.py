import networkx as nx
import pytest

from app import create_app
from koszulgraphs.graphs import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    make_graph,
    path_graph,
    star_graph,
)
from koszulgraphs.posets import make_poset


def from_networkx(G: nx.Graph):
    """Our Graph for a networkx graph, nodes relabeled 0..n-1 in node order."""
    H = nx.convert_node_labels_to_integers(G, ordering="default")
    return make_graph(H.number_of_nodes(), list(H.edges()))


def to_networkx(g) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


def atlas(n: int):
    """Every graph on n vertices from the networkx atlas (n <= 7)."""
    return [from_networkx(G) for G in nx.graph_atlas_g() if G.number_of_nodes() == n]


@pytest.fixture
def app():
    return create_app({"TESTING": True, "KOSZUL_WORKERS": 1, "KOSZUL_DEGREE_BOUND": 4})


@pytest.fixture
def runner(app):
    return app.test_cli_runner()


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def two_k2():
    return disjoint_union(path_graph(2), path_graph(2))


@pytest.fixture
def claw():
    return star_graph(3)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def example_poset():
    # 1<3, 2<3, 2<4 in 1-based labels; also the N poset
    return make_poset(4, [(0, 2), (1, 2), (1, 3)])


@pytest.fixture
def q1():
    # a, b < c, d with a=0, b=1, c=2, d=3
    return make_poset(4, [(0, 2), (0, 3), (1, 2), (1, 3)])


@pytest.fixture
def q2():
    # e < g, f < g, f < h with e=0, f=1, g=2, h=3
    return make_poset(4, [(0, 2), (1, 2), (1, 3)])


@pytest.fixture
def x_poset():
    # b, e < c < d, f with b=0, e=1, c=2, d=3, f=4
    return make_poset(5, [(0, 2), (1, 2), (2, 3), (2, 4)])


@pytest.fixture
def diamond():
    return make_poset(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


@pytest.fixture
def wedge():
    return make_poset(3, [(0, 2), (1, 2)])


@pytest.fixture
def rooted_tree_poset():
    # root 0 with children 1, 2, 3; 1 < 4 and 2 < 5
    return make_poset(6, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5)])
