from itertools import combinations_with_replacement
from math import comb

import pytest

from koszulgraphs.errors import EmptyGenerators, InvalidDegree, InvalidGenerator, PatternPrecondition, TooLarge
from koszulgraphs.graphs import complete_graph, cycle_graph, path_graph
from koszulgraphs.models import LatticePointSet, PatternKind
from koszulgraphs.posets import (
    antichain_poset,
    chain_poset,
    comparability_graph,
    contains_pattern,
    enumerate_posets,
    poset_ideals,
)
from koszulgraphs.toric import (
    chain_polytope_vertices,
    elements_of_degree,
    generator_table,
    hibi_moves_connect_fibers,
    hibi_ring,
    hibi_relations,
    hilbert_function,
    is_quadratically_generated,
    order_polytope_vertices,
    relation_to_json,
    semigroup_of,
    stable_polytope_vertices,
    stable_ring,
    toric_relations_up_to,
    transfer_consistency,
    transfer_map_preserves_relations,
)


def test_stable_polytope_vertices(c4) -> None:
    assert len(stable_polytope_vertices(c4)) == 7
    k3 = stable_polytope_vertices(complete_graph(3))
    assert k3.points == ((0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0))
    assert stable_polytope_vertices(complete_graph(1)).points == ((0,), (1,))


def test_order_polytope_of_example_poset(example_poset) -> None:
    ring = hibi_ring(example_poset)
    expected = {
        (1,) + tuple(1 if i in ideal else 0 for i in range(4))
        for ideal in [(), (0,), (1,), (0, 1), (1, 3), (0, 1, 2), (0, 1, 3), (0, 1, 2, 3)]
    }
    assert len(order_polytope_vertices(example_poset)) == 8
    assert set(ring.gens) == expected
    assert ring.gens == tuple(sorted(ring.gens))


@pytest.mark.slow
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_chain_polytope_is_stable_polytope_of_comparability_graph(n) -> None:
    for p in enumerate_posets(n):
        chain = chain_polytope_vertices(p)
        assert chain == stable_polytope_vertices(comparability_graph(p))
        assert len(chain) == len(order_polytope_vertices(p))


def test_semigroup_of_validates_points() -> None:
    with pytest.raises(EmptyGenerators):
        semigroup_of(LatticePointSet(2, (), ()))
    with pytest.raises(InvalidGenerator, match="not a 0/1 vector"):
        semigroup_of(LatticePointSet(2, ((0, 2),), ((),)))
    with pytest.raises(InvalidGenerator, match="not distinct"):
        semigroup_of(LatticePointSet(1, ((1,), (1,)), ((0,), (0,))))


def test_generator_table() -> None:
    ring = stable_ring(complete_graph(1))
    assert generator_table(ring) == [
        {"index": 0, "vector": [1, 0], "subset": []},
        {"index": 1, "vector": [1, 1], "subset": [0]},
    ]


def test_elements_of_low_degree(c4) -> None:
    ring = stable_ring(c4)
    assert ring.size == 7
    assert elements_of_degree(ring, 0) == {(0, 0, 0, 0, 0)}
    assert elements_of_degree(ring, 1) == set(ring.gens)

    pair_sums = {
        tuple(a + b for a, b in zip(ring.gens[i], ring.gens[j]))
        for i, j in combinations_with_replacement(range(7), 2)
    }
    assert elements_of_degree(ring, 2) == pair_sums
    assert len(pair_sums) < 28


def test_hilbert_function() -> None:
    k1 = stable_ring(complete_graph(1))
    assert [hilbert_function(k1, d) for d in range(7)] == [1, 2, 3, 4, 5, 6, 7]

    # k[Q_{K_3}] is a polynomial ring in four variables
    k3 = stable_ring(complete_graph(3))
    assert hilbert_function(k3, 2) == comb(5, 2)
    assert hilbert_function(k3, 3) == comb(6, 3)

    with pytest.raises(TooLarge):
        hilbert_function(k3, 7)
    with pytest.raises(InvalidDegree):
        hilbert_function(k3, -1)


def test_hilbert_function_is_monotone(c4, example_poset) -> None:
    for ring in (stable_ring(c4), hibi_ring(example_poset)):
        values = [hilbert_function(ring, d) for d in range(5)]
        assert values == sorted(values)


def test_hibi_relations(example_poset) -> None:
    ring = hibi_ring(example_poset)
    relations = hibi_relations(example_poset)
    assert len(relations) == 5
    assert all(rel.balanced(ring) for rel in relations)
    assert hibi_relations(chain_poset(4)) == []
    assert relation_to_json(relations[0])["degree"] == 2


def test_toric_relations(c4, example_poset) -> None:
    assert toric_relations_up_to(stable_ring(complete_graph(4)), 4) == []

    c4_ring = stable_ring(c4)
    c4_relations = toric_relations_up_to(c4_ring, 3)
    assert any(rel.degree == 2 for rel in c4_relations)
    assert all(rel.balanced(c4_ring) for rel in c4_relations)

    ring = hibi_ring(example_poset)
    degree_two = {rel.key() for rel in toric_relations_up_to(ring, 2)}
    assert {rel.key() for rel in hibi_relations(example_poset)} <= degree_two
    assert hibi_moves_connect_fibers(example_poset)

    with pytest.raises(InvalidDegree):
        toric_relations_up_to(ring, 1)
    with pytest.raises(TooLarge):
        toric_relations_up_to(ring, 7)


def test_relations_above_degree_two_follow_from_quadrics(example_poset, c4) -> None:
    assert is_quadratically_generated(hibi_ring(example_poset), 3)
    assert is_quadratically_generated(stable_ring(c4), 3)
    relations = toric_relations_up_to(hibi_ring(example_poset), 3)
    assert all(rel.essential for rel in relations if rel.degree == 2)
    assert not any(rel.essential for rel in relations if rel.degree == 3)


@pytest.mark.slow
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_hibi_relations_generate_degree_two(n) -> None:
    for p in enumerate_posets(n):
        ring = hibi_ring(p)
        toric = {rel.key() for rel in toric_relations_up_to(ring, 2)}
        hibi = hibi_relations(p)
        assert all(rel.balanced(ring) for rel in hibi)
        assert {rel.key() for rel in hibi} <= toric
        assert hibi_moves_connect_fibers(p)
        assert len(ring.gens) == len(poset_ideals(p))


def test_transfer_consistency_for_the_paired_rings(q1, q2) -> None:
    assert transfer_consistency(q1, 3)
    assert transfer_consistency(q2, 3)
    assert transfer_consistency(chain_poset(4), 3)

    for p, g in ((q1, cycle_graph(4)), (q2, path_graph(4))):
        for d in range(4):
            assert hilbert_function(hibi_ring(p), d) == hilbert_function(stable_ring(g), d)


def test_bare_transfer_map_is_not_additive(q1) -> None:
    # abc + abd = ab + abcd, while c + d differs from ab + cd
    assert not transfer_map_preserves_relations(q1, 2)
    assert transfer_map_preserves_relations(chain_poset(3), 3)
    assert transfer_map_preserves_relations(antichain_poset(3), 3)


def test_transfer_consistency_requires_x_free(x_poset) -> None:
    with pytest.raises(PatternPrecondition):
        transfer_consistency(x_poset, 3)


@pytest.mark.slow
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_transfer_consistency_for_x_free_posets(n) -> None:
    for p in enumerate_posets(n):
        if contains_pattern(p, PatternKind.X) is None:
            assert transfer_consistency(p, 3), p
