import random
from itertools import combinations

import pytest

from koszulgraphs.errors import InvalidDegree, InvalidGenerator, TooLarge
from koszulgraphs.graph_classes import is_c4_p4_free
from koszulgraphs.graphs import complete_graph, enumerate_graphs, induced_subgraph_mask, relabel
from koszulgraphs.models import KoszulWitness, PatternKind
from koszulgraphs.oracle import (
    colon_condition_direct,
    graph_is_strongly_koszul,
    heredity_check,
    intersection_generated_in_degree_two,
    is_strongly_koszul,
    verdict_to_json,
    verify_witness,
)
from koszulgraphs.posets import chain_poset, contains_pattern, enumerate_posets
from koszulgraphs.toric import hibi_ring, stable_ring


def test_free_semigroups_are_strongly_koszul() -> None:
    ring = stable_ring(complete_graph(4))
    for i, j in combinations(range(ring.size), 2):
        assert intersection_generated_in_degree_two(ring, i, j, 4) is None
    assert is_strongly_koszul(ring, 4).strongly_koszul
    assert is_strongly_koszul(hibi_ring(chain_poset(4)), 4).strongly_koszul


@pytest.mark.parametrize("name", ["c4", "p4"])
def test_c4_and_p4_fail_with_degree_three_witnesses(request, name) -> None:
    ring = stable_ring(request.getfixturevalue(name))
    verdict = is_strongly_koszul(ring, 4)
    assert not verdict.strongly_koszul
    assert verdict.witness.degree == 3
    assert verdict.witness.vector[0] == 3
    assert verify_witness(ring, verdict.witness)
    i, j = verdict.witness.pair
    assert intersection_generated_in_degree_two(ring, i, j, 4) == verdict.witness


def test_verify_witness_rejects_decomposable_elements(claw) -> None:
    ring = stable_ring(claw)
    # u_0 u_1 u_2 lies in both ideals but factors through the degree-2 element u_0 u_1
    vector = tuple(a + b + c for a, b, c in zip(ring.gens[0], ring.gens[1], ring.gens[2]))
    assert not verify_witness(ring, KoszulWitness(pair=(0, 1), vector=vector, degree=3))


def test_named_verdicts(claw, q2) -> None:
    assert is_strongly_koszul(stable_ring(claw), 4).strongly_koszul
    assert not is_strongly_koszul(hibi_ring(q2), 4).strongly_koszul


def test_hibi_ring_of_x_poset(x_poset) -> None:
    assert is_strongly_koszul(hibi_ring(x_poset), 4).strongly_koszul
    assert contains_pattern(x_poset, PatternKind.N) is None


def test_verdict_json(c4) -> None:
    data = verdict_to_json(is_strongly_koszul(stable_ring(c4), 4))
    assert data["strongly_koszul"] is False
    assert data["degree_bound"] == 4
    assert data["witness"]["degree"] == 3
    assert len(data["witness"]["vector"]) == 5

    ok = verdict_to_json(is_strongly_koszul(stable_ring(complete_graph(2)), 3))
    assert ok == {"strongly_koszul": True, "degree_bound": 3, "witness": None}


def test_oracle_argument_errors(c4) -> None:
    ring = stable_ring(c4)
    with pytest.raises(InvalidGenerator):
        intersection_generated_in_degree_two(ring, 1, 1, 4)
    with pytest.raises(InvalidGenerator):
        intersection_generated_in_degree_two(ring, 0, 7, 4)
    with pytest.raises(InvalidDegree):
        is_strongly_koszul(ring, 2)
    with pytest.raises(TooLarge):
        is_strongly_koszul(ring, 7)
    with pytest.raises(InvalidGenerator):
        colon_condition_direct(ring, [2], 3)
    with pytest.raises(InvalidGenerator):
        colon_condition_direct(ring, [2, 2], 3)


def test_colon_condition_direct_examples(c4) -> None:
    k2 = stable_ring(complete_graph(2))
    for i in range(3):
        for j in range(3):
            if i != j:
                assert colon_condition_direct(k2, [i, j], 4) is None
    assert colon_condition_direct(k2, [0, 1, 2], 4) is None

    ring = stable_ring(c4)
    witnesses = [
        colon_condition_direct(ring, [i, j], 3)
        for i, j in combinations(range(ring.size), 2)
    ]
    assert any(w is not None for w in witnesses)


@pytest.mark.slow
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_colon_condition_agrees_with_pairwise_test(n) -> None:
    for g in enumerate_graphs(n):
        ring = stable_ring(g)
        pairwise = is_strongly_koszul(ring, 4).strongly_koszul
        direct = all(
            colon_condition_direct(ring, list(seq), 4) is None
            for length in (2, 3)
            for seq in combinations(range(ring.size), length)
        )
        assert pairwise == direct, g


@pytest.mark.slow
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_strongly_koszul_iff_c4_p4_free(n) -> None:
    for g in enumerate_graphs(n, connected_only=True):
        verdict = is_strongly_koszul(stable_ring(g), 4)
        assert verdict.strongly_koszul == is_c4_p4_free(g), g
        if not verdict.strongly_koszul:
            assert verify_witness(stable_ring(g), verdict.witness)


@pytest.mark.slow
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_hibi_ring_strongly_koszul_iff_n_free(n) -> None:
    for p in enumerate_posets(n):
        verdict = is_strongly_koszul(hibi_ring(p), 4)
        assert verdict.strongly_koszul == (contains_pattern(p, PatternKind.N) is None), p


@pytest.mark.slow
def test_verdicts_ignore_labels() -> None:
    rng = random.Random(7)
    for g in enumerate_graphs(6, connected_only=True):
        perm = list(range(6))
        rng.shuffle(perm)
        h = relabel(g, perm)
        assert (
            is_strongly_koszul(stable_ring(h), 4).strongly_koszul
            == is_strongly_koszul(stable_ring(g), 4).strongly_koszul
        )


def test_heredity_examples(c4, claw) -> None:
    assert heredity_check(claw, 4)
    assert heredity_check(c4, 4)
    with pytest.raises(TooLarge):
        heredity_check(complete_graph(7), 4)


@pytest.mark.slow
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_heredity_for_trivially_perfect_graphs(n) -> None:
    for g in enumerate_graphs(n, connected_only=True):
        if is_c4_p4_free(g):
            assert graph_is_strongly_koszul(g, 4)
            assert heredity_check(g, 4)
            for mask in range(1, 1 << n):
                assert graph_is_strongly_koszul(induced_subgraph_mask(g, mask), 4)
