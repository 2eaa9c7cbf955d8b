import random

import pytest

from cdcover.degeneracy import (
    KIND_K1,
    KIND_PETERSEN,
    classify_degeneracy,
    find_small_circuit,
    maximal_small_contraction,
    replay_contractions,
)
from cdcover.errors import PreconditionError
from cdcover.multigraph import MultiGraph, contract_edges, is_petersen
from cdcover.named import k4, petersen, q_triangles

from _instances import random_classify_instance


def test_find_small_circuit_prefers_short_and_low_ids():
    g = MultiGraph.from_edge_list([(0, 0), (0, 1), (0, 1), (1, 2), (2, 0)])
    assert find_small_circuit(g, {0}, 4) == frozenset({0})  # loop first
    g2 = g.delete_edges({0})
    assert find_small_circuit(g2, {0}, 4) == frozenset({1, 2})  # digon next
    g3 = g2.delete_edges({1})
    assert find_small_circuit(g3, {0}, 4) == frozenset({2, 3, 4})
    assert find_small_circuit(g3, set(), 4) is None


def test_small_circuit_must_meet_tracked_set():
    pairs = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)]
    g = MultiGraph.from_edge_list(pairs)
    assert find_small_circuit(g, {4}, 4) == frozenset({3, 4, 5})
    assert find_small_circuit(g, {6}, 4) is None if not g.has_vertex(6) else True


def test_k4_contracts_to_single_vertex():
    seq = maximal_small_contraction(k4(), {0}, 4)
    assert seq.end.num_vertices == 1 and seq.end.num_edges == 0
    assert [s.length for s in seq.stages] == [3, 2, 1]
    assert seq.replay() == seq.end


def test_contracted_q_stops_at_petersen_with_zero_stages():
    q = q_triangles()
    res = contract_edges(q.graph, q.cycle)
    u = frozenset(res.vertex_map[v] for e in q.cycle for v in q.graph.endpoints(e))
    assert len(u) == 3
    seq = maximal_small_contraction(res.graph, u, 4)
    assert not seq.stages
    assert is_petersen(seq.end)


def test_empty_tracked_set_contracts_nothing():
    seq = maximal_small_contraction(k4(), set(), 4)
    assert not seq.stages
    assert seq.end == k4()


def test_u_trace_sizes_non_increasing():
    rng = random.Random(31)
    for _ in range(30):
        g, u = random_classify_instance(rng, rng.randint(1, 3))
        seq = maximal_small_contraction(g, u, 4)
        sizes = [len(s) for s in seq.u_trace]
        assert all(a >= b for a, b in zip(sizes, sizes[1:]))


def test_classify_preconditions():
    q = q_triangles()
    with pytest.raises(PreconditionError):
        classify_degeneracy(q.graph, set(q.graph.vertex_ids[:4]))  # |u| > 3
    p = petersen()
    with pytest.raises(PreconditionError):
        classify_degeneracy(p, {0})  # p minus one vertex still has circuits
    path = MultiGraph.from_edge_list([(0, 1), (1, 2)])
    with pytest.raises(PreconditionError):
        classify_degeneracy(path, {0})  # not 2-edge-connected


def test_classify_verdicts():
    rng = random.Random(37)
    for u_count in (1, 2, 3):
        for _ in range(25):
            g, u = random_classify_instance(rng, u_count)
            verdict = classify_degeneracy(g, u)
            assert verdict.kind in (KIND_K1, KIND_PETERSEN)
            if u_count == 1:
                assert all(s.length <= 2 for s in verdict.sequence.stages)


def test_classify_contracted_q_is_petersen():
    q = q_triangles()
    res = contract_edges(q.graph, q.cycle)
    u = frozenset(res.vertex_map[v] for e in q.cycle for v in q.graph.endpoints(e))
    verdict = classify_degeneracy(res.graph, u)
    assert verdict.kind == KIND_PETERSEN
    assert verdict.final_u == u


def test_replay_soundness():
    rng = random.Random(41)
    for _ in range(25):
        g, u = random_classify_instance(rng, rng.randint(1, 3))
        seq = maximal_small_contraction(g, u, 4)
        assert seq.replay() == seq.end
        # the recorded circuits replay independently
        again = replay_contractions(g, [s.circuit for s in seq.stages])
        assert again.end == seq.end


def test_replay_rejects_non_circuits():
    with pytest.raises(PreconditionError):
        replay_contractions(k4(), [frozenset({0, 1})])  # two edges sharing one vertex
    with pytest.raises(PreconditionError):
        replay_contractions(petersen(), [frozenset({0, 1, 2, 3, 4, 12})], max_length=4)
