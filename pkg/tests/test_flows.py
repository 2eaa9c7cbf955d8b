import itertools
import random
import time

import pytest

from cdcover.degeneracy import maximal_small_contraction, replay_contractions
from cdcover.errors import BudgetExceededError, PreconditionError
from cdcover.flows import (
    FourFlow,
    find_nz4f,
    flow_with_support,
    iter_nz4f,
    lift_through_circuit,
    nz4f_via_degeneracy,
    restrict_flow,
    verify_flow,
)
from cdcover.multigraph import MultiGraph, contract_edges
from cdcover.named import circuit, k4, petersen, theta
from cdcover.oracle import SearchBudget

from _instances import random_2ec_multigraph, random_even_subgraph, random_expansion_from_k1


def brute_force_has_nz4f(g):
    """Independent oracle: enumerate all Klein-group assignments directly."""
    edges = g.edge_ids
    values = [(0, 1), (1, 0), (1, 1)]
    for assignment in itertools.product(values, repeat=len(edges)):
        ok = True
        for v in g.vertex_ids:
            ax = ay = 0
            for e, val in zip(edges, assignment):
                if g.is_loop(e):
                    continue
                if v in g.endpoints(e):
                    ax ^= val[0]
                    ay ^= val[1]
            if ax or ay:
                ok = False
                break
        if ok:
            return True
    return g.num_edges == 0


def test_verify_flow_basics():
    t = theta()
    fl = FourFlow(frozenset({0, 1}), frozenset({1, 2}))
    check = verify_flow(t, fl)
    assert check.ok and check.nowhere_zero
    k = k4()
    tri = frozenset({0, 3, 1})
    check = verify_flow(k, FourFlow(tri, tri))
    assert check.ok and check.support == tri and not check.nowhere_zero
    assert not verify_flow(k, FourFlow(frozenset({0}), frozenset())).ok


def test_find_nz4f_petersen_definitive_none_fast():
    start = time.monotonic()
    assert find_nz4f(petersen()) is None
    assert time.monotonic() - start < 1.0


def test_find_nz4f_positives():
    k = k4()
    fl = find_nz4f(k)
    check = verify_flow(k, fl)
    assert check.ok and check.nowhere_zero
    c = circuit(5)
    fl = find_nz4f(c)
    assert fl.x == fl.y == c.edge_set


def test_find_nz4f_budget():
    with pytest.raises(BudgetExceededError):
        find_nz4f(petersen(), SearchBudget(max_nodes=10, exhaustive=False))


def test_find_nz4f_agrees_with_brute_force_on_small_graphs():
    rng = random.Random(13)
    checked = 0
    while checked < 30:
        n = rng.randint(2, 4)
        m = rng.randint(1, 7)
        pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(m)]
        g = MultiGraph.from_edge_list(pairs, vertices=range(n))
        expected = brute_force_has_nz4f(g)
        got = find_nz4f(g) is not None
        assert got == expected
        checked += 1


def test_flow_with_support_identity_on_empty_cycle():
    k = k4()
    fl = find_nz4f(k)
    assert flow_with_support(k, frozenset(), fl) == fl


def test_flow_with_support_theta_hand_case():
    t = theta()
    c = frozenset({0, 1})
    contracted = contract_edges(t, c).graph
    # contraction is a single vertex with a loop (edge 2)
    parent = FourFlow(frozenset({2}), frozenset({2}))
    fl = flow_with_support(t, c, parent)
    check = verify_flow(t, fl)
    assert check.ok
    assert 2 in fl.support


def test_flow_with_support_petersen_hist_complement():
    from cdcover.oracle import find_tree_cycle_decomposition
    p = petersen()
    inst = find_tree_cycle_decomposition(p, 1)
    c = inst.cycle
    contracted = contract_edges(p, c).graph
    parent = find_nz4f(contracted)
    assert parent is not None
    fl = flow_with_support(p, c, parent)
    check = verify_flow(p, fl)
    assert check.ok
    assert (p.edge_set - c) <= fl.support
    # deleting the zero set leaves a nowhere-zero flow of the reduced graph
    zeros = p.edge_set - fl.support
    reduced = p.delete_edges(zeros)
    check = verify_flow(reduced, fl)
    assert check.ok and check.nowhere_zero


def test_flow_with_support_random_property():
    rng = random.Random(17)
    done = 0
    while done < 40:
        g = random_2ec_multigraph(rng, rng.randint(3, 6))
        c = random_even_subgraph(rng, g)
        contracted = contract_edges(g, c).graph
        parent = find_nz4f(contracted)
        if parent is None:
            continue
        fl = flow_with_support(g, c, parent)
        check = verify_flow(g, fl)
        assert check.ok
        assert (g.edge_set - c) <= fl.support
        done += 1


def test_lift_loop_and_digon():
    loopy = MultiGraph.from_edge_list([(0, 0), (0, 1), (1, 0)])
    parent = FourFlow(frozenset({1, 2}), frozenset({1, 2}))
    lifted = lift_through_circuit(loopy, frozenset({0}), parent)
    assert lifted is not None
    assert 0 in lifted.x and 0 in lifted.y  # free loop gets both supports
    t = theta()
    parent = FourFlow(frozenset({2}), frozenset({2}))
    lifted = lift_through_circuit(t, frozenset({0, 1}), parent)
    check = verify_flow(t, lifted)
    assert check.ok and check.nowhere_zero


def wheel_with_forced_lift_failure():
    """4-wheel whose rim contraction admits a flow with no local rim extension:
    the spoke imbalances run through every Klein-group value."""
    pairs = [(0, 1), (1, 2), (2, 3), (3, 0),  # rim 0..3
             (0, 4), (1, 4), (2, 4), (3, 4)]  # spokes 4..7
    g = MultiGraph.from_edge_list(pairs)
    parent = FourFlow(frozenset({4, 6}), frozenset({4, 5, 6, 7}))
    return g, frozenset({0, 1, 2, 3}), parent


def test_lift_can_fail_on_a_four_circuit():
    g, rim, parent = wheel_with_forced_lift_failure()
    contracted = contract_edges(g, rim).graph
    check = verify_flow(contracted, parent)
    assert check.ok and check.nowhere_zero
    assert lift_through_circuit(g, rim, parent) is None
    # the graph still has a flow, so stage re-enumeration must rescue the lift
    seq = replay_contractions(g, [rim, frozenset({4, 5}), frozenset({6}), frozenset({7})])
    fl = nz4f_via_degeneracy(g, seq)
    check = verify_flow(g, fl)
    assert check.ok and check.nowhere_zero


def test_nz4f_via_degeneracy_k4():
    k = k4()
    seq = maximal_small_contraction(k, {0}, 4)
    assert seq.end.num_vertices == 1 and seq.end.num_edges == 0
    fl = nz4f_via_degeneracy(k, seq)
    check = verify_flow(k, fl)
    assert check.ok and check.nowhere_zero


def test_nz4f_via_degeneracy_small_circuits():
    for n in (1, 2, 3, 4):
        c = circuit(n)
        seq = maximal_small_contraction(c, {0}, 4)
        fl = nz4f_via_degeneracy(c, seq)
        assert verify_flow(c, fl).nowhere_zero


def test_nz4f_via_degeneracy_random_expansions():
    rng = random.Random(23)
    for _ in range(60):
        g, circuits = random_expansion_from_k1(rng, rng.randint(1, 6))
        seq = replay_contractions(g, circuits)
        assert seq.end.num_vertices == 1 and seq.end.num_edges == 0
        fl = nz4f_via_degeneracy(g, seq)
        check = verify_flow(g, fl)
        assert check.ok and check.nowhere_zero


def test_contraction_preserves_flows():
    rng = random.Random(29)
    done = 0
    while done < 30:
        g = random_2ec_multigraph(rng, rng.randint(3, 6))
        fl = find_nz4f(g)
        if fl is None:
            continue
        f = frozenset(e for e in g.edge_ids if rng.random() < 0.3)
        contracted = contract_edges(g, f).graph
        pushed = restrict_flow(fl, contracted.edge_set)
        assert verify_flow(contracted, pushed).ok
        done += 1


def test_iter_nz4f_yields_only_valid_flows():
    k = k4()
    flows = list(iter_nz4f(k))
    assert flows
    for fl in flows[:10]:
        check = verify_flow(k, fl)
        assert check.ok and check.nowhere_zero
