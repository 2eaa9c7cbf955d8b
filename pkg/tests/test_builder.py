import random

import pytest

from cdcover.builder import (
    cdc_containing_cycle,
    decomposition_cdc,
    five_cdc_from_contraction_flow,
    five_cdc_with_removable_edges,
    four_cdc_containing,
    girth_cdc_recursive,
    glue_cdcs,
    petersen_base_cdc,
    reduce_to_hist_instance,
    three_cdc,
    tree_cycle_cdc,
)
from cdcover.certificates import make_certificate, make_hist_instance, verify_cdc
from cdcover.cyclespace import cycle_components, is_even_subgraph, iter_even_subgraphs
from cdcover.degeneracy import classify_degeneracy
from cdcover.errors import InternalCheckError, PreconditionError
from cdcover.flows import FourFlow, find_nz4f
from cdcover.multigraph import MultiGraph, contract_edges, edge_support, split_along_cut
from cdcover.named import circuit, expand_triangles, k4, petersen, q_triangles, theta
from cdcover.oracle import find_tree_cycle_decomposition

from _instances import (
    random_cubic_graph,
    random_even_subgraph,
    two_sided_host,
)


def test_three_cdc_theta_and_circuit():
    t = theta()
    fl = FourFlow(frozenset({0, 1}), frozenset({1, 2}))
    cert = three_cdc(t, fl)
    assert sorted(sorted(m) for m in cert.members) == [[0, 1], [0, 2], [1, 2]]
    c = circuit(4)
    cert = three_cdc(c, FourFlow(c.edge_set, c.edge_set))
    assert cert.members == (c.edge_set, c.edge_set)  # empty difference dropped


def test_three_cdc_requires_nowhere_zero():
    with pytest.raises(PreconditionError):
        three_cdc(k4(), FourFlow(frozenset({0, 3, 1}), frozenset({0, 3, 1})))


def test_four_cdc_eight_local_cases():
    # Coverage count of an edge across {c, x^c, y^c, x^y^c} by flow value and
    # membership in c: exactly two whenever the value is nonzero, four or zero
    # on a zero value, which is why nowhere-zero is required.
    for in_x in (0, 1):
        for in_y in (0, 1):
            for in_c in (0, 1):
                members = [in_c, in_x ^ in_c, in_y ^ in_c, in_x ^ in_y ^ in_c]
                count = sum(members)
                if (in_x, in_y) == (0, 0):
                    assert count in (0, 4)
                else:
                    assert count == 2


def test_four_cdc_theta_hand_case():
    t = theta()
    fl = FourFlow(frozenset({0, 1}), frozenset({1, 2}))
    cert = four_cdc_containing(t, frozenset({0, 1}), fl)
    assert cert.k == 3  # one empty member dropped
    assert cert.prescribed == frozenset({0, 1})
    assert sorted(sorted(m) for m in cert.members) == [[0, 1], [0, 2], [1, 2]]


def test_four_cdc_empty_cycle_degenerates_to_three():
    k = k4()
    fl = find_nz4f(k)
    cert = four_cdc_containing(k, frozenset(), fl)
    assert cert.prescribed is None
    assert verify_cdc(k, cert).ok


def test_four_cdc_randomized():
    rng = random.Random(43)
    done = 0
    while done < 60:
        g = random_cubic_graph(rng, rng.choice((4, 6, 8)))
        fl = find_nz4f(g)
        if fl is None:
            continue
        c = random_even_subgraph(rng, g, nonempty=True)
        cert = four_cdc_containing(g, c, fl)
        assert c in cert.members
        assert cert.k <= 4
        done += 1


def test_five_cdc_empty_zero_set_branch():
    k = k4()
    fl = find_nz4f(k)
    c = frozenset({0, 3, 1})  # triangle, non-separating
    # flow of the contraction obtained by restriction
    contracted = contract_edges(k, c).graph
    parent = FourFlow(fl.x & contracted.edge_set, fl.y & contracted.edge_set)
    if not (parent.x | parent.y) == contracted.edge_set:
        parent = find_nz4f(contracted)
    cert = five_cdc_from_contraction_flow(k, c, parent)
    assert cert.prescribed == c
    assert cert.k <= 5


def test_five_cdc_degenerate_circuit_host():
    c = circuit(5)
    cert = five_cdc_from_contraction_flow(c, c.edge_set, FourFlow(frozenset(), frozenset()))
    assert cert.members == (c.edge_set, c.edge_set)


def test_five_cdc_petersen_hist_complement():
    p = petersen()
    inst = find_tree_cycle_decomposition(p, 1)
    c = inst.cycle
    parent = find_nz4f(contract_edges(p, c).graph)
    cert = five_cdc_from_contraction_flow(p, c, parent)
    assert cert.k <= 5
    assert cert.prescribed == c


def test_five_cdc_loops_only_host():
    g = MultiGraph.from_edge_list([(0, 0), (0, 0)])
    cert = five_cdc_from_contraction_flow(g, g.edge_set, FourFlow(frozenset(), frozenset()))
    assert verify_cdc(g, cert).ok


def test_five_cdc_rejects_separating_cycle():
    p = petersen()
    two_factor = None
    for f in iter_even_subgraphs(p):
        degs = {}
        for e in f:
            for v in p.endpoints(e):
                degs[v] = degs.get(v, 0) + 1
        if len(degs) == 10 and all(d == 2 for d in degs.values()):
            two_factor = f
            break
    with pytest.raises(PreconditionError):
        five_cdc_from_contraction_flow(p, two_factor, FourFlow(frozenset(), frozenset()))


def test_five_cdc_with_removable_edges_routes():
    k = k4()
    tri = frozenset({0, 3, 1})
    # empty removable set, graph itself has a flow
    cert = five_cdc_with_removable_edges(k, tri, frozenset())
    assert cert.prescribed == tri
    with pytest.raises(PreconditionError):
        five_cdc_with_removable_edges(k, tri, frozenset({2}))  # not inside c


def test_five_cdc_removable_whole_cycle():
    # doubled 4-circuit: removing one copy leaves the other, which has a flow
    g = MultiGraph.from_edge_list(
        [(0, 1), (1, 2), (2, 3), (3, 0), (0, 1), (1, 2), (2, 3), (3, 0)])
    c = frozenset({0, 1, 2, 3})
    cert = five_cdc_with_removable_edges(g, c, c)
    assert cert.prescribed == c
    # consistent with the direct contraction route
    parent = find_nz4f(contract_edges(g, c).graph)
    direct = five_cdc_from_contraction_flow(g, c, parent)
    assert verify_cdc(g, direct).ok and verify_cdc(g, cert).ok


def test_five_cdc_removable_chordless_two_factor():
    # cubic graph with a 2-factor of two chordless circuits: prism
    prism = MultiGraph.from_edge_list(
        [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
    c1 = frozenset({0, 1, 2})
    cert = five_cdc_with_removable_edges(prism, c1, frozenset())
    assert cert.k <= 5 and cert.prescribed == c1


def test_glue_theta_forced_pairing():
    t = theta()
    split = split_along_cut(t, t.edge_set)
    s1 = three_cdc(split.side1, find_nz4f(split.side1))
    s2 = three_cdc(split.side2, find_nz4f(split.side2))
    glued = glue_cdcs(split, s1, s2)
    assert glued.k == 3
    assert sorted(sorted(m) for m in glued.members) == [[0, 1], [0, 2], [1, 2]]


def test_glue_two_triangles_across_two_cut():
    pairs = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4)]
    g = MultiGraph.from_edge_list(pairs)
    split = split_along_cut(g, {6, 7})
    s1 = three_cdc(split.side1, find_nz4f(split.side1))
    s2 = three_cdc(split.side2, find_nz4f(split.side2))
    glued = glue_cdcs(split, s1, s2)
    assert glued.host == g
    assert verify_cdc(g, glued).ok


def test_glue_with_prescribed_cycles():
    rng = random.Random(47)
    done = 0
    while done < 40:
        g, cut = two_sided_host(rng)
        split = split_along_cut(g, cut)
        fl1 = find_nz4f(split.side1)
        fl2 = find_nz4f(split.side2)
        if fl1 is None or fl2 is None:
            continue
        c1 = frozenset()
        for f in iter_even_subgraphs(split.side1):
            if f and split.hub2 not in edge_support(split.side1, f):
                c1 = f
                break
        s1 = four_cdc_containing(split.side1, c1, fl1)
        s2 = three_cdc(split.side2, fl2)
        glued = glue_cdcs(split, s1, s2)
        assert glued.host == g
        expected = c1 | frozenset()
        assert (glued.prescribed or frozenset()) == expected
        assert glued.k <= max(s1.k, s2.k) + 1
        done += 1


def test_glue_rejects_prescribed_through_hub():
    t = theta()
    split = split_along_cut(t, t.edge_set)
    fl = find_nz4f(split.side1)
    bad = four_cdc_containing(split.side1, frozenset({0, 1}), fl)
    s2 = three_cdc(split.side2, find_nz4f(split.side2))
    with pytest.raises(PreconditionError):
        glue_cdcs(split, bad, s2)


def test_petersen_base_cdc_cached():
    p = petersen()
    a = petersen_base_cdc(p)
    b = petersen_base_cdc(p)
    assert a.members == b.members
    assert a.k == 5
    with pytest.raises(PreconditionError):
        petersen_base_cdc(k4())


def test_girth_cdc_zero_big_vertices():
    p = petersen()
    # u = decycling triple; contraction of the empty cycle is p itself
    verdict = classify_degeneracy(p, {7, 8, 9})
    assert verdict.kind == "Petersen"
    cert = girth_cdc_recursive(p, frozenset(), verdict)
    assert cert.k == 5
    assert verify_cdc(p, cert).ok


def test_girth_cdc_on_q():
    q = q_triangles()
    res = contract_edges(q.graph, q.cycle)
    u = frozenset(res.vertex_map[v] for e in q.cycle for v in q.graph.endpoints(e))
    verdict = classify_degeneracy(res.graph, u)
    cert = girth_cdc_recursive(q.graph, q.cycle, verdict)
    assert cert.k <= 6
    assert cert.prescribed == q.cycle
    assert verify_cdc(q.graph, cert).ok


def test_girth_cdc_single_expanded_triangle():
    base = petersen()
    graph, info = expand_triangles(base, (7,))
    cyc = info[7].edges
    res = contract_edges(graph, cyc)
    u = frozenset(res.vertex_map[v] for e in cyc for v in graph.endpoints(e))
    # complete the tracked set with the two untouched decycling vertices
    u = u | {8, 9}
    verdict = classify_degeneracy(res.graph, u)
    assert verdict.kind == "Petersen"
    cert = girth_cdc_recursive(graph, cyc, verdict)
    assert cert.k <= 6
    assert verify_cdc(graph, cert).ok


def test_tree_cycle_cdc_petersen():
    p = petersen()
    inst = find_tree_cycle_decomposition(p, 3)
    assert len(inst.components) == 1
    cert = tree_cycle_cdc(inst)
    assert cert.k <= 5
    assert cert.prescribed == inst.cycle


def test_tree_cycle_cdc_q():
    q = q_triangles()
    inst = make_hist_instance(q.graph, q.tree, q.cycle)
    cert = tree_cycle_cdc(inst)
    assert cert.k == 6
    assert cert.prescribed == q.cycle


def test_tree_cycle_cdc_loop_hosts():
    g = MultiGraph.from_edge_list([(0, 0)])
    inst = make_hist_instance(g, frozenset(), g.edge_set)
    cert = tree_cycle_cdc(inst)
    assert cert.members == (g.edge_set, g.edge_set)
    g2 = MultiGraph.from_edge_list([(0, 0), (0, 0), (0, 0)])
    inst2 = make_hist_instance(g2, frozenset(), g2.edge_set)
    cert2 = tree_cycle_cdc(inst2)
    assert verify_cdc(g2, cert2).ok


def test_tree_cycle_cdc_exercises_splitting_away():
    # bowtie plus a pendant tree vertex: center 2 has all four cycle edges and
    # no tree edge once the decomposition names only edge 6 as the tree
    pairs = [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (1, 4)]
    g = MultiGraph.from_edge_list(pairs)
    # tree: single edge (1,4); cycle: both triangles of the bowtie... but the
    # triangles share vertex 2 which has no tree edge, so splitting away fires.
    inst = make_hist_instance(g, frozenset({6}), frozenset({0, 1, 2, 3, 4, 5}))
    assert len(inst.components) == 1  # one even component through vertex 2
    cert = tree_cycle_cdc(inst)
    assert verify_cdc(g, cert).ok
    assert cert.prescribed == frozenset({0, 1, 2, 3, 4, 5})


def test_tree_cycle_cdc_random_cubic_k2():
    rng = random.Random(53)
    done = 0
    while done < 25:
        g = random_cubic_graph(rng, rng.choice((6, 8, 10)))
        inst = find_tree_cycle_decomposition(g, 2)
        if inst is None:
            continue
        cert = tree_cycle_cdc(inst)
        assert cert.k <= 5
        assert cert.prescribed == inst.cycle
        done += 1


def test_reduce_identity_when_complement_is_tree():
    p = petersen()
    inst0 = find_tree_cycle_decomposition(p, 1)
    inst, pull = reduce_to_hist_instance(p, inst0.cycle)
    assert inst.graph == p
    cert = tree_cycle_cdc(inst)
    assert pull(cert) is cert


def test_reduce_unicyclic_leftover():
    # choose a short cycle c in petersen; complement has dimension 2: leftover
    # may hold circuits or paths depending on c; just check the contract
    p = petersen()
    c = next(f for f in iter_even_subgraphs(p) if len(f) == 5)
    from cdcover.multigraph import is_non_separating
    assert is_non_separating(p, c)
    inst, pull = reduce_to_hist_instance(p, c)
    assert is_even_subgraph(inst.graph, inst.cycle)
    assert inst.tree | inst.cycle == inst.graph.edge_set
    cert = tree_cycle_cdc(inst)
    back = pull(cert)
    assert back.host == p
    assert back.prescribed == c
    assert verify_cdc(p, back).ok


def test_reduce_roundtrip_random():
    rng = random.Random(59)
    from cdcover.oracle import enumerate_non_separating_cycles
    done = 0
    while done < 20:
        g = random_cubic_graph(rng, rng.choice((6, 8, 10)))
        cycles = [c for c in enumerate_non_separating_cycles(g) if c]
        if not cycles:
            continue
        c = rng.choice(sorted(cycles, key=lambda s: (len(s), sorted(s))))
        inst, pull = reduce_to_hist_instance(g, c)
        if len(inst.components) > 3:
            continue
        back = pull(tree_cycle_cdc(inst))
        assert back.prescribed == c
        assert verify_cdc(g, back).ok
        done += 1


def test_decomposition_cdc_k2_zero_delegates():
    p = petersen()
    inst = find_tree_cycle_decomposition(p, 1)
    circuits = cycle_components(p, inst.cycle)
    cert = decomposition_cdc(p, inst.tree, circuits, frozenset())
    assert cert.prescribed == inst.cycle


def test_decomposition_cdc_with_extra_edges():
    rng = random.Random(61)
    done = 0
    while done < 12:
        g = random_cubic_graph(rng, rng.choice((6, 8)))
        # build: spanning tree + circuits + leftover single edges
        tree = g.spanning_forest()
        leftover = g.edge_set - tree
        comps = g.connected_components(
            vertices={v for e in leftover for v in g.endpoints(e)}, edges=leftover)
        circuits = []
        extra = set()
        for comp in comps:
            comp_edges = {e for e in leftover if set(g.endpoints(e)) <= comp}
            degs = {}
            for e in comp_edges:
                for v in g.endpoints(e):
                    degs[v] = degs.get(v, 0) + 1
            if comp_edges and all(d == 2 for d in degs.values()):
                circuits.append(frozenset(comp_edges))
            else:
                extra |= comp_edges
        if not circuits or len(circuits) + len(extra) > 3:
            continue
        cert = decomposition_cdc(g, tree, circuits, frozenset(extra))
        assert cert.prescribed == frozenset().union(*circuits)
        assert verify_cdc(g, cert).ok
        done += 1


def test_decomposition_cdc_requires_a_circuit():
    p = petersen()
    inst = find_tree_cycle_decomposition(p, 1)
    with pytest.raises(PreconditionError):
        decomposition_cdc(p, inst.tree, [], inst.cycle)


def test_cdc_containing_cycle_component_bound():
    rng = random.Random(67)
    g = random_cubic_graph(rng, 8)
    from cdcover.oracle import enumerate_non_separating_cycles
    for c in enumerate_non_separating_cycles(g):
        if not c:
            continue
        inst, _ = reduce_to_hist_instance(g, c)
        if len(inst.components) <= 3:
            cert = cdc_containing_cycle(g, c)
            assert cert.prescribed == c
            break


def test_make_certificate_rejects_bad_cover():
    with pytest.raises(InternalCheckError):
        make_certificate(k4(), [k4().edge_set], None)
