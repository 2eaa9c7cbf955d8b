"""Klein-group flows as pairs of even subgraphs.

A flow assigns each edge the pair (e in x, e in y) over Z2 x Z2; conservation
at every vertex is exactly the requirement that x and y are even subgraphs,
and the flow is nowhere-zero iff x and y together cover every edge.
"""

import time
from collections import deque
from dataclasses import dataclass

from .cyclespace import (
    EdgeIndexing,
    check_edge_subset,
    cycle_components,
    even_subgraph_masks,
    is_circuit,
    is_even_subgraph,
)
from .errors import BudgetExceededError, InternalCheckError, PreconditionError, TheoryViolationError
from .multigraph import EdgeSet, MultiGraph, contract_edges

_ZERO = (0, 0)
_CANDIDATE_VALUES = ((1, 1), (1, 0), (0, 1), (0, 0))


@dataclass(frozen=True)
class FourFlow:
    """Flow value of edge e is (e in x, e in y); support is x union y."""

    x: EdgeSet
    y: EdgeSet

    @property
    def support(self):
        return self.x | self.y

    def value(self, e):
        return (1 if e in self.x else 0, 1 if e in self.y else 0)


@dataclass(frozen=True)
class FlowCheck:
    ok: bool
    support: EdgeSet
    nowhere_zero: bool
    problem: str | None = None


def verify_flow(g, fl):
    """Check conservation (evenness of both parts) and report the support."""
    x = check_edge_subset(g, fl.x)
    y = check_edge_subset(g, fl.y)
    support = x | y
    for part, name in ((x, "x"), (y, "y")):
        if not is_even_subgraph(g, part):
            return FlowCheck(False, support, False, f"part {name} is not an even subgraph")
    return FlowCheck(True, support, support == g.edge_set)


def _require_nowhere_zero(g, fl, *, what="flow"):
    check = verify_flow(g, fl)
    if not check.ok:
        raise PreconditionError(f"{what} does not conserve: {check.problem}")
    if not check.nowhere_zero:
        raise PreconditionError(f"{what} is not nowhere-zero")


def iter_nz4f(g, *, max_dimension=20):
    """All nowhere-zero flows in a fixed Gray-derived order."""
    if g.bridges():
        return
    idx = EdgeIndexing.for_graph(g)
    full = idx.full_mask
    masks = even_subgraph_masks(g, idx, max_dimension=max_dimension)
    for xm in masks:
        for ym in masks:
            if xm | ym == full:
                yield FourFlow(idx.edges_of(xm), idx.edges_of(ym))


def find_nz4f(g, budget=None):
    """First nowhere-zero flow by exhaustive pair enumeration, or None.

    None is definitive: a bridge rules every flow out immediately, and
    otherwise the full space of even-subgraph pairs was enumerated. Raises
    BudgetExceededError when a budget stops the scan early.
    """
    if g.num_edges == 0:
        return FourFlow(frozenset(), frozenset())
    if g.bridges():
        return None
    max_nodes = getattr(budget, "max_nodes", None)
    max_seconds = getattr(budget, "max_seconds", None)
    deadline = None if max_seconds is None else time.monotonic() + max_seconds
    idx = EdgeIndexing.for_graph(g)
    full = idx.full_mask
    masks = even_subgraph_masks(g, idx)
    nodes = 0
    # An empty x forces y = E, in which case (E, E) works too, so skipping
    # x = 0 loses nothing; trying y = x first makes a full even edge set come
    # back as the plain (E, E) flow.
    for xm in masks[1:]:
        for ym in [xm] + masks:
            nodes += 1
            if max_nodes is not None and nodes > max_nodes:
                raise BudgetExceededError("flow search budget exhausted", nodes=nodes)
            if deadline is not None and nodes % 4096 == 0 and time.monotonic() > deadline:
                raise BudgetExceededError("flow search timed out", nodes=nodes)
            if xm | ym == full:
                return FourFlow(idx.edges_of(xm), idx.edges_of(ym))
    return None


def flow_with_support(g, c, contracted_flow):
    """Lift a nowhere-zero flow of g contracted along c to a flow of g whose
    support contains every edge outside c.

    Surviving edge values are pulled back unchanged; each vertex imbalance is
    cancelled by toggling edges of a spanning tree of its c-component, leaves
    inward, so all corrections stay inside c.
    """
    c = check_edge_subset(g, c)
    if not c:
        _require_nowhere_zero(g, contracted_flow, what="contracted flow")
        return contracted_flow
    contracted = contract_edges(g, c)
    _require_nowhere_zero(contracted.graph, contracted_flow, what="contracted flow")

    x = set(contracted_flow.x)
    y = set(contracted_flow.y)
    for part in (x, y):
        imbalance = {}
        for v in g.vertex_ids:
            parity = 0
            for e in g.incident_edges(v):
                if e in part and not g.is_loop(e):
                    parity ^= 1
            imbalance[v] = parity
        for comp in cycle_components(g, c):
            verts = sorted({w for e in comp for w in g.endpoints(e)})
            root = verts[0]
            parent = {root: None}
            order = [root]
            queue = deque([root])
            while queue:
                v = queue.popleft()
                for e in sorted(comp):
                    if v not in g.endpoints(e) or g.is_loop(e):
                        continue
                    w = g.other_end(e, v)
                    if w not in parent:
                        parent[w] = (v, e)
                        order.append(w)
                        queue.append(w)
            for v in reversed(order):
                if parent[v] is None:
                    continue
                if imbalance[v]:
                    up, e = parent[v]
                    part.symmetric_difference_update({e})
                    imbalance[v] ^= 1
                    imbalance[up] ^= 1
        if any(imbalance[v] for v in g.vertex_ids):
            raise InternalCheckError("imbalance cancellation failed outside the prescribed cycle")
    flow = FourFlow(frozenset(x), frozenset(y))
    if not (g.edge_set - c) <= flow.support:
        raise InternalCheckError("lifted flow lost support outside the prescribed cycle")
    return flow


def _lift_candidates(g, circuit, parent_flow):
    """All nowhere-zero extensions of parent_flow across a short circuit.

    The circuit values form a one-parameter family over Z2 x Z2 fixed by the
    vertex imbalances; candidates are tried in the order (1,1), (1,0), (0,1),
    (0,0), so a free loop lands in both supports.
    """
    circuit = check_edge_subset(g, circuit)
    if not is_circuit(g, circuit):
        raise PreconditionError("not a circuit of the graph")
    if len(circuit) > 4:
        raise PreconditionError("circuit longer than four edges")
    contracted = contract_edges(g, circuit)
    _require_nowhere_zero(contracted.graph, parent_flow, what="parent flow")

    base_x = frozenset(parent_flow.x)
    base_y = frozenset(parent_flow.y)

    def imbalance(v):
        px = py = 0
        for e in g.incident_edges(v):
            if e in circuit or g.is_loop(e):
                continue
            if e in base_x:
                px ^= 1
            if e in base_y:
                py ^= 1
        return px, py

    if len(circuit) == 1:
        (loop,) = circuit
        v = g.endpoints(loop)[0]
        if imbalance(v) != _ZERO:
            raise InternalCheckError("loop vertex unbalanced under a conserving parent flow")
        for t in _CANDIDATE_VALUES:
            if t == _ZERO:
                continue
            x = base_x | ({loop} if t[0] else frozenset())
            y = base_y | ({loop} if t[1] else frozenset())
            yield FourFlow(x, y)
        return

    # Walk the circuit cyclically starting with its lowest edge id.
    start_edge = min(circuit)
    v0 = min(g.endpoints(start_edge))
    walk_edges = [start_edge]
    walk_vertices = [v0, g.other_end(start_edge, v0)]
    remaining = set(circuit) - {start_edge}
    while remaining:
        v = walk_vertices[-1]
        nxt = min(e for e in remaining if v in g.endpoints(e))
        walk_edges.append(nxt)
        walk_vertices.append(g.other_end(nxt, v))
        remaining.remove(nxt)
    if walk_vertices[-1] != v0:
        raise InternalCheckError("circuit walk did not close")

    imbalances = [imbalance(v) for v in walk_vertices[:-1]]
    total = (0, 0)
    for b in imbalances:
        total = (total[0] ^ b[0], total[1] ^ b[1])
    if total != _ZERO:
        raise InternalCheckError("circuit imbalances do not cancel")

    for t in _CANDIDATE_VALUES:
        values = [t]
        for i in range(1, len(walk_edges)):
            b = imbalances[i]
            values.append((values[-1][0] ^ b[0], values[-1][1] ^ b[1]))
        if any(val == _ZERO for val in values):
            continue
        x = set(base_x)
        y = set(base_y)
        for e, val in zip(walk_edges, values):
            if val[0]:
                x.add(e)
            if val[1]:
                y.add(e)
        yield FourFlow(frozenset(x), frozenset(y))


def lift_through_circuit(g, circuit, parent_flow):
    """First nowhere-zero local extension across a circuit of length <= 4, or None."""
    return next(_lift_candidates(g, circuit, parent_flow), None)


def nz4f_via_degeneracy(g, seq, budget=None):
    """Nowhere-zero flow of a graph that contracts to a single vertex through
    circuits of length at most four.

    Walks the contraction sequence backward with local lifts; when a local lift
    fails, alternative flows of the contracted stage are enumerated in Gray
    order and lifted instead. Restricting any flow of the larger stage yields a
    flow of the smaller one whose candidate family contains it, so this search
    is complete and must succeed on valid sequences.
    """
    if seq.start != g:
        raise PreconditionError("sequence does not start at the given graph")
    end = seq.end
    if end.num_vertices != 1 or end.num_edges != 0:
        raise PreconditionError("sequence does not contract to a single bare vertex")
    max_nodes = getattr(budget, "max_nodes", None)
    graphs = [g] + [stage.graph for stage in seq.stages]
    flow = FourFlow(frozenset(), frozenset())
    for i in range(len(seq.stages) - 1, -1, -1):
        circuit = seq.stages[i].circuit
        lifted = lift_through_circuit(graphs[i], circuit, flow)
        if lifted is None:
            nodes = 0
            for alt in iter_nz4f(graphs[i + 1]):
                nodes += 1
                if max_nodes is not None and nodes > max_nodes:
                    raise BudgetExceededError(
                        "degeneracy lift budget exhausted", nodes=nodes, stage=i)
                lifted = lift_through_circuit(graphs[i], circuit, alt)
                if lifted is not None:
                    break
            if lifted is None:
                raise TheoryViolationError(
                    f"no flow of stage {i} lifts, though the contracted stage has one")
        flow = lifted
    _require_nowhere_zero(g, flow, what="lifted flow")
    return flow


def restrict_flow(fl, edges):
    """Push a flow to a graph keeping only the given edges (e.g. a contraction)."""
    edges = frozenset(edges)
    return FourFlow(fl.x & edges, fl.y & edges)
