"""Greedy small-circuit contraction sequences and their endpoint classification.

A graph that is 2-edge-connected, acyclic off a tracked vertex set U with
|U| <= 3, and of minimum degree 3 outside U always contracts through circuits
of length at most four down to a single vertex or to the Petersen graph; the
verdict records which, together with the replayable sequence.
"""

from dataclasses import dataclass

from .cyclespace import is_circuit
from .errors import PreconditionError
from .multigraph import EdgeSet, MultiGraph, contract_edges, is_petersen

KIND_K1 = "K1"
KIND_PETERSEN = "Petersen"
KIND_OTHER = "Other"


@dataclass(frozen=True)
class Stage:
    """One contraction step: the circuit removed and the graph after it."""

    circuit: EdgeSet
    length: int
    new_vertex: int
    absorbed: frozenset
    graph: MultiGraph


@dataclass(frozen=True)
class ContractionSequence:
    """Replayable record of circuit contractions from start to end."""

    start: MultiGraph
    stages: tuple
    u_trace: tuple = ()

    @property
    def end(self):
        return self.stages[-1].graph if self.stages else self.start

    def replay(self):
        """Re-apply every stage to start; returns the final graph."""
        g = self.start
        for stage in self.stages:
            g = contract_edges(g, stage.circuit).graph
        return g


def replay_contractions(start, circuits, *, max_length=4):
    """Build a ContractionSequence by contracting the given circuits in order.

    Each entry must be a circuit of the current graph with at most max_length
    edges; violations raise PreconditionError.
    """
    g = start
    stages = []
    for raw in circuits:
        circuit = frozenset(raw)
        if len(circuit) > max_length:
            raise PreconditionError(f"circuit of length {len(circuit)} exceeds bound {max_length}")
        if not is_circuit(g, circuit):
            raise PreconditionError(f"edge set {sorted(circuit)} is not a circuit at this stage")
        result = contract_edges(g, circuit)
        verts = {w for e in circuit for w in g.endpoints(e)}
        new_vertex = result.vertex_map[min(verts)]
        stages.append(Stage(circuit, len(circuit), new_vertex,
                            result.absorbed[new_vertex], result.graph))
        g = result.graph
    return ContractionSequence(start, tuple(stages))


def find_small_circuit(g, u, k):
    """Lexicographically least circuit of length <= k meeting the vertex set u.

    Lengths are scanned in increasing order (loop, digon, triangle, 4-circuit)
    and ties break on the sorted edge id tuple, so the greedy run below is
    deterministic.
    """
    u = frozenset(u) & g.vertex_set
    if not u:
        return None
    for length in range(1, k + 1):
        best = None
        for root in sorted(u):
            if length == 1:
                for e in g.incident_edges(root):
                    if g.is_loop(e) and (best is None or (e,) < best):
                        best = (e,)
                continue
            stack = [(root, (), frozenset([root]))]
            while stack:
                v, path, seen = stack.pop()
                for e in g.incident_edges(v):
                    if e in path or g.is_loop(e):
                        continue
                    w = g.other_end(e, v)
                    if w == root:
                        # Closures shorter than the current target were already
                        # covered by an earlier length pass.
                        if len(path) + 1 == length:
                            cand = tuple(sorted(path + (e,)))
                            if best is None or cand < best:
                                best = cand
                        continue
                    if len(path) + 1 < length and w not in seen:
                        stack.append((w, path + (e,), seen | {w}))
        if best is not None:
            return frozenset(best)
    return None


@dataclass(frozen=True)
class DegeneracyVerdict:
    kind: str
    sequence: ContractionSequence
    final_u: frozenset


def maximal_small_contraction(g, u, k=4):
    """Contract small circuits meeting the tracked set until none remains.

    After contracting circuit C, the tracked set becomes the contraction vertex
    of C together with the untouched members of U.
    """
    u = frozenset(u)
    for v in u:
        if not g.has_vertex(v):
            raise PreconditionError(f"tracked vertex {v} is not in the graph")
    stages = []
    trace = [u]
    current = g
    while True:
        circuit = find_small_circuit(current, u, k)
        if circuit is None:
            break
        result = contract_edges(current, circuit)
        verts = {w for e in circuit for w in current.endpoints(e)}
        new_vertex = result.vertex_map[min(verts)]
        stages.append(Stage(circuit, len(circuit), new_vertex,
                            result.absorbed[new_vertex], result.graph))
        u = frozenset({new_vertex}) | (u - verts)
        trace.append(u)
        current = result.graph
    return ContractionSequence(g, tuple(stages), tuple(trace))


def classify_degeneracy(g, u):
    """Run the maximal small contraction and classify the endpoint.

    Preconditions: g 2-edge-connected, g - u acyclic, every vertex outside u of
    degree at least three, and |u| <= 3. Under these the endpoint is a single
    vertex or the Petersen graph; anything else is reported as Other for the
    caller to surface loudly.
    """
    u = frozenset(u)
    if len(u) > 3:
        raise PreconditionError(f"tracked set has {len(u)} vertices, at most 3 allowed")
    for v in u:
        if not g.has_vertex(v):
            raise PreconditionError(f"tracked vertex {v} is not in the graph")
    if not g.is_two_edge_connected():
        raise PreconditionError("graph is not 2-edge-connected")
    rest = g.delete_vertices(u)
    comps = rest.connected_components()
    if rest.num_edges > rest.num_vertices - len(comps):
        raise PreconditionError("graph minus the tracked set contains a circuit")
    for v in g.vertex_ids:
        if v not in u and g.degree(v) <= 2:
            raise PreconditionError(f"vertex {v} outside the tracked set has degree <= 2")
    seq = maximal_small_contraction(g, u, 4)
    end = seq.end
    if end.num_vertices == 1 and end.num_edges == 0:
        kind = KIND_K1
    elif is_petersen(end):
        kind = KIND_PETERSEN
    else:
        kind = KIND_OTHER
    return DegeneracyVerdict(kind, seq, seq.u_trace[-1])
