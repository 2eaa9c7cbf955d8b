"""Named instance generators."""

from dataclasses import dataclass

from .errors import PreconditionError
from .multigraph import EdgeSet, MultiGraph


def petersen():
    """The Petersen graph, labeled so vertices 7, 8, 9 are a decycling set.

    Vertices 0..6 induce a spanning tree of the complement of {7, 8, 9}: a
    center 0 with three length-two arms (1,2), (3,4), (5,6).
    """
    return MultiGraph.from_edge_list([
        (0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6),
        (2, 7), (2, 8), (4, 8), (4, 9), (6, 9), (6, 7),
        (1, 9), (3, 7), (5, 8),
    ])


def theta():
    """Two vertices joined by three parallel edges."""
    return MultiGraph.from_edge_list([(0, 1), (0, 1), (0, 1)])


def k4():
    return MultiGraph.from_edge_list([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def circuit(n):
    """Circuit on n vertices; n = 1 is a loop, n = 2 a digon."""
    if n < 1:
        raise PreconditionError("circuit needs at least one vertex")
    if n == 1:
        return MultiGraph.from_edge_list([(0, 0)])
    return MultiGraph.from_edge_list([(i, (i + 1) % n) for i in range(n)])


@dataclass(frozen=True)
class TriangleExpansion:
    vertices: tuple
    edges: EdgeSet


def expand_triangles(g, vertices):
    """Replace each listed degree-3 vertex by a triangle.

    The three incident edges keep their ids and attach to the three new
    triangle vertices in sorted edge order, so contracting the triangle edges
    afterwards restores the original graph up to vertex naming.
    """
    verts = set(g.vertex_set)
    edges = {e: list(uv) for e, uv in ((e, g.endpoints(e)) for e in g.edge_ids)}
    next_v = g._next_vertex
    next_e = g._next_edge
    info = {}
    for v in sorted(frozenset(vertices)):
        if g.degree(v) != 3 or any(g.is_loop(e) for e in g.incident_edges(v)):
            raise PreconditionError(f"vertex {v} is not a loopless degree-3 vertex")
        incident = g.incident_edges(v)
        corners = (next_v, next_v + 1, next_v + 2)
        next_v += 3
        verts.remove(v)
        verts.update(corners)
        for e, corner in zip(incident, corners):
            ends = edges[e]
            ends[ends.index(v)] = corner
        tri = []
        for a, b in ((0, 1), (1, 2), (2, 0)):
            edges[next_e] = [corners[a], corners[b]]
            tri.append(next_e)
            next_e += 1
        info[v] = TriangleExpansion(corners, frozenset(tri))
    graph = MultiGraph(verts, {e: tuple(uv) for e, uv in edges.items()},
                       next_vertex=next_v, next_edge=next_e)
    return graph, info


@dataclass(frozen=True)
class TreeCycleGraph:
    graph: MultiGraph
    tree: EdgeSet
    cycle: EdgeSet


def q_triangles():
    """The Petersen graph with its decycling triple expanded to triangles.

    Comes with its canonical decomposition: the fifteen inherited edges form a
    spanning tree, the nine triangle edges a cycle with three components.
    """
    base = petersen()
    graph, info = expand_triangles(base, (7, 8, 9))
    cycle = frozenset().union(*(t.edges for t in info.values()))
    return TreeCycleGraph(graph, frozenset(base.edge_ids), cycle)


def k4_of_petersen_minus_v():
    """Four copies of the Petersen graph minus a vertex, wired like K4.

    Cubic and cyclically 3-edge-connected; each copy's three degree-2 stubs
    connect to the three other copies in sorted order.
    """
    base = petersen().delete_vertices({9})
    stubs = tuple(v for v in base.vertex_ids if base.degree(v) == 2)
    pairs = []
    for i in range(4):
        for _, u, v in base.edge_items():
            pairs.append((10 * i + u, 10 * i + v))
    assignment = {}
    for i in range(4):
        others = [j for j in range(4) if j != i]
        for stub, j in zip(stubs, others):
            assignment[(i, j)] = 10 * i + stub
    for i in range(4):
        for j in range(i + 1, 4):
            pairs.append((assignment[(i, j)], assignment[(j, i)]))
    return MultiGraph.from_edge_list(pairs)
