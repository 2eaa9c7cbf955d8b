"""Multigraphs with stable edge ids, contraction, cuts, and vertex surgeries.

Edge ids are integers that survive deletion and contraction: an operation never
renames a surviving edge, and ids freed by deleted edges are never reused within
the same graph lineage. Vertices are never deleted implicitly; deleting edges
leaves isolated vertices in place.
"""

from collections import deque
from dataclasses import dataclass

from .errors import (
    CircuitGraphError,
    GraphError,
    PreconditionError,
    UnknownEdgeError,
)

EdgeSet = frozenset[int]


class MultiGraph:
    """Finite multigraph with loops and parallel edges; immutable after construction.

    Iteration over vertices and edges is always in sorted id order, so runs are
    reproducible for a fixed construction history.
    """

    __slots__ = ("_vertices", "_endpoints", "_incidence", "_next_vertex", "_next_edge", "_canon")

    def __init__(self, vertices=(), edges=(), *, next_vertex=None, next_edge=None):
        self._vertices = frozenset(int(v) for v in vertices)
        endpoints = {}
        items = edges.items() if isinstance(edges, dict) else ((e[0], (e[1], e[2])) for e in edges)
        for eid, (u, v) in items:
            eid = int(eid)
            if eid in endpoints:
                raise GraphError(f"duplicate edge id {eid}")
            if u not in self._vertices or v not in self._vertices:
                raise GraphError(f"edge {eid} touches a vertex outside the graph")
            endpoints[eid] = (u, v)
        self._endpoints = endpoints
        incidence = {v: [] for v in self._vertices}
        for eid in sorted(endpoints):
            u, v = endpoints[eid]
            incidence[u].append(eid)
            if v != u:
                incidence[v].append(eid)
        self._incidence = {v: tuple(es) for v, es in incidence.items()}
        top_v = max(self._vertices, default=-1) + 1
        top_e = max(endpoints, default=-1) + 1
        self._next_vertex = top_v if next_vertex is None else max(int(next_vertex), top_v)
        self._next_edge = top_e if next_edge is None else max(int(next_edge), top_e)
        self._canon = None

    @classmethod
    def from_edge_list(cls, pairs, vertices=()):
        """Build from (u, v) pairs; edge ids follow list order starting at 0."""
        vs = set(vertices)
        for u, v in pairs:
            vs.add(u)
            vs.add(v)
        return cls(vs, [(i, u, v) for i, (u, v) in enumerate(pairs)])

    # ------------------------------------------------------------- queries

    @property
    def vertex_ids(self):
        return tuple(sorted(self._vertices))

    @property
    def vertex_set(self):
        return self._vertices

    @property
    def edge_ids(self):
        return tuple(sorted(self._endpoints))

    @property
    def edge_set(self):
        return frozenset(self._endpoints)

    @property
    def num_vertices(self):
        return len(self._vertices)

    @property
    def num_edges(self):
        return len(self._endpoints)

    def has_vertex(self, v):
        return v in self._vertices

    def has_edge(self, e):
        return e in self._endpoints

    def endpoints(self, e):
        try:
            return self._endpoints[e]
        except KeyError:
            raise UnknownEdgeError(f"unknown edge id {e}") from None

    def is_loop(self, e):
        u, v = self.endpoints(e)
        return u == v

    def other_end(self, e, v):
        """Vertex reached by leaving v along e; v itself for a loop."""
        u, w = self.endpoints(e)
        if v == u:
            return w
        if v == w:
            return u
        raise GraphError(f"edge {e} is not incident with vertex {v}")

    def incident_edges(self, v):
        """Edges at v in sorted id order; a loop appears once."""
        try:
            return self._incidence[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v}") from None

    def degree(self, v):
        """Vertex degree; loops count twice."""
        return sum(2 if self.is_loop(e) else 1 for e in self.incident_edges(v))

    def neighbors(self, v):
        out = set()
        for e in self.incident_edges(v):
            w = self.other_end(e, v)
            if w != v:
                out.add(w)
        return tuple(sorted(out))

    def edge_items(self):
        """Yield (edge id, u, v) in sorted edge id order."""
        for eid in sorted(self._endpoints):
            u, v = self._endpoints[eid]
            yield eid, u, v

    def is_simple(self):
        seen = set()
        for eid, u, v in self.edge_items():
            if u == v:
                return False
            key = (u, v) if u < v else (v, u)
            if key in seen:
                return False
            seen.add(key)
        return True

    # -------------------------------------------------------- connectivity

    def connected_components(self, *, vertices=None, edges=None):
        """Components as vertex sets, sorted by smallest member.

        vertices/edges restrict the subgraph considered; vertices defaults to
        all vertices, edges to all edges with both ends inside.
        """
        verts = self._vertices if vertices is None else frozenset(vertices)
        allowed = None if edges is None else frozenset(edges)
        unseen = set(verts)
        comps = []
        while unseen:
            root = min(unseen)
            comp = {root}
            unseen.remove(root)
            stack = [root]
            while stack:
                v = stack.pop()
                for e in self._incidence.get(v, ()):
                    if allowed is not None and e not in allowed:
                        continue
                    w = self.other_end(e, v)
                    if w in unseen:
                        unseen.remove(w)
                        comp.add(w)
                        stack.append(w)
            comps.append(frozenset(comp))
        return tuple(sorted(comps, key=min))

    def is_connected(self, *, vertices=None, edges=None):
        return len(self.connected_components(vertices=vertices, edges=edges)) <= 1

    def spanning_forest(self, *, edges=None):
        """Lowest-edge-id breadth-first spanning forest as an edge set."""
        allowed = None if edges is None else frozenset(edges)
        seen = set()
        forest = set()
        for root in self.vertex_ids:
            if root in seen:
                continue
            seen.add(root)
            queue = deque([root])
            while queue:
                v = queue.popleft()
                for e in self._incidence[v]:
                    if allowed is not None and e not in allowed:
                        continue
                    w = self.other_end(e, v)
                    if w not in seen:
                        seen.add(w)
                        forest.add(e)
                        queue.append(w)
        return frozenset(forest)

    def bridges(self):
        """All bridge edges (loops and parallel pairs are never bridges)."""
        disc = {}
        low = {}
        out = set()
        counter = 0
        for root in self.vertex_ids:
            if root in disc:
                continue
            disc[root] = low[root] = counter
            counter += 1
            stack = [(root, None, iter(self._incidence[root]))]
            while stack:
                v, via, it = stack[-1]
                advanced = False
                for e in it:
                    if e == via:
                        continue
                    w = self.other_end(e, v)
                    if w == v:
                        continue
                    if w not in disc:
                        disc[w] = low[w] = counter
                        counter += 1
                        stack.append((w, e, iter(self._incidence[w])))
                        advanced = True
                        break
                    low[v] = min(low[v], disc[w])
                if not advanced:
                    stack.pop()
                    if via is not None:
                        pv = stack[-1][0]
                        low[pv] = min(low[pv], low[v])
                        if low[v] > disc[pv]:
                            out.add(via)
        return frozenset(out)

    def is_two_edge_connected(self):
        return self.is_connected() and not self.bridges()

    def girth(self):
        """Length of a shortest circuit, or None for a forest."""
        if any(u == v for _, u, v in self.edge_items()):
            return 1
        seen_pairs = set()
        for _, u, v in self.edge_items():
            key = (u, v) if u < v else (v, u)
            if key in seen_pairs:
                return 2
            seen_pairs.add(key)
        adj = {v: self.neighbors(v) for v in self._vertices}
        best = None
        for root in self.vertex_ids:
            dist = {root: 0}
            parent = {root: None}
            queue = deque([root])
            while queue:
                v = queue.popleft()
                if best is not None and 2 * dist[v] >= best:
                    continue
                for w in adj[v]:
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        parent[w] = v
                        queue.append(w)
                    elif parent[v] != w:
                        cand = dist[v] + dist[w] + 1
                        if best is None or cand < best:
                            best = cand
        return best

    # ----------------------------------------------------- derived graphs

    def delete_edges(self, edges):
        """Remove the given edges; every vertex stays."""
        doomed = frozenset(edges)
        for e in doomed:
            if e not in self._endpoints:
                raise UnknownEdgeError(f"unknown edge id {e}")
        remaining = {e: uv for e, uv in self._endpoints.items() if e not in doomed}
        return MultiGraph(self._vertices, remaining,
                          next_vertex=self._next_vertex, next_edge=self._next_edge)

    def delete_vertices(self, vertices):
        doomed = frozenset(vertices)
        for v in doomed:
            if v not in self._vertices:
                raise GraphError(f"unknown vertex {v}")
        remaining = {e: (u, w) for e, (u, w) in self._endpoints.items()
                     if u not in doomed and w not in doomed}
        return MultiGraph(self._vertices - doomed, remaining,
                          next_vertex=self._next_vertex, next_edge=self._next_edge)

    def with_edge(self, u, v):
        """Add one edge with a fresh id; returns (graph, new edge id)."""
        if u not in self._vertices or v not in self._vertices:
            raise GraphError("endpoint outside the graph")
        eid = self._next_edge
        edges = dict(self._endpoints)
        edges[eid] = (u, v)
        return MultiGraph(self._vertices, edges,
                          next_vertex=self._next_vertex, next_edge=eid + 1), eid

    # ------------------------------------------------------------ identity

    def canonical_bytes(self):
        if self._canon is None:
            vs = ",".join(str(v) for v in self.vertex_ids)
            es = ";".join(f"{e}:{min(u, v)}-{max(u, v)}" for e, u, v in self.edge_items())
            self._canon = f"V[{vs}]E[{es}]".encode("ascii")
        return self._canon

    def __eq__(self, other):
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self.canonical_bytes() == other.canonical_bytes()

    def __hash__(self):
        return hash(self.canonical_bytes())

    def __repr__(self):
        return f"MultiGraph(n={self.num_vertices}, m={self.num_edges})"


# -------------------------------------------------------------- operations


@dataclass(frozen=True)
class ContractionResult:
    """Contracted graph plus vertex provenance.

    vertex_map sends every original vertex to its image; absorbed sends every
    image vertex to the set of original vertices it stands for.
    """

    graph: MultiGraph
    vertex_map: dict
    absorbed: dict


def contract_edges(g, f):
    """Contract the edges of f: each component they span becomes one vertex.

    Edges of f vanish, all other edges keep their ids (possibly becoming loops).
    Single-vertex components keep their vertex id, so contracting a loop is the
    same as deleting it; merged components get fresh ids.
    """
    f = frozenset(f)
    for e in f:
        if not g.has_edge(e):
            raise UnknownEdgeError(f"unknown edge id {e}")
    parent = {}

    def find(v):
        root = v
        while parent[root] != root:
            root = parent[root]
        while parent[v] != root:
            parent[v], v = root, parent[v]
        return root

    for e in sorted(f):
        u, v = g.endpoints(e)
        parent.setdefault(u, u)
        parent.setdefault(v, v)
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)

    groups = {}
    for v in parent:
        groups.setdefault(find(v), set()).add(v)

    vertex_map = {v: v for v in g.vertex_ids}
    next_vertex = g._next_vertex
    for members in sorted(groups.values(), key=min):
        if len(members) == 1:
            continue
        new_v = next_vertex
        next_vertex += 1
        for v in members:
            vertex_map[v] = new_v

    absorbed = {}
    for v, img in vertex_map.items():
        absorbed.setdefault(img, set()).add(v)
    absorbed = {img: frozenset(vs) for img, vs in absorbed.items()}

    edges = {e: (vertex_map[u], vertex_map[v])
             for e, (u, v) in g._endpoints.items() if e not in f}
    graph = MultiGraph(absorbed.keys(), edges,
                       next_vertex=next_vertex, next_edge=g._next_edge)
    return ContractionResult(graph, vertex_map, absorbed)


def is_non_separating(g, c):
    """True iff deleting the edges of c (keeping all vertices) stays connected."""
    c = frozenset(c)
    for e in c:
        if not g.has_edge(e):
            raise UnknownEdgeError(f"unknown edge id {e}")
    return g.is_connected(edges=g.edge_set - c)


@dataclass(frozen=True)
class CutSplit:
    """Both contractions across a small edge cut.

    side1 keeps the component holding the smallest vertex id and contracts the
    other into hub2; side2 is the mirror image with hub1. Cut edges keep their
    ids on both sides, with one endpoint moved to the hub.
    """

    side1: MultiGraph
    side2: MultiGraph
    cut_edges: EdgeSet
    hub1: int
    hub2: int


def split_along_cut(g, cut):
    """Split g along a 2- or 3-edge cut whose removal gives exactly two sides."""
    cut = frozenset(cut)
    for e in cut:
        if not g.has_edge(e):
            raise UnknownEdgeError(f"unknown edge id {e}")
    if len(cut) not in (2, 3):
        raise PreconditionError(f"cut must have 2 or 3 edges, got {len(cut)}")
    comps = g.connected_components(edges=g.edge_set - cut)
    if len(comps) != 2:
        raise PreconditionError(f"cut removal leaves {len(comps)} components, need exactly 2")
    v1, v2 = comps
    for e in cut:
        u, w = g.endpoints(e)
        if (u in v1) == (w in v1):
            raise PreconditionError(f"cut edge {e} does not cross between the two sides")
    inside1 = frozenset(e for e, (u, w) in g._endpoints.items() if u in v1 and w in v1)
    inside2 = frozenset(e for e, (u, w) in g._endpoints.items() if u in v2 and w in v2)
    r1 = contract_edges(g, inside2)
    r2 = contract_edges(g, inside1)
    hub2 = r1.vertex_map[min(v2)]
    hub1 = r2.vertex_map[min(v1)]
    return CutSplit(side1=r1.graph, side2=r2.graph, cut_edges=cut, hub1=hub1, hub2=hub2)


def reassemble_cut(split):
    """Rebuild the original graph from a CutSplit; inverse of split_along_cut."""
    s1, s2 = split.side1, split.side2
    cut = split.cut_edges
    vertices = (s1.vertex_set - {split.hub2}) | (s2.vertex_set - {split.hub1})
    edges = {}
    for e, u, v in s1.edge_items():
        if e not in cut:
            edges[e] = (u, v)
    for e, u, v in s2.edge_items():
        if e not in cut:
            edges[e] = (u, v)
    for e in sorted(cut):
        u1, w1 = s1.endpoints(e)
        a = w1 if u1 == split.hub2 else u1
        u2, w2 = s2.endpoints(e)
        b = w2 if u2 == split.hub1 else u2
        edges[e] = (a, b)
    return MultiGraph(vertices, edges,
                      next_vertex=max(s1._next_vertex, s2._next_vertex),
                      next_edge=max(s1._next_edge, s2._next_edge))


def split_away(g, v, a, b):
    """Replace the edges a and b at v by one edge joining their other endpoints.

    Returns (graph, new edge id). The degree of v drops by two.
    """
    if a == b:
        raise PreconditionError("split_away needs two distinct edges")
    for e in (a, b):
        if not g.has_edge(e):
            raise UnknownEdgeError(f"unknown edge id {e}")
        if v not in g.endpoints(e):
            raise PreconditionError(f"edge {e} is not incident with vertex {v}")
    xa = g.other_end(a, v)
    xb = g.other_end(b, v)
    return g.delete_edges({a, b}).with_edge(xa, xb)


@dataclass(frozen=True)
class SuppressionMap:
    """Re-inflates edge sets of a degree-two-suppressed graph to the original."""

    edge_paths: dict

    def expand(self, edges):
        out = set()
        for e in edges:
            out.update(self.edge_paths[e])
        return frozenset(out)


def suppress_degree_two(g):
    """Replace every maximal path of degree-2 vertices by a single edge.

    Returns (reduced graph, SuppressionMap). Raises CircuitGraphError when the
    graph is a single circuit, which has no degree->=3 anchor to suppress onto.
    """
    if not g.is_two_edge_connected():
        raise PreconditionError("suppression expects a 2-edge-connected graph")
    anchors = [v for v in g.vertex_ids if g.degree(v) != 2]
    if not anchors:
        if g.num_edges:
            raise CircuitGraphError("graph is a single circuit")
        return g, SuppressionMap({e: (e,) for e in g.edge_ids})
    if len(anchors) == g.num_vertices:
        return g, SuppressionMap({e: (e,) for e in g.edge_ids})

    visited = set()
    new_edges = {}
    paths = {}
    next_edge = g._next_edge
    anchor_set = set(anchors)
    for a in anchors:
        for e in g.incident_edges(a):
            if e in visited:
                continue
            visited.add(e)
            path = [e]
            prev = e
            cur = g.other_end(e, a)
            while cur not in anchor_set:
                inc = g.incident_edges(cur)
                nxt = inc[0] if inc[0] != prev else inc[1]
                visited.add(nxt)
                path.append(nxt)
                prev = nxt
                cur = g.other_end(nxt, cur)
            if len(path) == 1:
                new_edges[e] = g.endpoints(e)
                paths[e] = (e,)
            else:
                eid = next_edge
                next_edge += 1
                new_edges[eid] = (a, cur)
                paths[eid] = tuple(path)
    reduced = MultiGraph(anchors, new_edges,
                         next_vertex=g._next_vertex, next_edge=next_edge)
    return reduced, SuppressionMap(paths)


def is_petersen(g):
    """Recognize the Petersen graph as the unique (3,5)-cage.

    Simple, 3-regular, 10 vertices, 15 edges, girth 5 pins the graph down
    without any general isomorphism machinery.
    """
    if g.num_vertices != 10 or g.num_edges != 15:
        return False
    if not g.is_simple():
        return False
    if any(g.degree(v) != 3 for v in g.vertex_ids):
        return False
    return g.girth() == 5


def edge_support(g, edges):
    """Vertices touched by the given edges."""
    out = set()
    for e in edges:
        u, v = g.endpoints(e)
        out.add(u)
        out.add(v)
    return frozenset(out)
