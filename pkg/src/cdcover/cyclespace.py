"""Even subgraphs as GF(2) vectors: parity checks, bases, circuits, enumeration."""

from collections import deque
from dataclasses import dataclass

from .errors import NoCircuitError, NotEvenError, PreconditionError, UnknownEdgeError
from .multigraph import EdgeSet, MultiGraph


def check_edge_subset(g, edges):
    out = frozenset(edges)
    for e in out:
        if not g.has_edge(e):
            raise UnknownEdgeError(f"unknown edge id {e}")
    return out


def is_even_subgraph(g, f):
    """True iff every vertex has even degree in f; loops contribute two."""
    f = check_edge_subset(g, f)
    for v in g.vertex_ids:
        parity = 0
        for e in g.incident_edges(v):
            if e in f and not g.is_loop(e):
                parity ^= 1
        if parity:
            return False
    return True


def cycle_components(g, f):
    """Split an even subgraph into the edge sets of its connected components."""
    f = check_edge_subset(g, f)
    if not is_even_subgraph(g, f):
        raise NotEvenError("edge set is not an even subgraph")
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
    for e in f:
        u, _ = g.endpoints(e)
        groups.setdefault(find(u), set()).add(e)
    return [frozenset(es) for es in sorted(groups.values(), key=min)]


def is_circuit(g, f):
    """Connected and 2-regular on its support; a loop is a circuit of length one."""
    f = check_edge_subset(g, f)
    if not f:
        return False
    degree = {}
    for e in f:
        u, v = g.endpoints(e)
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
    if any(d != 2 for d in degree.values()):
        return False
    return len(cycle_components(g, f)) == 1


def circuit_through_edge(g, e, allowed):
    """Edge set of a circuit through e using only edges of allowed plus e.

    Chooses a shortest path between e's endpoints inside allowed minus e, which
    keeps downstream surgery small and is deterministic.
    """
    if not g.has_edge(e):
        raise UnknownEdgeError(f"unknown edge id {e}")
    allowed = check_edge_subset(g, allowed)
    if g.is_loop(e):
        return frozenset([e])
    usable = allowed - {e}
    u, v = g.endpoints(e)
    via = {u: None}
    queue = deque([u])
    while queue and v not in via:
        w = queue.popleft()
        for f in g.incident_edges(w):
            if f not in usable:
                continue
            x = g.other_end(f, w)
            if x not in via:
                via[x] = (w, f)
                queue.append(x)
    if v not in via:
        raise NoCircuitError(f"no circuit through edge {e} within the allowed set")
    edges = {e}
    cur = v
    while via[cur] is not None:
        prev, f = via[cur]
        edges.add(f)
        cur = prev
    return frozenset(edges)


@dataclass(frozen=True)
class CycleBasis:
    """Spanning forest plus one fundamental circuit per non-tree edge."""

    host: MultiGraph
    tree: EdgeSet
    fundamental: tuple
    nontree_edges: tuple

    @property
    def dimension(self):
        return len(self.fundamental)


def cycle_basis(g):
    """GF(2) basis of the even-subgraph space via a BFS spanning forest."""
    parent = {}
    tree = set()
    for root in g.vertex_ids:
        if root in parent:
            continue
        parent[root] = (None, None, 0)
        queue = deque([root])
        while queue:
            v = queue.popleft()
            depth = parent[v][2]
            for e in g.incident_edges(v):
                w = g.other_end(e, v)
                if w not in parent:
                    parent[w] = (v, e, depth + 1)
                    tree.add(e)
                    queue.append(w)

    def tree_path(u, v):
        edges = set()
        while parent[u][2] > parent[v][2]:
            edges.add(parent[u][1])
            u = parent[u][0]
        while parent[v][2] > parent[u][2]:
            edges.add(parent[v][1])
            v = parent[v][0]
        while u != v:
            edges.add(parent[u][1])
            edges.add(parent[v][1])
            u = parent[u][0]
            v = parent[v][0]
        return edges

    nontree = tuple(e for e in g.edge_ids if e not in tree)
    fundamental = []
    for e in nontree:
        u, v = g.endpoints(e)
        if u == v:
            fundamental.append(frozenset([e]))
        else:
            fundamental.append(frozenset(tree_path(u, v) | {e}))
    return CycleBasis(g, frozenset(tree), tuple(fundamental), nontree)


def cycle_space_dimension(g):
    return g.num_edges - g.num_vertices + len(g.connected_components())


def _gray_flip_positions(dim):
    """Bit positions to flip so successive prefixes enumerate all subsets."""
    for i in range(1, 1 << dim):
        yield (i & -i).bit_length() - 1


def iter_even_subgraphs(g, basis=None):
    """All even subgraphs, empty set first, one symmetric difference per step."""
    if basis is None:
        basis = cycle_basis(g)
    current = frozenset()
    yield current
    for pos in _gray_flip_positions(basis.dimension):
        current = current ^ basis.fundamental[pos]
        yield current


# --------------------------------------------------------------- bitmasks


@dataclass(frozen=True)
class EdgeIndexing:
    """Fixed edge order so edge sets can be handled as integer bitmasks."""

    order: tuple
    position: dict

    @classmethod
    def for_graph(cls, g):
        order = g.edge_ids
        return cls(order, {e: i for i, e in enumerate(order)})

    @property
    def full_mask(self):
        return (1 << len(self.order)) - 1

    def mask_of(self, edges):
        mask = 0
        for e in edges:
            mask |= 1 << self.position[e]
        return mask

    def edges_of(self, mask):
        out = set()
        while mask:
            low = mask & -mask
            out.add(self.order[low.bit_length() - 1])
            mask ^= low
        return frozenset(out)


def even_subgraph_masks(g, indexing, *, max_dimension=20):
    """All even subgraphs as bitmasks in Gray enumeration order (zero first)."""
    basis = cycle_basis(g)
    if basis.dimension > max_dimension:
        raise PreconditionError(
            f"cycle-space dimension {basis.dimension} above enumeration cap {max_dimension}")
    fund = [indexing.mask_of(f) for f in basis.fundamental]
    masks = [0]
    current = 0
    for pos in _gray_flip_positions(basis.dimension):
        current ^= fund[pos]
        masks.append(current)
    return masks
