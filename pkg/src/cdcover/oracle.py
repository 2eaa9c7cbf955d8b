"""Exhaustive ground-truth searches over the cycle space.

Every negative returned here is definitive: the search either completed a full
enumeration or raised BudgetExceededError. Inconclusive is never reported as
a negative.
"""

import time
from dataclasses import dataclass

from .certificates import HistInstance, make_certificate, make_hist_instance
from .cyclespace import (
    EdgeIndexing,
    check_edge_subset,
    cycle_basis,
    cycle_space_dimension,
    even_subgraph_masks,
    is_even_subgraph,
    iter_even_subgraphs,
)
from .errors import BudgetExceededError, PreconditionError
from .multigraph import EdgeSet, MultiGraph


@dataclass(frozen=True)
class SearchBudget:
    """Resource caps for a search.

    exhaustive documents the contract that a None result always means the full
    space was enumerated; hitting a cap raises BudgetExceededError instead of
    returning an unsound negative.
    """

    max_nodes: int | None = None
    max_seconds: float | None = None
    exhaustive: bool = True


class _Meter:
    __slots__ = ("nodes", "max_nodes", "deadline", "label")

    def __init__(self, budget, label):
        self.nodes = 0
        self.max_nodes = getattr(budget, "max_nodes", None)
        seconds = getattr(budget, "max_seconds", None)
        self.deadline = None if seconds is None else time.monotonic() + seconds
        self.label = label

    def tick(self):
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExceededError(f"{self.label}: node budget exhausted", nodes=self.nodes)
        if self.deadline is not None and self.nodes % 2048 == 0:
            if time.monotonic() > self.deadline:
                raise BudgetExceededError(f"{self.label}: time budget exhausted", nodes=self.nodes)


def find_kcdc_containing(g, c, k, budget=None):
    """Backtracking search for a cycle double cover of at most k members
    containing the cycle c; None only after full enumeration.

    Members are drawn from the complete list of nonempty even subgraphs; the
    lowest-indexed edge still lacking coverage drives branching, and members
    are chosen with nondecreasing indices so each multiset is visited once.
    """
    c = check_edge_subset(g, c)
    if c and not is_even_subgraph(g, c):
        raise PreconditionError("prescribed cycle is not an even subgraph")
    if k < 0 or (c and k < 1):
        return None
    if g.num_edges == 0:
        return make_certificate(g, [], None, ("exhaustive cover search",))

    meter = _Meter(budget, "k-CDC search")
    idx = EdgeIndexing.for_graph(g)
    m = g.num_edges
    candidates = sorted(set(even_subgraph_masks(g, idx)) - {0})
    by_bit = {b: tuple((i, msk) for i, msk in enumerate(candidates) if msk >> b & 1)
              for b in range(m)}

    cmask = idx.mask_of(c)
    need_two = idx.full_mask & ~cmask
    need_one = cmask
    slots = k - (1 if c else 0)
    chosen = []

    # The lowest uncovered edge drives branching; the members chosen for it are
    # taken with nondecreasing indices (they are consecutive choices, since the
    # pivot stays lowest until fully covered), so every multiset of members is
    # visited exactly once.
    def search(min_index, last_pivot, r1, r2, left):
        meter.tick()
        if not r1 and not r2:
            return True
        if left == 0 or (r2 and left < 2):
            return False
        remaining = r1 | r2
        pivot = (remaining & -remaining).bit_length() - 1
        floor = min_index if pivot == last_pivot else 0
        for i, mask in by_bit[pivot]:
            if i < floor or mask & ~remaining:
                continue
            chosen.append(mask)
            if search(i, pivot, (r1 & ~mask) | (r2 & mask), r2 & ~mask, left - 1):
                return True
            chosen.pop()
        return False

    if not search(0, None, need_one, need_two, slots):
        return None
    members = ([c] if c else []) + [idx.edges_of(msk) for msk in chosen]
    return make_certificate(g, members, c or None, ("exhaustive cover search",))


def iter_tree_cycle_decompositions(g, max_components=None, budget=None):
    """All decompositions of g into a spanning tree and a 2-regular cycle.

    Yields HistInstance objects in the Gray enumeration order of the cycle
    part.
    """
    if not g.is_connected():
        raise PreconditionError("graph is not connected")
    meter = _Meter(budget, "decomposition search")
    n, m = g.num_vertices, g.num_edges
    for f in iter_even_subgraphs(g):
        meter.tick()
        if m - len(f) != n - 1:
            continue
        if f:
            degree = {}
            for e in f:
                u, v = g.endpoints(e)
                degree[u] = degree.get(u, 0) + 1
                degree[v] = degree.get(v, 0) + 1
            if any(d != 2 for d in degree.values()):
                continue
            if max_components is not None:
                comps = g.connected_components(
                    vertices=set(degree), edges=f)
                if len(comps) > max_components:
                    continue
        if not g.is_connected(edges=g.edge_set - f):
            continue
        yield make_hist_instance(g, g.edge_set - f, f)


def find_tree_cycle_decomposition(g, max_components=3, budget=None):
    """First spanning tree + cycle decomposition within the component bound."""
    return next(iter_tree_cycle_decompositions(g, max_components, budget), None)


def enumerate_non_separating_cycles(g, max_dimension=20):
    """Every even subgraph whose deletion keeps the graph connected."""
    if cycle_space_dimension(g) > max_dimension:
        raise PreconditionError(
            f"cycle-space dimension above enumeration cap {max_dimension}")
    all_edges = g.edge_set
    for f in iter_even_subgraphs(g):
        if g.is_connected(edges=all_edges - f):
            yield f
