"""Cycle-double-cover certificates and their unconditional verifier.

Every construction in this package re-verifies its output through
make_certificate before returning it; a certificate object therefore always
passed the exactly-twice check on its host at creation time.
"""

from dataclasses import dataclass

from .cyclespace import cycle_components, is_even_subgraph
from .errors import InternalCheckError, PreconditionError
from .multigraph import EdgeSet, MultiGraph


@dataclass(frozen=True)
class CdcCertificate:
    """Multiset of cycles covering every host edge exactly twice.

    members may repeat (a bare circuit is covered by the same cycle twice);
    prescribed, when present, is one of the members; trace carries free-form
    provenance lines naming the constructions involved.
    """

    host: MultiGraph
    members: tuple
    prescribed: EdgeSet | None
    trace: tuple

    @property
    def k(self):
        return len(self.members)


@dataclass(frozen=True)
class CdcCheck:
    ok: bool
    problem: str | None = None


def _check_members(g, members, prescribed):
    counts = {e: 0 for e in g.edge_ids}
    for i, m in enumerate(members):
        for e in m:
            if e not in counts:
                return CdcCheck(False, f"member {i} uses unknown edge {e}")
        if not is_even_subgraph(g, m):
            return CdcCheck(False, f"member {i} is not an even subgraph")
        for e in m:
            counts[e] += 1
    for e, n in counts.items():
        if n != 2:
            return CdcCheck(False, f"edge {e} is covered {n} times, expected 2")
    if prescribed:
        if frozenset(prescribed) not in members:
            return CdcCheck(False, "prescribed cycle is not a member")
    return CdcCheck(True)


def verify_cdc(g, cert):
    """Check evenness of every member and the exactly-twice cover of g."""
    if cert.host != g:
        return CdcCheck(False, "certificate is bound to a different graph")
    return _check_members(g, cert.members, cert.prescribed)


def make_certificate(host, members, prescribed=None, trace=()):
    """Normalize, verify, and freeze a certificate; raises on any violation.

    Empty members are dropped, the rest are sorted for reproducible output, and
    an empty prescribed cycle is recorded as absent.
    """
    clean = sorted((frozenset(m) for m in members if m), key=lambda m: (len(m), sorted(m)))
    presc = frozenset(prescribed) if prescribed else None
    cert = CdcCertificate(host, tuple(clean), presc, tuple(trace))
    check = verify_cdc(host, cert)
    if not check.ok:
        raise InternalCheckError(f"constructed cover failed verification: {check.problem}")
    return cert


@dataclass(frozen=True)
class HistInstance:
    """Decomposition of a graph into a tree and a cycle.

    The pipeline normalizes instances until the tree spans every vertex and the
    cycle is 2-regular on its support; the constructor accepts the general form
    (tree not necessarily spanning, cycle components closed trails) that the
    preprocessing steps reduce.
    """

    graph: MultiGraph
    tree: EdgeSet
    cycle: EdgeSet
    components: tuple


def make_hist_instance(graph, tree, cycle):
    tree = frozenset(tree)
    cycle = frozenset(cycle)
    if tree & cycle:
        raise PreconditionError("tree and cycle share edges")
    if tree | cycle != graph.edge_set:
        raise PreconditionError("tree and cycle do not cover every edge")
    tree_comps = graph.connected_components(
        vertices={w for e in tree for w in graph.endpoints(e)}, edges=tree)
    if len(tree_comps) > 1:
        raise PreconditionError("tree part is disconnected")
    if tree_comps and len(tree) != len(tree_comps[0]) - 1:
        raise PreconditionError("tree part contains a circuit")
    if not is_even_subgraph(graph, cycle):
        raise PreconditionError("cycle part is not an even subgraph")
    components = tuple(cycle_components(graph, cycle))
    return HistInstance(graph, tree, cycle, components)
