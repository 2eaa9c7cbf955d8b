"""Versioned JSON records for certificates, flows, and contraction traces.

Certificates embed a hash of their host graph so verification can never be run
against the wrong graph.
"""

import hashlib
import json

from .certificates import CdcCertificate, make_hist_instance
from .degeneracy import ContractionSequence
from .errors import GraphError, PreconditionError
from .flows import FourFlow
from .multigraph import MultiGraph

CERTIFICATE_FORMAT = "cdc-certificate/1"
FLOW_FORMAT = "four-flow/1"
TRACE_FORMAT = "contraction-trace/1"
DECOMPOSITION_FORMAT = "tree-cycle-decomposition/1"


def graph_sha256(g):
    return hashlib.sha256(g.canonical_bytes()).hexdigest()


def certificate_record(cert):
    members = [sorted(m) for m in cert.members]
    prescribed = None
    if cert.prescribed is not None:
        prescribed = list(cert.members).index(cert.prescribed)
    return {
        "format": CERTIFICATE_FORMAT,
        "host_sha256": graph_sha256(cert.host),
        "k": cert.k,
        "members": members,
        "prescribed_index": prescribed,
        "trace": list(cert.trace),
    }


def certificate_from_record(record, host):
    if record.get("format") != CERTIFICATE_FORMAT:
        raise PreconditionError("not a certificate record")
    if record.get("host_sha256") != graph_sha256(host):
        raise GraphError("certificate host hash does not match the supplied graph")
    members = tuple(frozenset(m) for m in record["members"])
    idx = record.get("prescribed_index")
    prescribed = members[idx] if idx is not None else None
    return CdcCertificate(host, members, prescribed, tuple(record.get("trace", ())))


def flow_record(g, fl):
    return {
        "format": FLOW_FORMAT,
        "host_sha256": graph_sha256(g),
        "x": sorted(fl.x),
        "y": sorted(fl.y),
    }


def flow_from_record(record, host):
    if record.get("format") != FLOW_FORMAT:
        raise PreconditionError("not a flow record")
    if record.get("host_sha256") != graph_sha256(host):
        raise GraphError("flow host hash does not match the supplied graph")
    return FourFlow(frozenset(record["x"]), frozenset(record["y"]))


def sequence_record(seq):
    return {
        "format": TRACE_FORMAT,
        "stages": [
            {
                "circuit": sorted(stage.circuit),
                "absorbed": sorted(stage.absorbed),
                "length": stage.length,
                "new_vertex": stage.new_vertex,
            }
            for stage in seq.stages
        ],
        "u_trace": [sorted(u) for u in seq.u_trace],
    }


def decomposition_record(inst):
    return {
        "format": DECOMPOSITION_FORMAT,
        "host_sha256": graph_sha256(inst.graph),
        "tree": sorted(inst.tree),
        "cycle": sorted(inst.cycle),
        "components": [sorted(c) for c in inst.components],
    }


def decomposition_from_record(record, host):
    if record.get("format") != DECOMPOSITION_FORMAT:
        raise PreconditionError("not a decomposition record")
    if record.get("host_sha256") != graph_sha256(host):
        raise GraphError("decomposition host hash does not match the supplied graph")
    return make_hist_instance(host, frozenset(record["tree"]), frozenset(record["cycle"]))


def dump_json(obj, path=None):
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if path is None:
        return text
    with open(path, "w", encoding="ascii") as fh:
        fh.write(text)
    return text


def load_json(path):
    with open(path, "r", encoding="ascii") as fh:
        return json.load(fh)
