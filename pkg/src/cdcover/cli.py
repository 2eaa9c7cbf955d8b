"""Command-line front door.

Exit codes: 0 success, 1 failed verification verdict, 2 inconclusive within
budget, 3 invalid input, 4 internal verification failure.
"""

import argparse
import json
import sys

from . import builder, graphio, named, oracle, serialize
from .certificates import make_hist_instance, verify_cdc
from .degeneracy import classify_degeneracy
from .errors import BudgetExceededError, GraphError, InternalCheckError, PreconditionError
from .flows import find_nz4f
from .multigraph import contract_edges
from .oracle import SearchBudget

EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_INCONCLUSIVE = 2
EXIT_INVALID = 3
EXIT_INTERNAL = 4


def _budget(args):
    if args.budget_nodes is None and args.budget_seconds is None:
        return None
    return SearchBudget(max_nodes=args.budget_nodes, max_seconds=args.budget_seconds,
                        exhaustive=False)


def _emit(args, obj):
    text = serialize.dump_json(obj, getattr(args, "out", None))
    if getattr(args, "out", None) is None:
        sys.stdout.write(text)


def _parse_edges(spec):
    return frozenset(int(tok) for tok in spec.replace(",", " ").split())


def _cmd_gen(args):
    makers = {
        "petersen": lambda: (named.petersen(), None),
        "theta": lambda: (named.theta(), None),
        "k4": lambda: (named.k4(), None),
        "circuit": lambda: (named.circuit(args.n), None),
        "q-triangles": lambda: (named.q_triangles(), "decomposition"),
        "k4-of-petersen-minus-v": lambda: (named.k4_of_petersen_minus_v(), None),
    }
    if args.name not in makers:
        raise PreconditionError(f"unknown instance '{args.name}'; choices: {sorted(makers)}")
    made, extra = makers[args.name]()
    if extra == "decomposition":
        graph = made.graph
        inst = make_hist_instance(graph, made.tree, made.cycle)
    else:
        graph = made
        inst = None
    if args.format == "graph6":
        payload = graphio.write_graph6(graph) + "\n"
    else:
        payload = graphio.write_adjacency(graph)
    if args.out is None:
        sys.stdout.write(payload)
    else:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(payload)
        if inst is not None:
            serialize.dump_json(serialize.decomposition_record(inst),
                                args.out + ".decomp.json")
    return EXIT_OK


def _cmd_find_cdc(args):
    g = graphio.load_graph(args.graph)
    budget = _budget(args)
    if args.decomposition:
        record = serialize.load_json(args.decomposition)
        inst = serialize.decomposition_from_record(record, g)
        cert = builder.tree_cycle_cdc(inst, budget)
    elif args.cycle:
        cert = builder.cdc_containing_cycle(g, _parse_edges(args.cycle), budget)
    else:
        inst = oracle.find_tree_cycle_decomposition(g, args.components, budget)
        if inst is None:
            raise PreconditionError("no tree + cycle decomposition within the component bound")
        cert = builder.tree_cycle_cdc(inst, budget)
    check = verify_cdc(g, cert)
    if not check.ok:
        raise InternalCheckError(f"output failed re-verification: {check.problem}")
    _emit(args, serialize.certificate_record(cert))
    return EXIT_OK


def _cmd_verify_cdc(args):
    g = graphio.load_graph(args.graph)
    record = serialize.load_json(args.certificate)
    cert = serialize.certificate_from_record(record, g)
    check = verify_cdc(g, cert)
    _emit(args, {"ok": check.ok, "problem": check.problem})
    return EXIT_OK if check.ok else EXIT_VERDICT


def _cmd_classify(args):
    g = graphio.load_graph(args.graph)
    verdict = classify_degeneracy(g, _parse_edges(args.u))
    _emit(args, {
        "kind": verdict.kind,
        "final_u": sorted(verdict.final_u),
        "trace": serialize.sequence_record(verdict.sequence),
    })
    return EXIT_OK


def _cmd_find_nz4f(args):
    g = graphio.load_graph(args.graph)
    flow = find_nz4f(g, _budget(args))
    if flow is None:
        _emit(args, {"flow": None, "definitive": True})
    else:
        _emit(args, serialize.flow_record(g, flow))
    return EXIT_OK


def _cmd_oracle_kcdc(args):
    g = graphio.load_graph(args.graph)
    c = _parse_edges(args.cycle) if args.cycle else frozenset()
    cert = oracle.find_kcdc_containing(g, c, args.k, _budget(args))
    if cert is None:
        _emit(args, {"certificate": None, "definitive": True, "k": args.k})
    else:
        _emit(args, serialize.certificate_record(cert))
    return EXIT_OK


def _cmd_scan(args):
    budget = _budget(args)
    lines = []
    for g in graphio.iter_batch(args.batch):
        record = {"graph_sha256": serialize.graph_sha256(g),
                  "n": g.num_vertices, "m": g.num_edges}
        decompositions = 0
        hits = []
        try:
            for inst in oracle.iter_tree_cycle_decompositions(g, args.components, budget):
                decompositions += 1
                contracted = contract_edges(g, inst.cycle).graph
                if find_nz4f(contracted, budget) is None:
                    hits.append(sorted(inst.cycle))
        except BudgetExceededError as exc:
            record["verdict"] = "inconclusive"
            record["nodes"] = exc.nodes
            lines.append(record)
            continue
        record["decompositions"] = decompositions
        if decompositions == 0:
            record["verdict"] = "no-decomposition"
        elif hits:
            record["verdict"] = "hit"
            record["flowless_cycles"] = hits
        else:
            record["verdict"] = "no-hit"
        lines.append(record)
    payload = "".join(json.dumps(rec, sort_keys=True) + "\n" for rec in lines)
    if args.out is None:
        sys.stdout.write(payload)
    else:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(payload)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="cdcover",
                                     description="cycle double covers with a prescribed cycle")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, out=True):
        p.add_argument("--budget-nodes", type=int, default=None)
        p.add_argument("--budget-seconds", type=float, default=None)
        p.add_argument("--seed", type=int, default=0)
        if out:
            p.add_argument("--out", default=None)

    p = sub.add_parser("gen", help="write a named instance")
    p.add_argument("name")
    p.add_argument("--n", type=int, default=5, help="length for 'circuit'")
    p.add_argument("--format", choices=("adjacency", "graph6"), default="adjacency")
    common(p)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("find-cdc", help="construct a verified cover")
    p.add_argument("graph")
    p.add_argument("--decomposition", default=None, help="tree+cycle JSON record")
    p.add_argument("--cycle", default=None, help="edge ids of a non-separating cycle")
    p.add_argument("--auto-decompose", action="store_true")
    p.add_argument("--components", type=int, default=3)
    common(p)
    p.set_defaults(func=_cmd_find_cdc)

    p = sub.add_parser("verify-cdc", help="check a certificate against a graph")
    p.add_argument("graph")
    p.add_argument("certificate")
    common(p)
    p.set_defaults(func=_cmd_verify_cdc)

    p = sub.add_parser("classify", help="small-contraction endpoint of (graph, U)")
    p.add_argument("graph")
    p.add_argument("--u", required=True, help="tracked vertex ids")
    common(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("find-nz4f", help="exhaustive nowhere-zero flow search")
    p.add_argument("graph")
    common(p)
    p.set_defaults(func=_cmd_find_nz4f)

    p = sub.add_parser("oracle-kcdc", help="exhaustive k-member cover search")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cycle", default=None)
    common(p)
    p.set_defaults(func=_cmd_oracle_kcdc)

    p = sub.add_parser("scan-problem51",
                       help="flag decompositions whose contraction has no flow")
    p.add_argument("batch", help="graph6/sparse6 batch file")
    p.add_argument("--components", type=int, default=None)
    common(p)
    p.set_defaults(func=_cmd_scan)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        sys.stderr.write(serialize.dump_json({"error": "inconclusive", "detail": str(exc)}))
        return EXIT_INCONCLUSIVE
    except (PreconditionError, GraphError, FileNotFoundError, json.JSONDecodeError) as exc:
        sys.stderr.write(serialize.dump_json({"error": "invalid-input", "detail": str(exc)}))
        return EXIT_INVALID
    except InternalCheckError as exc:
        sys.stderr.write(serialize.dump_json({"error": "internal-verification", "detail": str(exc)}))
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
