"""Command-line interface.

Data goes to stdout (or --out); logs go to stderr.  Exit codes: 0 ok,
1 validation or verification failure, 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import bounds, construct, generators, netgraph, spanners, workbench
from .demand import demand_to_dict, load_demand, save_demand
from .errors import DanforgeError
from .generators import FAMILIES, GenSpec
from .netgraph import load_graph, save_graph

log = logging.getLogger("danforge")

APD_NODE_LIMIT = 2000


def _emit(obj, out: str | None) -> None:
    text = json.dumps(obj, sort_keys=True) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
        log.info("wrote %s", out)
    else:
        sys.stdout.write(text)


def _cmd_gen(args) -> int:
    spec = GenSpec(
        family=args.family,
        n=args.n,
        d=args.d,
        rows=args.rows,
        cols=args.cols,
        radius=args.radius,
        degree=args.degree,
        edges=args.edges,
        seed=args.seed,
        skew=args.skew,
    )
    demand = generators.generate(spec)
    if args.out:
        save_demand(demand, args.out, meta=spec.meta())
        log.info("wrote %s", args.out)
    else:
        sys.stdout.write(
            json.dumps(demand_to_dict(demand, spec.meta()), sort_keys=True) + "\n"
        )
    return 0


def _cmd_build(args) -> int:
    demand = load_demand(args.demand)
    if args.algo == "tree":
        root = "centroid" if args.root == "centroid" else int(args.root)
        report = construct.build_tree_dan(demand, root=root)
    elif args.algo == "sparse":
        report = construct.build_sparse_dan(demand)
    elif args.algo == "dary":
        report = construct.build_dary_dan(demand, args.delta)
    elif args.algo == "spanner2dan":
        if not args.spanner:
            raise DanforgeError("--algo spanner2dan requires --spanner FILE")
        report = construct.spanner_to_dan(demand, load_graph(args.spanner))
    else:  # ldd
        variant = "metric" if args.algo == "ldd-metric" else "subgraph"
        support = netgraph.demand_support(demand)
        result = spanners.build_ldd_spanner(support, variant)
        report = construct.spanner_to_dan(demand, result.spanner)
    if args.out:
        save_graph(report.network, args.out)
        log.info("wrote %s", args.out)
    _emit(report.to_json(), args.report)
    return 0


def _cmd_eval(args) -> int:
    demand = load_demand(args.demand)
    graph = load_graph(args.graph)
    value = netgraph.epl(demand, graph)
    max_deg, avg_deg = netgraph.degree_stats(graph)
    _emit(
        {"epl": value, "n": graph.n, "max_degree": max_deg, "avg_degree": avg_deg},
        args.out,
    )
    return 0


def _cmd_lb(args) -> int:
    demand = load_demand(args.demand)
    _emit(bounds.entropy_lower_bound(demand, args.delta).to_json(), args.out)
    return 0


def _cmd_oracle(args) -> int:
    demand = load_demand(args.demand)
    result = bounds.brute_force_bnd(demand, args.delta, n_max=args.n_max)
    _emit(
        {
            "optimum": result.optimum,
            "witness_edges": [list(e) for e in result.witness.edges()],
            "searched": result.searched,
        },
        args.out,
    )
    return 0


def _cmd_spanner(args) -> int:
    if args.algo == "hypercube":
        if not args.d:
            raise DanforgeError("--algo hypercube requires --d DIMENSION")
        result = spanners.hypercube_spanner(args.d, with_apd=args.apd)
    else:
        if not args.demand:
            raise DanforgeError(f"--algo {args.algo} requires --demand FILE")
        support = netgraph.demand_support(load_demand(args.demand))
        if args.apd and support.n > APD_NODE_LIMIT:
            raise DanforgeError(
                f"--apd limited to n <= {APD_NODE_LIMIT}, graph has n={support.n}"
            )
        if args.algo == "greedy":
            result = spanners.greedy_spanner(support, args.t, with_apd=args.apd)
        else:
            variant = "metric" if args.algo == "ldd-metric" else "subgraph"
            result = spanners.build_ldd_spanner(support, variant, with_apd=args.apd)
    if args.out:
        save_graph(result.spanner, args.out)
        log.info("wrote %s", args.out)
    _emit(result.stats_json(), None)
    return 0


def _cmd_bench(args) -> int:
    records = workbench.run_suite(args.suite, seed=args.seed)
    text = workbench.records_to_csv(records)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        log.info("wrote %s (%d records)", args.out, len(records))
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args) -> int:
    demand = load_demand(args.demand)
    graph = load_graph(args.graph)
    max_deg, _ = netgraph.degree_stats(graph)
    value = netgraph.epl(demand, graph)
    lb = bounds.entropy_lower_bound(demand, max(2, args.delta))
    ok = max_deg <= args.delta and value != netgraph.INFINITE
    _emit(
        {
            "ok": ok,
            "delta": args.delta,
            "max_degree": max_deg,
            "epl": value,
            "lower_bound": lb.lower_bound,
            "connected_demand": value != netgraph.INFINITE,
        },
        args.out,
    )
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="danforge",
        description="Design and verify bounded-degree demand-aware networks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a synthetic demand (JSON)")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--d", type=int, default=0, help="hypercube dimension")
    p.add_argument("--rows", type=int, default=0)
    p.add_argument("--cols", type=int, default=0)
    p.add_argument("--radius", type=int, default=2)
    p.add_argument("--degree", type=int, default=0)
    p.add_argument("--edges", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--skew", type=float, default=0.0)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("build", help="build a bounded-degree network")
    p.add_argument("--demand", required=True)
    p.add_argument(
        "--algo",
        required=True,
        choices=["tree", "sparse", "dary", "spanner2dan", "ldd", "ldd-metric"],
    )
    p.add_argument("--delta", type=int, default=2, help="arity for --algo dary")
    p.add_argument("--spanner", help="graph file for --algo spanner2dan")
    p.add_argument("--root", default="centroid", help="tree root: 'centroid' or id")
    p.add_argument("--out", help="write the network (graph format)")
    p.add_argument("--report", help="write the JSON report here instead of stdout")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("eval", help="expected path length of a demand on a graph")
    p.add_argument("--demand", required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("lb", help="entropy lower bound at degree delta")
    p.add_argument("--demand", required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_lb)

    p = sub.add_parser("oracle", help="exact optimum on tiny instances")
    p.add_argument("--demand", required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("spanner", help="build a spanner of the demand support")
    p.add_argument("--demand")
    p.add_argument(
        "--algo", required=True, choices=["ldd", "ldd-metric", "greedy", "hypercube"]
    )
    p.add_argument("--t", type=int, default=3, help="stretch for --algo greedy")
    p.add_argument("--d", type=int, default=0, help="dimension for --algo hypercube")
    p.add_argument("--apd", action="store_true", help="also compute all-pairs distortion")
    p.add_argument("--out", help="write the spanner (graph format)")
    p.set_defaults(func=_cmd_spanner)

    p = sub.add_parser("bench", help="run an experiment suite, emit CSV")
    p.add_argument("--suite", required=True, choices=workbench.SUITES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("verify", help="check degree bound and connectivity")
    p.add_argument("--demand", required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.INFO, format="%(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        # DanforgeError subclasses ValueError; malformed files land here too
        sys.stderr.write(
            json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n"
        )
        return 1


if __name__ == "__main__":
    sys.exit(main())
