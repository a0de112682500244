"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 parse
error, 4 enumeration budget exceeded, 5 oracle mismatch.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from . import kernels, oracle
from .budget import CycleBudget
from .directed_kgonal import (ck_components, dk_arc_classes, feedback_network,
                              k_transitive_arcs, mutual_tk_classes,
                              remove_transitive_path, sk_components,
                              transitive_support_networks)
from .errors import (BudgetExceededError, CycleconError,
                     GraphConstructionError, OracleGuardError,
                     PajekParseError, PathRemovalError)
from .generators import random_digraph, random_graph
from .graphs import DirectedGraph, UndirectedGraph, reachable_set
from .kgonal import everett_decomposition, kgonal_network, kk_components, lk_edge_classes
from .pajek import read_network, write_network, write_partition
from .triangular import (directed_triangle_networks, k3_components,
                         l3_edge_classes, triangular_network)

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_BUDGET = 4
EXIT_MISMATCH = 5


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-cycle-budget", type=int, default=None,
                        help="abort enumeration after this many cycles "
                             "(default: CYCLECON_BUDGET or 2000000)")
    common.add_argument("--strict", action="store_true",
                        help="reject loops/duplicate links instead of dropping them")
    common.add_argument("--allow-large-k", action="store_true",
                        help="lift the default cap on cycle length (8)")

    parser = argparse.ArgumentParser(
        prog="cyclecon",
        description="Short-cycle connectivity decompositions of networks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("components", parents=[common],
                       help="equivalence classes of a short-cycle relation")
    p.add_argument("--relation", required=True,
                   choices=["k3", "kk", "lk", "ck", "dk", "sk", "tk-mutual"])
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--input", required=True)
    p.add_argument("--output", help="write the partition as a .clu file")
    p.add_argument("--report", choices=["json"],
                   help="print a machine-readable summary to stdout")

    p = sub.add_parser("network", parents=[common],
                       help="derived weighted subnetwork as a .net file")
    p.add_argument("--kind", required=True,
                   choices=["triangular", "kgonal", "cyc", "tra", "in", "out",
                            "feedback", "transitive", "support"])
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)

    p = sub.add_parser("decompose", parents=[common],
                       help="Everett decomposition: k-gonal components plus bridges")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--input", required=True)
    p.add_argument("--output", help="write the combined partition as a .clu file")

    p = sub.add_parser("transitivity", parents=[common],
                       help="k-transitive arcs and safe transitive-path removal")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--input", required=True)
    p.add_argument("--list-transitive-arcs", action="store_true")
    p.add_argument("--remove-path",
                   help="comma-separated 1-based vertex ids of a directed path")
    p.add_argument("--verify-reachability", action="store_true",
                   help="recheck all reachable sets after removal")
    p.add_argument("--output", help="write the reduced network as a .net file")

    p = sub.add_parser("oracle-check", parents=[common],
                       help="run a relation against its brute-force oracle")
    p.add_argument("--relation", required=True,
                   choices=["k3", "kk", "lk", "ck", "dk", "sk"])
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--input", help="network file; omit to use a random instance")
    p.add_argument("--n", type=int, default=40, help="random instance size")
    p.add_argument("--m", type=int, help="random instance links (default 2n)")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("bench", parents=[common],
                       help="timing CSV for the linear-in-m triangle sweeps")
    p.add_argument("--family", choices=["random"], default="random")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--backend", choices=["numba", "python", "both"],
                   default=None,
                   help="kernel backend to time (default: both if available)")
    return parser


def _load(args, want: str):
    """Read the input network, checking the relation's directedness."""
    graph = read_network(args.input, strict=args.strict)
    if want == "undirected" and not isinstance(graph, UndirectedGraph):
        raise UsageError("this relation needs an undirected network")
    if want == "directed" and not isinstance(graph, DirectedGraph):
        raise UsageError("this relation needs a directed network (*Arcs)")
    return graph


def _budget(args) -> CycleBudget:
    return CycleBudget(args.max_cycle_budget)


def cmd_components(args) -> int:
    relation = args.relation
    k = args.k
    start = time.perf_counter()
    if relation in ("k3", "kk", "lk"):
        graph = _load(args, "undirected")
        if relation == "k3":
            part = k3_components(graph)
        elif relation == "kk":
            part = kk_components(graph, k, budget=_budget(args),
                                 allow_large_k=args.allow_large_k)
        else:
            part = (l3_edge_classes(graph) if k == 3 else
                    lk_edge_classes(graph, k, budget=_budget(args),
                                    allow_large_k=args.allow_large_k))
    else:
        graph = _load(args, "directed")
        if relation == "ck":
            part = ck_components(graph, k, budget=_budget(args),
                                 allow_large_k=args.allow_large_k)
        elif relation == "dk":
            part = dk_arc_classes(graph, k, budget=_budget(args),
                                  allow_large_k=args.allow_large_k)
        elif relation == "sk":
            part = sk_components(graph, k, budget=_budget(args),
                                 allow_large_k=args.allow_large_k)
        else:
            part = mutual_tk_classes(graph, k, budget=_budget(args),
                                     allow_large_k=args.allow_large_k)
    runtime_ms = (time.perf_counter() - start) * 1000.0
    if args.output:
        write_partition(part, args.output)
    if args.report == "json":
        print(json.dumps({
            "relation": relation,
            "k": 3 if relation == "k3" else k,
            "n": graph.n,
            "m": graph.m,
            "classes": part.k,
            "class_sizes": part.sizes(),
            "trivial_count": part.trivial_count(),
            "runtime_ms": runtime_ms,
        }))
    else:
        print(f"{relation}: {part.k} classes, {part.trivial_count()} trivial")
    return EXIT_OK


def cmd_network(args) -> int:
    kind = args.kind
    if kind in ("triangular", "kgonal"):
        graph = _load(args, "undirected")
        if kind == "triangular":
            net = triangular_network(graph)
        else:
            net = kgonal_network(graph, args.k, budget=_budget(args),
                                 allow_large_k=args.allow_large_k)
    else:
        graph = _load(args, "directed")
        if kind in ("cyc", "tra", "in", "out"):
            net = directed_triangle_networks(graph)[kind]
        elif kind == "feedback":
            net = feedback_network(graph, args.k, budget=_budget(args),
                                   allow_large_k=args.allow_large_k)
        else:
            n_t, n_s = transitive_support_networks(
                graph, args.k, budget=_budget(args),
                allow_large_k=args.allow_large_k)
            net = n_t if kind == "transitive" else n_s
    write_network(net, args.output)
    print(f"{kind}: {len(net)} members, total weight {net.total_weight()}")
    return EXIT_OK


def cmd_decompose(args) -> int:
    graph = _load(args, "undirected")
    deco = everett_decomposition(graph, args.k, budget=_budget(args),
                                 allow_large_k=args.allow_large_k)
    if args.output:
        write_partition(deco.as_partition(graph.n), args.output)
    print(json.dumps({
        "k": args.k,
        "components": len(deco.components),
        "bridges": len(deco.bridges),
        "component_sizes": [len(c) for c in deco.components],
        "bridge_sizes": [len(b) for b in deco.bridges],
    }))
    return EXIT_OK


def cmd_transitivity(args) -> int:
    graph = _load(args, "directed")
    if args.list_transitive_arcs:
        arcs = k_transitive_arcs(graph, args.k, budget=_budget(args),
                                 allow_large_k=args.allow_large_k)
        for u, v in arcs:
            print(f"{u + 1} {v + 1}")
        return EXIT_OK
    if not args.remove_path:
        raise UsageError("nothing to do: pass --list-transitive-arcs or --remove-path")
    try:
        ids = [int(x) for x in args.remove_path.split(",")]
    except ValueError:
        raise UsageError(f"bad --remove-path {args.remove_path!r}")
    if len(ids) < 2 or min(ids) < 1 or max(ids) > graph.n:
        raise UsageError("--remove-path needs >= 2 valid 1-based vertex ids")
    path = [(a - 1, b - 1) for a, b in zip(ids[:-1], ids[1:])]
    try:
        reduced = remove_transitive_path(graph, path)
    except PathRemovalError as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    if args.verify_reachability:
        for u in range(graph.n):
            if reachable_set(graph, u) != reachable_set(reduced, u):
                print(f"verification failed: reachability changed from {u + 1}",
                      file=sys.stderr)
                return EXIT_VERIFY
        print("reachability preserved")
    if args.output:
        write_network(reduced, args.output)
    print(f"removed {len(path)} arc(s); {reduced.m} arcs remain")
    return EXIT_OK


def cmd_oracle_check(args) -> int:
    relation = args.relation
    k = args.k
    if args.input:
        want = "undirected" if relation in ("k3", "kk", "lk") else "directed"
        graph = _load(args, want)
    elif relation in ("k3", "kk", "lk"):
        graph = random_graph(args.n, args.m if args.m else 2 * args.n, args.seed)
    else:
        graph = random_digraph(args.n, args.m if args.m else 2 * args.n, args.seed)

    budget = _budget(args)
    if relation == "k3":
        ours = k3_components(graph)
        theirs = oracle.chain_connectivity(oracle.enumerate_all_cycles(graph, 3),
                                           "vertex")
    elif relation == "kk":
        ours = kk_components(graph, k, budget=budget,
                             allow_large_k=args.allow_large_k)
        theirs = oracle.chain_connectivity(oracle.enumerate_all_cycles(graph, k),
                                           "vertex")
    elif relation == "lk":
        ours = lk_edge_classes(graph, k, budget=budget,
                               allow_large_k=args.allow_large_k)
        theirs = oracle.chain_connectivity(oracle.enumerate_all_cycles(graph, k),
                                           "edge")
    elif relation == "ck":
        ours = ck_components(graph, k, budget=budget,
                             allow_large_k=args.allow_large_k)
        theirs = oracle.chain_connectivity(oracle.enumerate_all_cycles(graph, k),
                                           "vertex")
    elif relation == "dk":
        ours = dk_arc_classes(graph, k, budget=budget,
                              allow_large_k=args.allow_large_k)
        theirs = oracle.chain_connectivity(oracle.enumerate_all_cycles(graph, k),
                                           "arc")
    else:
        ours = sk_components(graph, k, budget=budget,
                             allow_large_k=args.allow_large_k)
        mismatches = 0
        for u in range(graph.n):
            for v in range(u + 1, graph.n):
                if ours.same_class(u, v) != oracle.bruteforce_sk(graph, k, u, v):
                    mismatches += 1
        if mismatches:
            print(f"MISMATCH: sk disagrees with oracle on {mismatches} pair(s)")
            return EXIT_MISMATCH
        print(f"sk: agrees with oracle on n={graph.n}, m={graph.m}, k={k}")
        return EXIT_OK

    if ours != theirs:
        print(f"MISMATCH: {relation} production={ours.k} classes "
              f"oracle={theirs.k} classes")
        return EXIT_MISMATCH
    print(f"{relation}: agrees with oracle on n={graph.n}, m={graph.m}, k={k}")
    return EXIT_OK


def cmd_bench(args) -> int:
    if args.backend is None:
        backends = kernels.available_backends()
    elif args.backend == "both":
        backends = ["python", "numba"] if kernels.HAS_NUMBA else ["python"]
    else:
        backends = [args.backend]
    if "numba" in backends and not kernels.HAS_NUMBA:
        raise UsageError("numba backend requested but numba is not importable")

    graph = random_graph(args.n, args.m, args.seed)
    ops = [("triangular_network", triangular_network),
           ("k3_components", k3_components)]
    writer = csv.writer(sys.stdout)
    writer.writerow(["family", "n", "m", "op", "backend", "repeat", "runtime_ms"])
    previous = kernels.active_backend()
    try:
        for backend in backends:
            kernels.use_backend(backend)
            for name, fn in ops:
                fn(graph)  # warm up (JIT compile, caches)
                for rep in range(args.repeat):
                    start = time.perf_counter()
                    fn(graph)
                    elapsed = (time.perf_counter() - start) * 1000.0
                    writer.writerow([args.family, graph.n, graph.m, name,
                                     backend, rep, f"{elapsed:.3f}"])
    finally:
        kernels.use_backend(previous)
    return EXIT_OK


_COMMANDS = {
    "components": cmd_components,
    "network": cmd_network,
    "decompose": cmd_decompose,
    "transitivity": cmd_transitivity,
    "oracle-check": cmd_oracle_check,
    "bench": cmd_bench,
}


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PajekParseError, GraphConstructionError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except OracleGuardError as exc:
        print(f"oracle guard: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CycleconError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
