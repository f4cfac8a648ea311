"""Batch command line over the library: graphs travel as graph6 lines.

Subcommands: analyze, closure, construct, spectral, enumerate, verify, hunt.
`-` means stdin wherever a graph6 argument is expected.  Text output is
human-oriented; `--format json` is the stable machine contract.  Exit codes:
0 ok/pass, 1 a verification run or hunt found an unmatched counterexample,
2 usage error or infeasible request.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterator, Sequence

from . import graph6
from .enumeration import EnumSpec, Exhaustive, Sample, enumerate_graphs
from .errors import ClawtraceError
from .families import FamilySpec, make
from .families import graph_l, graph_m, net
from .graph import (
    Graph,
    block_decomposition,
    complement,
    components,
    is_block_chain,
    popcount,
)
from .hamilton import MAX_EXACT, has_hamilton_cycle, has_hamilton_path
from .spectral import hofmeister_bound, hong_bound, spectral_radius
from .structure import closure, find_induced, is_claw_free, is_closed
from .verify import REGISTRY, hunt, verify

_THEOREMS = {
    "fiedler-nikiforov-1": "FiedlerNikiforov1",
    "fiedler-nikiforov-2": "FiedlerNikiforov2",
    "lu-liu-tian": "LuLiuTian",
    "ning-ge": "NingGe",
    "main-mu": "MainMuG",
    "main-complement": "MainComplement",
    "dgj": "DGJ",
    "lbz": "LBZ",
    "degree-sum": "DegreeSumLemma",
    "edge-lemma": "EdgeLemma",
    "edge-lemma-prime": "EdgeLemmaPrime",
    "hong": "Hong",
    "hofmeister": "Hofmeister",
    "brousek-order-9": "BrousekOrder9",
    "hamiltonian-family": "HamiltonianFamily",
    "dirac": "Dirac",
    "matthews-sumner": "MatthewsSumner",
}

_FAMILIES = {
    "complete": "Complete",
    "star": "Star",
    "complete-split": "CompleteSplit",
    "n-graph": "Nn33",
    "net": "NetN",
    "graph-m": "GraphM",
    "graph-l": "GraphL",
    "claw": "Claw",
    "ning-ge": "NingGe",
    "brousek": "Brousek",
    "brousek-blown": "BrousekBlown",
    "complete-plus-k1": "CompletePlusIsolated",
}


def _resolve_theorem(name: str) -> str:
    if name in _THEOREMS:
        return _THEOREMS[name]
    if name in REGISTRY:
        return name
    raise ClawtraceError(
        f"unknown theorem {name!r}; choices: {', '.join(sorted(_THEOREMS))}"
    )


def _input_graphs(arg: str) -> Iterator[Graph]:
    if arg == "-":
        for line in sys.stdin:
            s = line.strip()
            if s:
                yield graph6.decode(s)
    else:
        yield graph6.decode(arg)


def _print_kv(info: dict) -> None:
    for key, value in info.items():
        print(f"{key}: {value}")


# ---------------------------------------------------------------------------
# subcommands


def _analyze_one(g: Graph) -> dict:
    comps = components(g)
    connected = len(comps) == 1
    info: dict = {
        "graph6": graph6.encode(g),
        "n": g.n,
        "m": g.m,
        "degrees": g.degrees(),
        "connected": connected,
        "components": len(comps),
    }
    if connected:
        dec = block_decomposition(g)
        info["blocks"] = len(dec.blocks)
        info["cut_vertices"] = popcount(dec.cut_vertices)
        info["block_chain"] = is_block_chain(g)
    else:
        info["blocks"] = None
        info["cut_vertices"] = None
        info["block_chain"] = False
    claw_free = is_claw_free(g)
    info["claw_free"] = claw_free
    info["spectral_radius"] = spectral_radius(g).value
    info["hong_bound"] = hong_bound(g) if connected else None
    info["hofmeister_bound"] = hofmeister_bound(g)
    exact = g.n <= MAX_EXACT
    info["traceable"] = has_hamilton_path(g) if exact else None
    info["hamiltonian"] = has_hamilton_cycle(g) if exact else None
    info["closed"] = is_closed(g) if claw_free else None
    info["induced_net"] = find_induced(g, net()) is not None if g.n >= 6 else False
    info["induced_m"] = find_induced(g, graph_m()) is not None if g.n >= 8 else False
    info["induced_l"] = find_induced(g, graph_l()) is not None if g.n >= 7 else False
    return info


def _cmd_analyze(args: argparse.Namespace) -> int:
    first = True
    for g in _input_graphs(args.graph):
        info = _analyze_one(g)
        if args.format == "json":
            print(json.dumps(info))
        else:
            if not first:
                print()
            _print_kv(info)
        first = False
    return 0


def _cmd_closure(args: argparse.Namespace) -> int:
    for g in _input_graphs(args.graph):
        result = closure(g)
        steps = [
            {"vertex": s.vertex, "added": [list(e) for e in s.added]}
            for s in result.steps
        ]
        if args.format == "json":
            print(json.dumps({
                "graph6": graph6.encode(g),
                "closed": graph6.encode(result.closed),
                "complete": result.closed.m == result.closed.n * (result.closed.n - 1) // 2,
                "steps": steps,
            }))
        else:
            for i, s in enumerate(result.steps):
                edges = " ".join(f"({u},{w})" for u, w in s.added)
                print(f"step {i}: complete vertex {s.vertex}, add {edges}")
            if not result.steps:
                print("already closed")
            print(f"closed: {graph6.encode(result.closed)}")
    return 0


def _cmd_construct(args: argparse.Namespace) -> int:
    if args.family not in _FAMILIES:
        raise ClawtraceError(
            f"unknown family {args.family!r}; choices: {', '.join(sorted(_FAMILIES))}"
        )
    spec = FamilySpec(_FAMILIES[args.family], tuple(args.params))
    g = make(spec)
    if args.format == "json":
        print(json.dumps({"family": spec.label(), "graph6": graph6.encode(g)}))
    else:
        print(graph6.encode(g))
    return 0


def _cmd_spectral(args: argparse.Namespace) -> int:
    for g in _input_graphs(args.graph):
        target = complement(g) if args.complement else g
        est = spectral_radius(target)
        info = {
            "graph6": graph6.encode(g),
            "complement": args.complement,
            "value": est.value,
            "iterations": est.iterations,
            "converged": est.converged,
            "residual": est.residual,
        }
        if args.format == "json":
            print(json.dumps(info))
        else:
            which = "mu(complement)" if args.complement else "mu"
            print(f"{which} = {est.value:.12f}  "
                  f"(iterations={est.iterations}, converged={est.converged})")
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    if args.mode == "sample":
        if args.count is None or args.seed is None:
            raise ClawtraceError("sample mode needs --count and --seed")
        mode = Sample(args.count, args.seed, args.density)
    else:
        mode = Exhaustive()
    spec = EnumSpec(args.n, tuple(args.predicates), mode)

    def emit(g: Graph) -> None:
        s = graph6.encode(g)
        if args.format == "json":
            print(json.dumps({"graph6": s}))
        else:
            print(s)

    enumerate_graphs(spec, emit, workers=args.workers, checkpoint=args.checkpoint)
    return 0


def _report_lines(d: dict, passed: bool) -> None:
    for key in ("theorem", "n_range", "mode", "checked", "seed"):
        if d.get(key) is not None:
            print(f"{key}: {d[key]}")
    print(f"exceptions ({len(d['exceptions'])}):")
    for g6_str, label in d["exceptions"]:
        print(f"  {g6_str}  {label}")
    print(f"borderline ({len(d['borderline'])}):")
    for g6_str in d["borderline"]:
        print(f"  {g6_str}")
    print(f"elapsed_ms: {d['elapsed_ms']}")
    print(f"result: {'PASS' if passed else 'FAIL'}")


def _cmd_verify(args: argparse.Namespace) -> int:
    report = verify(
        _resolve_theorem(args.theorem),
        args.n_min,
        args.n_max,
        mode=args.mode,
        count=args.count,
        seed=args.seed,
        density=args.density,
        workers=args.workers,
    )
    if args.format == "json":
        d = report.to_dict()
        d["passed"] = report.passed
        print(json.dumps(d))
    else:
        _report_lines(report.to_dict(), report.passed)
    return 0 if report.passed else 1


def _cmd_hunt(args: argparse.Namespace) -> int:
    report = hunt(
        _resolve_theorem(args.theorem),
        n=args.n,
        seed=args.seed,
        count=args.count,
        density=args.density,
        top=args.top,
    )
    if args.format == "json":
        d = report.to_dict()
        d["passed"] = report.passed
        print(json.dumps(d))
    else:
        print(f"theorem: {report.theorem}")
        print(f"n: {report.n}")
        print(f"checked: {report.checked}")
        print(f"counterexamples ({len(report.counterexamples)}):")
        for g6_str, label in report.counterexamples:
            print(f"  {g6_str}  {label}")
        print(f"near misses ({len(report.near_misses)}):")
        for g6_str, margin in report.near_misses:
            print(f"  {g6_str}  margin={margin:+.6f}")
        print(f"result: {'PASS' if report.passed else 'FAIL'}")
    return 0 if report.passed else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--spectral-tol", type=float, default=None,
                        help="power iteration residual tolerance override")
    common.add_argument("--cmp-tol", type=float, default=None,
                        help="threshold comparison tolerance override")

    parser = argparse.ArgumentParser(
        prog="clawtrace",
        description="spectral traceability toolkit for claw-free graphs",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("analyze", parents=[common],
                       help="report structure and spectra of graph6 input")
    p.add_argument("graph", help="graph6 string, or - for stdin lines")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("closure", parents=[common],
                       help="claw-free closure with step trace")
    p.add_argument("graph", help="graph6 string, or - for stdin lines")
    p.set_defaults(func=_cmd_closure)

    p = sub.add_parser("construct", parents=[common],
                       help="emit a named family member as graph6")
    p.add_argument("family", help=", ".join(sorted(_FAMILIES)))
    p.add_argument("params", type=int, nargs="*")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("spectral", parents=[common],
                       help="spectral radius of the graph or its complement")
    p.add_argument("graph", help="graph6 string, or - for stdin lines")
    p.add_argument("--complement", action="store_true")
    p.set_defaults(func=_cmd_spectral)

    p = sub.add_parser("enumerate", parents=[common],
                       help="stream one graph6 line per isomorphism class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--predicates", nargs="*",
                   default=["connected", "claw-free"],
                   help="connected claw-free net-free m-free closed two-connected")
    p.add_argument("--mode", choices=("exhaustive", "sample"), default="exhaustive")
    p.add_argument("--count", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--density", type=float, default=0.9)
    p.add_argument("--checkpoint", default=None)
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", parents=[common],
                       help="run one theorem verifier over an order range")
    p.add_argument("theorem", help=", ".join(sorted(_THEOREMS)))
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--mode", choices=("exhaustive", "sample"), default="exhaustive")
    p.add_argument("--count", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--density", type=float, default=0.9)
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("hunt", parents=[common],
                       help="sampled counterexample search at one order")
    p.add_argument("--theorem", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--density", type=float, default=0.9)
    p.add_argument("--top", type=int, default=10)
    p.set_defaults(func=_cmd_hunt)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.spectral_tol is not None:
        os.environ["SPECTRAL_TOL"] = repr(args.spectral_tol)
    if args.cmp_tol is not None:
        os.environ["CMP_TOL"] = repr(args.cmp_tol)
    try:
        return args.func(args)
    except BrokenPipeError:
        return 0
    except ClawtraceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
