"""Command-line interface: ``clutterkit {validate,hardness,gen,from-graph,verify,trace}``.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 falsification.
Reports go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds, constructions, graphs
from .clutter import (
    Clutter,
    check_c1,
    check_c2,
    clutter_from_json,
    clutter_to_dict,
)
from .errors import ClutterError, Falsification, ParseError
from .hardness import clutter_hardness, report_to_dict

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_FALSIFIED = 3


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as f:
            return f.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc


def _emit(data, out: str = "-") -> None:
    text = json.dumps(data) + "\n"
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as f:
            f.write(text)


def _load_clutter(path: str) -> Clutter:
    return clutter_from_json(_read(path))


def cmd_validate(args) -> int:
    try:
        c = _load_clutter(args.file)
    except ClutterError as exc:
        print(f"invalid: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    c1 = check_c1(c) if c.m else None
    print("antichain: ok")
    print(f"n: {c.n}")
    print(f"m: {c.m}")
    print(f"c1: {'n/a' if c1 is None else str(c1).lower()}")
    print(f"c2: {str(check_c2(c)).lower()}")
    return EXIT_OK


def cmd_hardness(args) -> int:
    c = _load_clutter(args.file)
    if args.edge is not None and not 0 <= args.edge < c.m:
        raise UsageError(f"--edge {args.edge} out of range for a clutter with {c.m} edges")
    report = clutter_hardness(c, oracle=args.oracle)
    _emit(report_to_dict(c, report, witness=args.witness, only=args.edge))
    return EXIT_OK


def _gen_object(args):
    fam = args.family
    if fam == "example1":
        return clutter_to_dict(constructions.example1(_need(args, "n")))
    if fam == "extremal":
        return clutter_to_dict(constructions.extremal_clutter(_need(args, "k")))
    if fam == "extremal-graph":
        return graphs.graph_to_dict(constructions.extremal_graph(_need(args, "k")))
    if fam == "kn":
        return graphs.graph_to_dict(constructions.complete_graph(_need(args, "n")))
    if fam == "kmn":
        return graphs.graph_to_dict(constructions.complete_bipartite(_need(args, "a"), _need(args, "b")))
    if fam == "random":
        n = _need(args, "n")
        m = _need(args, "m")
        size_range = tuple(args.sizes) if args.sizes else None
        if args.c1c2:
            c = constructions.random_clutter_c1c2(n, m, size_range, args.seed, args.max_retries)
        else:
            c = constructions.random_clutter(n, m, size_range, args.seed)
        return clutter_to_dict(c)
    if fam == "random-graph":
        n = _need(args, "n")
        num, den = args.p
        return graphs.graph_to_dict(constructions.random_graph(n, num, den, args.seed))
    raise UsageError(f"unknown family {fam}")  # pragma: no cover - argparse restricts choices


def _need(args, name):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"family {args.family} requires --{name}")
    return value


def cmd_gen(args) -> int:
    try:
        data = _gen_object(args)
    except (ClutterError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    _emit(data, args.out)
    return EXIT_OK


def cmd_from_graph(args) -> int:
    g = graphs.load_graph(_read(args.file))
    if args.mode == "mis":
        c = graphs.mis_clutter(g, args.cap)
    else:
        c = graphs.matching_clutter(g, args.cap)
    _emit(clutter_to_dict(c), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    c = _load_clutter(args.file)
    report = bounds.verify_theorem(c, args.bound)
    _emit(bounds.theorem_report_to_dict(report))
    return EXIT_OK


def cmd_trace(args) -> int:
    c = _load_clutter(args.file)
    trace = bounds.proof_trace(c)
    data = bounds.proof_trace_to_dict(trace)
    data["recognizer_labels"] = [c.labels[v] for v in trace.recognizer_vertices]
    _emit(data)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="clutterkit", description="Exact hardness of clutters.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a clutter file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("hardness", help="compute c(e) and c(L)")
    p.add_argument("file")
    p.add_argument("--edge", type=int, help="report only this edge index")
    p.add_argument("--witness", action="store_true", help="include smallest recognizing subsets")
    p.add_argument("--oracle", action="store_true", help="use the brute-force enumerator")
    p.set_defaults(func=cmd_hardness)

    p = sub.add_parser("gen", help="generate a clutter or graph")
    p.add_argument(
        "family",
        choices=["example1", "extremal", "extremal-graph", "kn", "kmn", "random", "random-graph"],
    )
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--sizes", type=int, nargs=2, metavar=("LO", "HI"), help="edge size range")
    p.add_argument("--p", type=int, nargs=2, metavar=("NUM", "DEN"), default=(1, 2), help="edge probability")
    p.add_argument("--c1c2", action="store_true", help="random: retry until (C1) and (C2) hold")
    p.add_argument("--max-retries", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("from-graph", help="derive a clutter from a graph")
    p.add_argument("file")
    p.add_argument("--mode", choices=["mis", "matchings"], default="mis")
    p.add_argument("--cap", type=int, default=graphs.DEFAULT_CAP, help="maximum number of enumerated sets")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_from_graph)

    p = sub.add_parser("verify", help="compare hardness with a lower bound")
    p.add_argument("file")
    p.add_argument("--bound", choices=list(bounds.BOUND_KINDS), default="main")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("trace", help="replay the lower-bound argument step by step")
    p.add_argument("file")
    p.set_defaults(func=cmd_trace)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Falsification as exc:
        print(f"FALSIFIED: {exc}", file=sys.stderr)
        return EXIT_FALSIFIED
    except ClutterError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
