"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 parse or parameter error,
3 I/O error.
"""
from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from .census import census
from .core import read_trn, to_dot, to_trn
from .criticality import PATH, classify, graph_to_dot
from .errors import BadParams, ParseError, TooLarge, VerificationFailed
from .families import FAMILY_TAGS, FamilySpec
from .intervals import find_nontrivial_interval
from .isomorphism import find_isomorphism
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAILED, EXIT_PARSE, EXIT_IO = 0, 1, 2, 3


def _fmt_set(s) -> str:
    return "{" + ", ".join(map(str, sorted(s))) + "}"


def _path_order(graph, comp) -> list[int]:
    ends = [v for v in sorted(comp) if graph.degree(v) <= 1]
    order, prev = [ends[0]], None
    while len(order) < len(comp):
        nxt = min(u for u in graph.neighbours(order[-1]) if u != prev)
        prev = order[-1]
        order.append(nxt)
    return order


def _describe_component(graph, comp, shape) -> str:
    if shape == PATH:
        return "path " + "-".join(map(str, _path_order(graph, comp)))
    return f"{shape} {_fmt_set(comp)}"


def analyze_lines(t) -> list[str]:
    lines = [f"order: {t.n}"]
    witness = find_nontrivial_interval(t)
    if witness is not None:
        lines.append("indecomposable: no")
        lines.append(f"witness: {_fmt_set(witness)}")
        lines.append(f"summary: decomposable; witness {_fmt_set(witness)}")
        return lines
    r = classify(t)
    lines.append("indecomposable: yes")
    if r.small_order:
        lines.append("note: order < 5, criticality follows the n <= 2 convention only")
    lines.append(f"critical vertices: {_fmt_set(r.critical)}")
    lines.append(f"non-critical vertices: {_fmt_set(r.non_critical)}")
    lines.append(f"k: {r.k}")
    lines.append("I(T) edges: " + " ".join(f"{x}-{y}" for x, y in r.graph.sorted_edges()))
    parts = [_describe_component(r.graph, c, s) for c, s in r.components]
    lines.append("components: " + "; ".join(parts))
    if r.is_critical:
        kind = "critical (k=0)"
    elif r.k == 1:
        kind = f"(-1)-critical; non-critical vertex {min(r.non_critical)}"
    else:
        kind = f"(-{r.k})-critical; non-critical vertices {_fmt_set(r.non_critical)}"
    big = [(c, s) for c, s in r.components if len(c) > 1]
    graph_desc = ""
    if len(big) == 1:
        graph_desc = f"; I(T) = {_describe_component(r.graph, *big[0])}"
    lines.append(f"summary: indecomposable; {kind}{graph_desc}")
    return lines


def parse_range(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        return range(int(text), int(text) + 1)
    except ValueError:
        raise BadParams(f"bad range {text!r}; use N or LO..HI") from None


def cmd_gen(args) -> int:
    spec = FamilySpec(args.family, args.n, args.k)
    t = spec.build()
    if args.output:
        Path(args.output).write_text(to_trn(t))
    else:
        sys.stdout.write(to_trn(t))
    if args.dot:
        Path(args.dot).write_text(to_dot(t, name=args.family))
    return EXIT_OK


def cmd_analyze(args) -> int:
    t = read_trn(args.path)
    for line in analyze_lines(t):
        print(line)
    if args.dot and find_nontrivial_interval(t) is None:
        r = classify(t)
        Path(args.dot).write_text(graph_to_dot(r.graph, r.non_critical))
    return EXIT_OK


def cmd_iso(args) -> int:
    a, b = read_trn(args.first), read_trn(args.second)
    p = find_isomorphism(a, b)
    print("not isomorphic" if p is None else f"isomorphic: {list(p)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    start = time.perf_counter()
    try:
        reports = run_suite(args.suite, parse_range(args.range), jobs=args.jobs)
        code = EXIT_OK
    except VerificationFailed as exc:
        reports, code = [exc.report] if exc.report else [], EXIT_FAILED
        print(f"verification failed: {exc}")
    for rep in reports:
        for line in rep.lines():
            print(line)
    if not args.no_timing:
        print(f"time: {time.perf_counter() - start:.2f}s")
    return code


def cmd_census(args) -> int:
    start = time.perf_counter()
    result = census(args.m, jobs=args.jobs, allow_large=args.allow_8)
    for line in result.summary_lines():
        print(line)
    if args.json:
        Path(args.json).write_text(result.to_json())
    if not args.no_timing:
        print(f"time: {time.perf_counter() - start:.2f}s")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tournaments", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a family member as .trn")
    p.add_argument("family", choices=FAMILY_TAGS)
    p.add_argument("n", type=int)
    p.add_argument("k", type=int, nargs="?")
    p.add_argument("-o", "--output", help=".trn path (default: standard output)")
    p.add_argument("--dot", help="also write the tournament as DOT")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", help="intervals, criticality and I(T) of a .trn file")
    p.add_argument("path")
    p.add_argument("--dot", help="write I(T) as DOT (indecomposable input only)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("iso", help="isomorphism between two .trn files")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("verify", help="run a verification suite over a range of n")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("range", help="N or LO..HI")
    p.add_argument("--jobs", type=int, default=1, help="census worker processes")
    p.add_argument("--no-timing", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", help="exhaustive census of labeled tournaments of order m")
    p.add_argument("m", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--allow-8", action="store_true", help="permit the 2^28-instance order-8 run")
    p.add_argument("--json", help="write the machine-readable report here")
    p.add_argument("--no-timing", action="store_true")
    p.set_defaults(func=cmd_census)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, BadParams, TooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
