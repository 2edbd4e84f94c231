"""Command-line front end.

Subcommands: ``solve`` (run a solver and emit certificates), ``verify``
(check a certificate file against a graph, optionally against a size
bound), ``generate`` (emit named or random instances) and ``bounds``
(report closed-form bounds, optionally as CSV and/or a chart).

Certificates go to stdout (or to files via --out); the one-line summary
and all diagnostics go to stderr, so piped output stays machine-clean.
Exit codes: 0 ok, 1 invalid certificate, 2 precondition failure, 3 size
cap exceeded, 4 bound violation.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bounds as bd
from . import graphio
from .bounded5 import solve_bounded5
from .errors import (
    BaseCaseTooLargeError,
    FaskitError,
    MissingArcError,
    OrderingMismatchError,
    TooLargeError,
)
from .exact import DEFAULT_CAP, exact_fas
from .generators import (
    gen_d7,
    gen_d8,
    gen_d14,
    gen_d24,
    gen_random,
    gen_random_regular5,
    gen_triangles,
    regularize,
)
from .graph import Ordering, backward_arcs, verify_fas
from .regular5 import solve_regular5

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PRECONDITION = 2
EXIT_CAP = 3
EXIT_BOUND = 4


def _fail(code: int, message: str) -> int:
    print(f"fas: {message}", file=sys.stderr)
    return code


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _cmd_solve(args: argparse.Namespace) -> int:
    try:
        g = graphio.parse_graph(_read(args.input))
    except (FaskitError, OSError) as exc:
        return _fail(EXIT_PRECONDITION, f"cannot read graph: {exc}")

    trace = None
    try:
        if args.algo == "reduce":
            ordering, fas, trace = solve_bounded5(g, args.oracle_cap)
            bound = g.m // 3
        elif args.algo == "exact":
            _size, ordering = exact_fas(g, args.oracle_cap)
            fas = backward_arcs(g, ordering)
            bound = g.m // 3 if g.max_degree() <= 5 else None
        else:  # deg5
            ordering, fas = solve_regular5(g, args.oracle_cap)
            bound = (24 * g.n) // 29
    except (BaseCaseTooLargeError, TooLargeError) as exc:
        return _fail(EXIT_CAP, str(exc))
    except FaskitError as exc:
        return _fail(EXIT_PRECONDITION, str(exc))

    if args.emit == "all":
        wanted = ("fas", "ordering") + (("trace",) if trace is not None else ())
    else:
        wanted = (args.emit,)
    if "trace" in wanted and trace is None:
        return _fail(EXIT_PRECONDITION, f"algo {args.algo} does not produce a trace")

    pieces = {
        "fas": lambda: graphio.write_fas(fas),
        "ordering": lambda: graphio.write_ordering(ordering),
        "trace": lambda: graphio.write_trace(trace),
    }
    if args.out and args.emit == "all":
        for name in wanted:
            _emit(pieces[name](), f"{args.out}.{name}")
    elif args.emit == "all":
        chunks = [f"# {name}\n{pieces[name]()}" for name in wanted]
        sys.stdout.write("".join(chunks))
    else:
        _emit(pieces[args.emit](), args.out)

    print(f"{g.n} {g.m} {fas.size} {bound if bound is not None else '-'}", file=sys.stderr)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        g = graphio.parse_graph(_read(args.graph))
        if args.fas:
            fas = graphio.parse_fas(_read(args.fas))
        else:
            ordering = graphio.parse_ordering(_read(args.ordering))
    except (FaskitError, OSError) as exc:
        return _fail(EXIT_PRECONDITION, f"cannot read input: {exc}")

    if args.fas:
        try:
            if not verify_fas(g, fas):
                return _fail(EXIT_INVALID, "arc set does not break every cycle")
        except MissingArcError as exc:
            return _fail(EXIT_INVALID, f"certificate references missing arcs: {exc}")
        size = fas.size
    else:
        try:
            size = backward_arcs(g, ordering).size
        except OrderingMismatchError as exc:
            return _fail(EXIT_INVALID, f"ordering does not match the graph: {exc}")

    if args.bound == "m3" and size > g.m // 3:
        return _fail(EXIT_BOUND, f"size {size} exceeds floor(m/3) = {g.m // 3}")
    if args.bound == "n2429" and size > (24 * g.n) // 29:
        return _fail(EXIT_BOUND, f"size {size} exceeds floor(24n/29) = {(24 * g.n) // 29}")
    print(f"valid certificate of size {size}", file=sys.stderr)
    return EXIT_OK


def _cmd_generate(args: argparse.Namespace) -> int:
    kind = args.kind
    extra = args.args
    try:
        if kind in ("d7", "d8", "d14", "d24"):
            if extra:
                return _fail(EXIT_PRECONDITION, f"{kind} takes no arguments")
            g = {"d7": gen_d7, "d8": gen_d8, "d14": gen_d14, "d24": gen_d24}[kind]()
        elif kind == "triangles":
            (t,) = map(int, extra)
            g = gen_triangles(t)
        elif kind == "random":
            n, max_deg, seed = map(int, extra)
            g = gen_random(n, max_deg, seed)
        elif kind == "regular5":
            n, seed = map(int, extra)
            g = gen_random_regular5(n, seed)
        elif kind == "regularize":
            (k,) = map(int, extra)
            if not args.input:
                return _fail(EXIT_PRECONDITION, "regularize needs --input FILE")
            g = regularize(graphio.parse_graph(_read(args.input)), k)
        else:
            return _fail(EXIT_PRECONDITION, f"unknown generator {kind!r}")
    except (FaskitError, OSError, ValueError) as exc:
        return _fail(EXIT_PRECONDITION, str(exc))
    _emit(graphio.write_graph(g), args.out)
    return EXIT_OK


def _bounds_rows(g) -> list[tuple[str, float, bool]]:
    degrees = [g.degree(v) for v in sorted(g.vertices)]
    delta = max(g.max_degree(), 1)
    rows = [
        ("berger", bd.berger_bound(degrees), True),
        ("alon", bd.alon_bound(g.m, delta), True),
        ("vertex", bd.vertex_bound(g.n, delta), True),
        ("combined", bd.combined_bound(g.n, g.m, delta), True),
        ("m_third", g.m // 3, g.max_degree() <= 5),
        (
            "n_24_29",
            (24 * g.n) // 29,
            g.n > 0 and all(g.degree(v) == 5 for v in g.vertices),
        ),
    ]
    return rows


def _cmd_bounds(args: argparse.Namespace) -> int:
    try:
        g = graphio.parse_graph(_read(args.input))
    except (FaskitError, OSError) as exc:
        return _fail(EXIT_PRECONDITION, f"cannot read graph: {exc}")
    rows = _bounds_rows(g)
    lines = []
    if args.format == "csv":
        lines.append("name,value,applicable")
        for name, value, applicable in rows:
            lines.append(f"{name},{value:.12g},{str(applicable).lower()}")
    else:
        lines.append(f"n {g.n}")
        lines.append(f"m {g.m}")
        for name, value, applicable in rows:
            note = "" if applicable else " inapplicable"
            lines.append(f"{name} {value:.12g}{note}")
    _emit("\n".join(lines) + "\n", args.out)
    if args.plot:
        from .plotting import render_bounds_chart

        render_bounds_chart(rows, args.plot, title=f"n={g.n} m={g.m}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fas", description="feedback arc set solvers and certificates"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute a feedback arc set")
    p.add_argument("--input", required=True, help="graph file")
    p.add_argument("--algo", choices=("reduce", "exact", "deg5"), default="reduce")
    p.add_argument("--emit", choices=("fas", "ordering", "trace", "all"), default="fas")
    p.add_argument("--oracle-cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--out", help="write certificate(s) to this path (prefix for all)")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="check a certificate")
    p.add_argument("--graph", required=True)
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--fas")
    grp.add_argument("--ordering")
    p.add_argument("--bound", choices=("m3", "n2429"))
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("generate", help="emit an instance")
    p.add_argument(
        "kind",
        choices=("d7", "d8", "d14", "d24", "triangles", "random", "regular5", "regularize"),
    )
    p.add_argument("args", nargs="*", help="generator arguments")
    p.add_argument("--input", help="source graph (regularize)")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("bounds", help="report closed-form bounds")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.add_argument("--plot", help="also render a bar chart to this file")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_bounds)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
