"""Command-line interface.

Five subcommands: ``group`` (Cayley table), ``graph`` (power / enhanced /
proper power graph), ``spectrum`` (exact characteristic polynomial),
``verify`` (closed-form catalog against brute force), ``export`` (same
artifacts to files).  Exit codes: 0 success, 1 invalid arguments or failed
construction, 2 a verification case was falsified.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .errors import SpectraError
from .graphs import (
    adjacency_matrix,
    diameter,
    distance_matrix,
    enhanced_power_graph,
    power_graph,
    proper_power_graph,
    to_dot,
)
from .groups import (
    FiniteGroup,
    GroupFamilySpec,
    group_to_json_obj,
    make_group,
    order_census,
)
from .linalg import char_poly
from .theorems import (
    DEFAULT_MAX_ORDER,
    THEOREMS,
    THEOREM_IDS,
    TheoremCase,
    check_case,
    closed_form_for,
    enumerate_cases,
    make_case,
    verify,
    verify_sweep,
)

_FAMILY_PARAMS: dict[str, tuple[str, ...]] = {
    "cyclic": ("n",),
    "elementary-abelian": ("p", "n"),
    "dihedral": ("n",),
    "dicyclic": ("n",),
    "gpq": ("p", "q"),
    "elab-product": ("p", "n", "q", "m"),
    "elab-cyclic": ("p", "n", "m"),
}

_GRAPH_KINDS = ("power", "enhanced", "proper-power")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse variant that reports usage problems as exit code 1."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="pgspectra",
        description="Exact spectra of power graphs and enhanced power graphs "
        "of finite group families.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_family(p: argparse.ArgumentParser) -> None:
        p.add_argument("--family", required=True, choices=sorted(_FAMILY_PARAMS))
        p.add_argument("--n", type=int)
        p.add_argument("--p", type=int)
        p.add_argument("--q", type=int)
        p.add_argument("--m", type=int)

    def add_output(p: argparse.ArgumentParser, formats: Sequence[str], default: str) -> None:
        p.add_argument("--format", choices=list(formats), default=default)
        p.add_argument("--output", help="write to this path instead of stdout")

    p_group = sub.add_parser("group", help="construct a group and print it")
    add_family(p_group)
    add_output(p_group, ("json", "text"), "json")

    p_graph = sub.add_parser("graph", help="construct a graph of a group")
    add_family(p_graph)
    p_graph.add_argument("--graph", required=True, choices=_GRAPH_KINDS)
    add_output(p_graph, ("dot", "csv", "json", "text"), "dot")

    p_spec = sub.add_parser("spectrum", help="exact characteristic polynomial")
    add_family(p_spec)
    p_spec.add_argument("--graph", required=True, choices=_GRAPH_KINDS)
    p_spec.add_argument("--matrix", required=True, choices=("adjacency", "distance"))
    add_output(p_spec, ("json", "text"), "json")

    p_verify = sub.add_parser("verify", help="check closed forms against brute force")
    p_verify.add_argument("--theorem", choices=list(THEOREM_IDS))
    p_verify.add_argument("--all", action="store_true")
    p_verify.add_argument("--n", type=int)
    p_verify.add_argument("--p", type=int)
    p_verify.add_argument("--q", type=int)
    p_verify.add_argument("--m", type=int)
    p_verify.add_argument("--n-range", dest="n_range", help="inclusive range a:b")
    p_verify.add_argument("--max-order", dest="max_order", type=int, default=DEFAULT_MAX_ORDER)
    p_verify.add_argument("--jobs", type=int, default=1)
    add_output(p_verify, ("jsonl", "text"), "jsonl")

    p_export = sub.add_parser("export", help="write an artifact to a file")
    add_family(p_export)
    p_export.add_argument(
        "--what",
        required=True,
        choices=("group", "graph", "adjacency", "distance", "spectrum"),
    )
    p_export.add_argument("--graph", dest="graph", choices=_GRAPH_KINDS)
    p_export.add_argument("--matrix", choices=("adjacency", "distance"))
    p_export.add_argument("--format", choices=("json", "csv", "dot", "text"))
    p_export.add_argument("--output", required=True)
    return parser


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------


def _family_spec(args: argparse.Namespace) -> GroupFamilySpec:
    family = args.family
    wanted = _FAMILY_PARAMS[family]
    values = {}
    for name in ("n", "p", "q", "m"):
        v = getattr(args, name, None)
        if v is not None:
            values[name] = v
    missing = [w for w in wanted if w not in values]
    extra = [k for k in values if k not in wanted]
    if missing or extra:
        raise _UsageError(
            f"family {family!r} takes --{' --'.join(wanted)}"
            + (f"; missing {missing}" if missing else "")
            + (f"; unexpected {extra}" if extra else "")
        )
    if family == "elab-product":
        return GroupFamilySpec(
            "direct-product",
            (),
            (
                GroupFamilySpec("elementary-abelian", (values["p"], values["n"])),
                GroupFamilySpec("elementary-abelian", (values["q"], values["m"])),
            ),
        )
    if family == "elab-cyclic":
        return GroupFamilySpec(
            "direct-product",
            (),
            (
                GroupFamilySpec("elementary-abelian", (values["p"], values["n"])),
                GroupFamilySpec("cyclic", (values["m"],)),
            ),
        )
    return GroupFamilySpec(family, tuple(values[w] for w in wanted))


def _build_graph(group: FiniteGroup, kind: str):
    if kind == "power":
        return power_graph(group), list(group.labels)
    if kind == "enhanced":
        return enhanced_power_graph(group), list(group.labels)
    return proper_power_graph(group), [
        lab for v, lab in enumerate(group.labels) if v != group.identity
    ]


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parse_range(text: str) -> range:
    parts = text.split(":")
    if len(parts) != 2:
        raise _UsageError(f"range must look like a:b, got {text!r}")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError:
        raise _UsageError(f"range bounds must be integers, got {text!r}") from None
    if lo > hi:
        raise _UsageError(f"empty range {text!r}")
    return range(lo, hi + 1)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def _cmd_group(args: argparse.Namespace) -> int:
    group = make_group(_family_spec(args))
    if args.format == "json":
        _emit(json.dumps(group_to_json_obj(group)), args.output)
    else:
        census = order_census(group)
        lines = [
            f"group: {group.spec.describe() if group.spec else 'ad-hoc'} (order {group.order})",
            "element orders: " + ", ".join(f"{k}x{v}" for k, v in census.items()),
        ]
        _emit("\n".join(lines), args.output)
    return 0


def _cmd_graph(args: argparse.Namespace) -> int:
    group = make_group(_family_spec(args))
    graph, labels = _build_graph(group, args.graph)
    if args.format == "dot":
        _emit(to_dot(graph, labels), args.output)
    elif args.format == "csv":
        _emit(adjacency_matrix(graph).to_csv(labels), args.output)
    elif args.format == "json":
        obj = {"vertex_count": graph.vertex_count, "edges": [list(e) for e in graph.edges()]}
        _emit(json.dumps(obj), args.output)
    else:
        lines = [
            f"{args.graph} graph of {group.spec.describe() if group.spec else 'ad-hoc'}:",
            f"  {graph.vertex_count} vertices, {graph.edge_count} edges, "
            f"diameter {diameter(graph)}",
        ]
        _emit("\n".join(lines), args.output)
    return 0


def _cmd_spectrum(args: argparse.Namespace) -> int:
    spec = _family_spec(args)
    group = make_group(spec)
    graph, _labels = _build_graph(group, args.graph)
    matrix = distance_matrix(graph) if args.matrix == "distance" else adjacency_matrix(graph)
    poly = char_poly(matrix)
    if args.format == "json":
        _emit(json.dumps(poly.to_json_obj()), args.output)
        return 0
    lines = [
        f"{args.graph} graph of {spec.describe()}, {args.matrix} matrix "
        f"({matrix.rows}x{matrix.cols})",
        f"char poly: {poly.pretty()}",
    ]
    if args.graph in ("power", "enhanced"):
        closed = closed_form_for(spec, args.graph, args.matrix)
        if closed is not None:
            lines.append(f"closed form: {closed.pretty()}")
    _emit("\n".join(lines), args.output)
    return 0


def _verify_cases(args: argparse.Namespace) -> list[TheoremCase]:
    if args.all:
        if args.theorem or args.n_range or any(
            getattr(args, k) is not None for k in ("n", "p", "q", "m")
        ):
            raise _UsageError("--all cannot be combined with --theorem or parameters")
        return enumerate_cases(args.max_order)
    if not args.theorem:
        raise _UsageError("verify needs --theorem ID or --all")
    thm = THEOREMS[args.theorem]
    explicit = {
        k: getattr(args, k)
        for k in ("n", "p", "q", "m")
        if getattr(args, k) is not None
    }
    if args.n_range:
        if thm.param_names != ("n",):
            raise _UsageError(
                f"--n-range only applies to single-parameter theorems, not {args.theorem}"
            )
        if explicit:
            raise _UsageError("--n-range cannot be combined with explicit parameters")
        return [make_case(args.theorem, n=n) for n in _parse_range(args.n_range)]
    if explicit:
        case = make_case(args.theorem, **explicit)
        check_case(case)  # invalid hypotheses are an argument error here
        return [case]
    return enumerate_cases(args.max_order, [args.theorem])


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.jobs < 1:
        raise _UsageError("--jobs must be >= 1")
    cases = _verify_cases(args)
    if args.jobs == 1 or len(cases) <= 1:
        reports = [verify(c) for c in cases]
    else:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(verify, cases))
    if args.format == "jsonl":
        text = "\n".join(json.dumps(r.to_json_obj()) for r in reports)
    else:
        lines = []
        for r in reports:
            status = {True: "ok  ", False: "FAIL", None: "info"}[r.equal]
            line = f"{status} {r.case.describe()} order={r.group_order} {r.elapsed_ms}ms"
            if r.note:
                line += f"  # {r.note}"
            lines.append(line)
        falsified = sum(1 for r in reports if r.equal is False)
        informational = sum(1 for r in reports if r.equal is None)
        lines.append(
            f"{len(reports)} case(s): {falsified} falsified, {informational} informational"
        )
        text = "\n".join(lines)
    _emit(text, args.output)
    return 2 if any(r.equal is False for r in reports) else 0


def _cmd_export(args: argparse.Namespace) -> int:
    spec = _family_spec(args)
    group = make_group(spec)
    what = args.what
    if what == "group":
        fmt = args.format or "json"
        if fmt != "json":
            raise _UsageError("group export supports --format json")
        _emit(json.dumps(group_to_json_obj(group)), args.output)
        return 0
    if args.graph is None:
        raise _UsageError(f"export --what {what} needs --graph")
    graph, labels = _build_graph(group, args.graph)
    if what == "graph":
        fmt = args.format or "dot"
        if fmt == "dot":
            _emit(to_dot(graph, labels), args.output)
        elif fmt == "json":
            obj = {"vertex_count": graph.vertex_count, "edges": [list(e) for e in graph.edges()]}
            _emit(json.dumps(obj), args.output)
        else:
            raise _UsageError("graph export supports --format dot or json")
        return 0
    if what in ("adjacency", "distance"):
        fmt = args.format or "csv"
        matrix = adjacency_matrix(graph) if what == "adjacency" else distance_matrix(graph)
        if fmt == "csv":
            _emit(matrix.to_csv(labels), args.output)
        elif fmt == "json":
            _emit(json.dumps(matrix.to_json_obj()), args.output)
        else:
            raise _UsageError("matrix export supports --format csv or json")
        return 0
    # what == "spectrum"
    if args.matrix is None:
        raise _UsageError("export --what spectrum needs --matrix")
    matrix = distance_matrix(graph) if args.matrix == "distance" else adjacency_matrix(graph)
    fmt = args.format or "json"
    if fmt != "json":
        raise _UsageError("spectrum export supports --format json")
    _emit(json.dumps(char_poly(matrix).to_json_obj()), args.output)
    return 0


_COMMANDS = {
    "group": _cmd_group,
    "graph": _cmd_graph,
    "spectrum": _cmd_spectrum,
    "verify": _cmd_verify,
    "export": _cmd_export,
}


def run(argv: Sequence[str] | None = None) -> int:
    """Entry point returning the process exit code (0 / 1 / 2)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SpectraError as exc:
        print(f"error[{type(exc).__name__}]: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
