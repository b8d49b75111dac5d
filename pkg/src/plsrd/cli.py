"""Command-line entry point (``plsrd``).

Exit codes: 0 success, 1 labeling is not a PLSRD function, 2 usage or
parse error, 3 I/O failure, 4 solver stopped by a budget (result is only an
incumbent), 5 input too large for an exhaustive routine.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .bounds import (
    EXACT_PACKING_MAX_N,
    BoundsRecord,
    closed_form,
    cubic_lower_bound,
    max_two_packing,
    packing_upper_bound,
    tree_construction,
)
from .constructions import construct
from .exceptions import ConstructionError, GraphFormatError, PLSRDError, TooLarge
from .fixtures import random_tree_spec
from .graph import FamilyKind, FamilySpec, generate, is_regular, min_degree, parse_kind
from .io import dumps_json, graph_to_json, read_graph, read_labeling, report_to_json
from .labeling import validate
from .solver import SolveOptions, solve

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_IO, EXIT_UNPROVEN, EXIT_TOO_LARGE = 0, 1, 2, 3, 4, 5

FAMILY_NAMES = [k.value for k in FamilyKind]


class _UsageError(Exception):
    pass


def _parse_edges(text: str):
    edges = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            u, v = part.split("-")
            edges.append((int(u), int(v)))
        except ValueError as exc:
            raise _UsageError(f"bad edge {part!r}; expected 'u-v'") from exc
    return edges


def _spec_from_args(args) -> FamilySpec:
    if parse_kind(args.family) is FamilyKind.EXPLICIT_TREE:
        if args.edges is not None:
            return FamilySpec.of("tree", edges=_parse_edges(args.edges))
        if args.n is None:
            raise _UsageError("tree needs --edges or --n (random tree, see --seed)")
        return random_tree_spec(args.n, args.seed)
    return FamilySpec.of(args.family, args.n, args.p)


def _emit(text: str, out) -> None:
    if out in (None, "-"):
        print(text)
    else:
        Path(out).write_text(text + "\n", encoding="utf-8")


def _add_family_args(p, required=True):
    p.add_argument("--family", required=required, help=f"one of {', '.join(FAMILY_NAMES)}")
    p.add_argument("--n", type=int, help="family parameter n")
    p.add_argument("--p", type=int, help="first part size for bipartite K_{p,n}")
    p.add_argument("--edges", help="tree edge list such as '0-1,1-2,1-3'")
    p.add_argument("--seed", type=int, default=0, help="seed for random trees (--family tree --n N)")


# ------------------------------------------------------------------ commands


def cmd_generate(args) -> int:
    g = generate(_spec_from_args(args))
    _emit(graph_to_json(g), args.out)
    return EXIT_OK


def cmd_construct(args) -> int:
    spec = _spec_from_args(args)
    if spec.kind is FamilyKind.EXPLICIT_TREE:
        g = generate(spec)
        result = tree_construction(g, max_two_packing(g, exact=g.n <= EXACT_PACKING_MAX_N))
    else:
        result = construct(spec)
    _emit(dumps_json({"labels": list(result.labeling)}), args.out)
    if args.sidecar:
        _emit(dumps_json(result.sidecar()), args.sidecar)
    return EXIT_OK


def cmd_validate(args) -> int:
    g = read_graph(args.graph)
    labels = read_labeling(args.labeling)
    report = validate(g, labels)
    print(report_to_json(report))
    return EXIT_OK if report.is_valid else EXIT_INVALID


def cmd_solve(args) -> int:
    warm = None
    if args.graph:
        g = read_graph(args.graph)
    elif args.family:
        spec = _spec_from_args(args)
        g = generate(spec)
        if spec.kind is not FamilyKind.EXPLICIT_TREE:
            try:
                warm = construct(spec).labeling
            except ConstructionError:
                warm = None
    else:
        raise _UsageError("solve needs --graph or --family")
    if args.warm_start:
        warm = read_labeling(args.warm_start)
    opts = SolveOptions(
        algorithm=args.algo,
        workers=args.threads,
        node_budget=args.node_budget,
        time_budget=args.time_budget,
        warm_start=warm,
    )
    result = solve(g, opts)
    _emit(dumps_json(result.to_dict()), args.out)
    return EXIT_OK if result.proven_optimal else EXIT_UNPROVEN


def cmd_bounds(args) -> int:
    g = read_graph(args.graph)
    _emit(dumps_json(graph_bounds(g)), args.out)
    return EXIT_OK


def graph_bounds(g) -> dict:
    """Every bound that applies to an arbitrary graph, as a JSON-ready dict."""
    lower = None
    upper = g.n
    provenance = {"upper": "all-ones labeling: n"}
    extra = {"all_ones_upper": g.n}
    if is_regular(g, 3):
        lower = cubic_lower_bound(g)
        provenance["lower"] = "3-regular lower bound ceil(3n/5)"
        extra["cubic_lower"] = lower
    exact = g.n <= EXACT_PACKING_MAX_N
    packing_bound = None
    if g.n >= 2 and g.is_tree():
        s = max_two_packing(g, exact=exact)
        packing_bound = tree_construction(g, s).claimed_weight
        rule = "tree rule: n - |S|"
    elif min_degree(g) >= 2:
        s = max_two_packing(g, exact=exact)
        packing_bound = packing_upper_bound(g, s).upper
        rule = "min degree >= 2: n - |S|"
    if packing_bound is not None:
        extra["packing"] = {"vertices": list(s.vertices), "size": s.size, "exact": s.exact, "upper": packing_bound}
        if packing_bound < upper:
            upper = packing_bound
            provenance["upper"] = rule + ("" if s.exact else " (greedy packing)")
    record = BoundsRecord(lower, upper, None, provenance)
    return {**record.to_dict(), **extra}


@dataclass
class VerifyRow:
    family: str
    n: int
    p: int | None
    formula: int | None
    lower: int | None
    upper: int | None
    construction: int | None
    exact: int | None
    status: str

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def verify_row(spec: FamilySpec, node_budget: int | None, max_vertices: int) -> VerifyRow:
    record = closed_form(spec)
    g = generate(spec)
    if spec.kind is FamilyKind.EXPLICIT_TREE:
        s = max_two_packing(g, exact=g.n <= EXACT_PACKING_MAX_N)
        built = tree_construction(g, s)
    else:
        try:
            built = construct(spec)
        except ConstructionError:
            built = None
    weight = built.claimed_weight if built is not None else None
    exact = None
    if g.n <= max_vertices:
        opts = SolveOptions(node_budget=node_budget, warm_start=built.labeling if built else None)
        result = solve(g, opts)
        if result.proven_optimal:
            exact = result.optimum
    if record.exact is not None:
        ok = weight == record.exact and (exact is None or exact == record.exact)
        status = "Match" if ok else "Mismatch"
    else:
        lo = record.lower if record.lower is not None else float("-inf")
        ok = weight is not None and weight == record.upper
        if exact is not None:
            ok = ok and lo <= exact <= record.upper
        status = "BoundConsistent" if ok else "Mismatch"
    return VerifyRow(
        spec.kind.value,
        spec.n if spec.n is not None else g.n,
        spec.p,
        record.exact,
        record.lower,
        record.upper,
        weight,
        exact,
        status,
    )


def _verify_specs(args):
    kind = parse_kind(args.family)
    if kind is FamilyKind.EXPLICIT_TREE:
        return [random_tree_spec(n, args.seed + n) for n in range(args.from_, args.to + 1)]
    if kind is FamilyKind.COMPLETE_BIPARTITE:
        return [FamilySpec.of(args.family, n, p) for n in range(args.from_, args.to + 1) for p in range(2, n + 1)]
    return [FamilySpec.of(args.family, n) for n in range(args.from_, args.to + 1)]


def format_table(rows) -> str:
    head = ["family", "n", "p", "formula", "lower", "upper", "construction", "exact", "status"]
    cells = [[str(c) if c is not None else "-" for c in (r.family, r.n, r.p, r.formula, r.lower, r.upper, r.construction, r.exact, r.status)] for r in rows]
    widths = [max(len(h), *(len(c[i]) for c in cells)) if cells else len(h) for i, h in enumerate(head)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(head, widths))]
    lines += ["  ".join(c.ljust(w) for c, w in zip(row, widths)) for row in cells]
    return "\n".join(lines)


def cmd_verify(args) -> int:
    if args.from_ > args.to:
        raise _UsageError(f"--from {args.from_} exceeds --to {args.to}")
    rows = [verify_row(spec, args.solver_budget, args.max_vertices) for spec in _verify_specs(args)]
    print(format_table(rows))
    if args.json:
        _emit(json.dumps([r.to_dict() for r in rows], indent=1), args.json)
    return EXIT_INVALID if any(r.status == "Mismatch" for r in rows) else EXIT_OK


# -------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plsrd",
        description="Perfect locating signed Roman domination toolkit.",
        epilog="exit codes: 0 ok, 1 invalid labeling / verify mismatch, 2 usage, 3 I/O, "
        "4 unproven incumbent, 5 size guard",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a family member as canonical graph JSON")
    _add_family_args(p)
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("construct", help="write the constructive labeling for a family member")
    _add_family_args(p)
    p.add_argument("--out", help="labeling JSON output (default stdout)")
    p.add_argument("--sidecar", help="file for {family, n, claimed_weight}")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("validate", help="check a labeling against conditions C1-C3")
    p.add_argument("--graph", required=True)
    p.add_argument("--labeling", required=True)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("solve", help="compute the PLSRD number exactly")
    p.add_argument("--graph", help="graph file (JSON or 'n m' edge list)")
    _add_family_args(p, required=False)
    p.add_argument("--algo", choices=["brute", "bnb"], default="bnb")
    p.add_argument("--threads", type=int, default=None, help="worker processes (default $PLSRD_THREADS or 1)")
    p.add_argument("--node-budget", type=int)
    p.add_argument("--time-budget", type=float, help="seconds")
    p.add_argument("--warm-start", help="labeling file used as the initial incumbent")
    p.add_argument("--out", help="SolveResult JSON output (default stdout)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="tabulate formula vs construction vs exact optimum")
    p.add_argument("--family", required=True)
    p.add_argument("--from", dest="from_", type=int, required=True)
    p.add_argument("--to", type=int, required=True)
    p.add_argument("--solver-budget", type=int, default=10**7, help="node budget per solve")
    p.add_argument("--max-vertices", type=int, default=40, help="skip the solver above this many vertices")
    p.add_argument("--seed", type=int, default=0, help="seed for random trees")
    p.add_argument("--json", help="also write the rows as JSON to this file ('-' for stdout)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="all applicable lower/upper bounds for a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bounds)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (_UsageError, GraphFormatError, PLSRDError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
