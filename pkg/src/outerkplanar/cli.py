"""Command-line front end.

Subcommands
-----------
bounds     closed-form upper/lower bounds for one (n, k), as a report or a
           single variant value
construct  emit a generated graph as JSON
verify     read graph JSON and report crossing statistics
search     exact maximum edge count by branch and bound
circulant  max-cut values and bounds for C_n^{1..r}
xorsum     the cyclic / bounded xor double sum of a bit string
sweep      evaluate all bounds over an (n, k) grid as plot-ready rows

All failures exit nonzero and print a structured record
``{"error": {"code": ..., "message": ...}}`` so callers can dispatch on
the code without parsing prose.  Exit codes: invalid-flags 2,
malformed-json 3, not-applicable 4, budget-exceeded 5, invalid-input 6.

Real-valued outputs are rounded to ``--precision`` significant digits
(default 6).  All output is deterministic: the same invocation produces
byte-identical bytes on every run.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import circulant as circ
from .bounds import (
    BIPARTITE_UPPER_VARIANTS,
    DEFAULT_K_MIN,
    GENERAL_UPPER_VARIANTS,
    bipartite_upper,
    bound_report,
    general_upper,
)
from .constructions import (
    complete_graph,
    cycle_graph,
    kx_chain,
    kxx_alternating,
    kxx_chain,
)
from .errors import BudgetExceededError, NotApplicableError
from .geometry import (
    crossing_counts,
    degeneracy_order,
    graph_from_json,
    greedy_color,
    is_bipartite,
    to_json_dict,
)
from .search import MAX_SEARCH_N, max_edges

__all__ = ["main", "run", "build_parser", "CliError", "ENV_NODE_BUDGET"]

ENV_NODE_BUDGET = "OUTERKPLANAR_NODE_BUDGET"

_EXIT_CODES = {
    "invalid-flags": 2,
    "malformed-json": 3,
    "not-applicable": 4,
    "budget-exceeded": 5,
    "invalid-input": 6,
}


class CliError(Exception):
    """A failure with a machine-readable code and optional extra payload."""

    def __init__(self, code: str, message: str, extra: dict | None = None):
        super().__init__(message)
        self.code = code
        self.message = message
        self.extra = extra or {}

    @property
    def exit_code(self) -> int:
        return _EXIT_CODES[self.code]

    def record(self) -> dict:
        rec = {"error": {"code": self.code, "message": self.message}}
        rec.update(self.extra)
        return rec


class _Parser(argparse.ArgumentParser):
    # Argparse wants to print usage and die; we want a structured record.
    def error(self, message):
        raise CliError("invalid-flags", message)


def _check_precision(args) -> None:
    if args.precision < 1:
        raise CliError("invalid-flags", "--precision must be at least 1")


def _num(value, precision: int):
    """Round a real to `precision` significant digits; keep ints exact."""
    if isinstance(value, int):
        return value
    return float(format(float(value), f".{precision}g"))


def _fmt(value, precision: int) -> str:
    if isinstance(value, int):
        return str(value)
    return format(float(value), f".{precision}g")


def _dump(payload: dict | list) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _load_graph(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise CliError("invalid-input", f"cannot read {path}: {exc}") from exc
    try:
        return graph_from_json(text)
    except ValueError as exc:
        raise CliError("malformed-json", str(exc)) from exc


# ---------------------------------------------------------------- bounds


def _report_payload(report, precision: int) -> dict:
    entries = []
    for e in report.entries:
        entries.append(
            {
                "name": e.name,
                "kind": e.kind,
                "value": None if e.value is None else _num(e.value, precision),
                "valid": e.valid,
                "valid_when": e.valid_when,
                "source": e.source,
            }
        )
    return {"n": report.n, "k": report.k, "family": report.family,
            "entries": entries}


def _report_csv(report, precision: int) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["name", "kind", "value", "valid", "source"])
    for e in report.entries:
        value = "" if e.value is None else _fmt(e.value, precision)
        writer.writerow([e.name, e.kind, value, e.valid, e.source])
    return buf.getvalue()


def _cmd_bounds(args) -> str:
    _check_precision(args)
    if args.n < 2:
        raise CliError("invalid-flags", "--n must be at least 2")
    if args.k < 0:
        raise CliError("invalid-flags", "--k must be non-negative")
    if args.variant is not None:
        table = BIPARTITE_UPPER_VARIANTS if args.bipartite else GENERAL_UPPER_VARIANTS
        if args.variant not in table:
            family = "bipartite" if args.bipartite else "general"
            raise CliError(
                "invalid-flags",
                f"unknown {family} variant {args.variant!r}; choose from {sorted(table)}",
            )
        try:
            if args.bipartite:
                value = bipartite_upper(args.n, args.k, args.variant,
                                        k_min=args.k_threshold)
            else:
                value = general_upper(args.n, args.k, args.variant,
                                      k_min=args.k_threshold)
        except NotApplicableError as exc:
            raise CliError("not-applicable", str(exc)) from exc
        return _fmt(value, args.precision) + "\n"
    report = bound_report(args.n, args.k, bipartite=args.bipartite,
                          k_min=args.k_threshold)
    if args.format == "csv":
        return _report_csv(report, args.precision)
    return _dump(_report_payload(report, args.precision))


# ------------------------------------------------------------- construct

_CONSTRUCT_FLAGS = {
    "complete": ("x",),
    "cycle": ("n",),
    "kx-chain": ("x", "blocks"),
    "kxx-alternating": ("x",),
    "kxx-chain": ("x", "blocks"),
}


def _cmd_construct(args) -> str:
    wanted = _CONSTRUCT_FLAGS[args.kind]
    for flag in ("x", "n", "blocks"):
        have = getattr(args, flag) is not None
        if have and flag not in wanted:
            raise CliError("invalid-flags",
                           f"construct {args.kind} does not take --{flag}")
        if not have and flag in wanted:
            raise CliError("invalid-flags",
                           f"construct {args.kind} requires --{flag}")
    try:
        if args.kind == "complete":
            g = complete_graph(args.x)
        elif args.kind == "cycle":
            g = cycle_graph(args.n)
        elif args.kind == "kx-chain":
            g = kx_chain(args.x, args.blocks)
        elif args.kind == "kxx-alternating":
            g = kxx_alternating(args.x)
        else:
            g = kxx_chain(args.x, args.blocks)
    except ValueError as exc:
        raise CliError("invalid-input", str(exc)) from exc
    return _dump(to_json_dict(g))


# ---------------------------------------------------------------- verify


def _cmd_verify(args) -> str:
    g = _load_graph(args.file)
    counts = crossing_counts(g)
    worst = max(counts.values(), default=0)
    _, degeneracy = degeneracy_order(g)
    _, ncolors = greedy_color(g)
    payload = {"n": g.n, "m": g.m}
    if args.k is not None:
        if args.k < 0:
            raise CliError("invalid-flags", "--k must be non-negative")
        payload["k"] = args.k
        payload["outer_k_planar"] = worst <= args.k
    payload["max_crossing"] = worst
    payload["bipartite"] = is_bipartite(g)
    payload["degeneracy"] = degeneracy
    payload["greedy_colors"] = ncolors
    payload["per_edge_crossings"] = [
        {"edge": list(e), "crossings": counts[e]} for e in g.sorted_edges()
    ]
    return _dump(payload)


# ---------------------------------------------------------------- search


def _search_payload(result) -> dict:
    return {
        "max_edges": result.max_edges,
        "proven_optimal": result.proven_optimal,
        "nodes_explored": result.nodes_explored,
        "settings": result.settings,
        "witness": to_json_dict(result.witness),
    }


def _node_budget(args) -> int | None:
    if args.budget_nodes is not None:
        if args.budget_nodes < 0:
            raise CliError("invalid-flags", "--budget-nodes must be non-negative")
        return args.budget_nodes
    raw = os.environ.get(ENV_NODE_BUDGET)
    if raw is None or raw == "":
        return None
    try:
        budget = int(raw)
    except ValueError as exc:
        raise CliError("invalid-flags",
                       f"{ENV_NODE_BUDGET} must be an integer, got {raw!r}") from exc
    if budget < 0:
        raise CliError("invalid-flags", f"{ENV_NODE_BUDGET} must be non-negative")
    return budget


def _cmd_search(args) -> str:
    mode = "general" if args.bipartite is None else f"bipartite_{args.bipartite}"
    warm = _load_graph(args.warm_start) if args.warm_start else None
    budget = _node_budget(args)
    try:
        result = max_edges(args.n, args.k, mode,
                           node_budget=budget, warm_start=warm)
    except BudgetExceededError as exc:
        extra = {}
        if exc.result is not None:
            extra["result"] = _search_payload(exc.result)
        raise CliError("budget-exceeded", str(exc), extra) from exc
    except ValueError as exc:
        raise CliError("invalid-input", str(exc)) from exc
    return _dump(_search_payload(result))


# ------------------------------------------------------------- circulant


def _cmd_circulant(args) -> str:
    _check_precision(args)
    try:
        spec = circ.CirculantSpec(args.n, args.r)
    except ValueError as exc:
        raise CliError("invalid-input", str(exc)) from exc
    payload = {"n": args.n, "r": args.r, "method": args.method}
    if args.method == "exact":
        try:
            cut = circ.exact_maxcut(spec)
        except BudgetExceededError as exc:
            raise CliError("budget-exceeded", str(exc)) from exc
        payload["value"] = cut.value
        payload["sides"] = list(cut.sides)
    elif args.method == "mohar":
        payload["value"] = _num(circ.mohar_bound(spec), args.precision)
    elif args.method == "lemma":
        payload["value"] = _num(circ.lemma_maxcut_bound(spec), args.precision)
    else:  # lemma-refined
        payload["value"] = _num(circ.lemma_maxcut_bound(spec, refined=True),
                                args.precision)
    return _dump(payload)


# ---------------------------------------------------------------- xorsum


def _cmd_xorsum(args) -> str:
    bits = args.bits
    if not bits or any(ch not in "01" for ch in bits):
        raise CliError("invalid-input",
                       "--bits must be a nonempty string over {0,1}")
    if args.r < 1:
        raise CliError("invalid-flags", "--r must be at least 1")
    mode = "bounded" if args.bounded else "cyclic"
    value = circ.xor_sum(bits, args.r, mode=mode)
    return _dump({"n": len(bits), "r": args.r, "mode": mode, "value": value})


# ----------------------------------------------------------------- sweep


def _cmd_sweep(args) -> str:
    _check_precision(args)
    if args.n_from < 2:
        raise CliError("invalid-flags", "--n-from must be at least 2")
    if args.n_to < args.n_from or args.k_to < args.k_from:
        raise CliError("invalid-flags", "grid is empty: check --n-to / --k-to")
    if args.n_step < 1 or args.k_step < 1:
        raise CliError("invalid-flags", "steps must be at least 1")
    if args.k_from < 0:
        raise CliError("invalid-flags", "--k-from must be non-negative")
    rows = []
    for n in range(args.n_from, args.n_to + 1, args.n_step):
        for k in range(args.k_from, args.k_to + 1, args.k_step):
            report = bound_report(n, k, bipartite=args.bipartite,
                                  k_min=args.k_threshold)
            for e in report.entries:
                rows.append((n, k, e.name, e.value, e.valid))
    if args.format == "json":
        payload = [
            {
                "n": n,
                "k": k,
                "bound_name": name,
                "value": None if value is None else _num(value, args.precision),
                "valid": valid,
            }
            for n, k, name, value, valid in rows
        ]
        return _dump(payload)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "k", "bound_name", "value", "valid"])
    for n, k, name, value, valid in rows:
        cell = "" if value is None else _fmt(value, args.precision)
        writer.writerow([n, k, name, cell, valid])
    return buf.getvalue()


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="outerkplanar",
                     description="Edge bounds, constructions, and exact search "
                                 "for graphs on convex point sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="closed-form bounds for one (n, k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--bipartite", action="store_true",
                   help="report the bipartite family instead of the general one")
    p.add_argument("--variant", default=None,
                   help="print a single upper-bound value instead of the report")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--precision", type=int, default=6, metavar="DIGITS")
    p.add_argument("--k-threshold", type=int, default=DEFAULT_K_MIN, metavar="K",
                   help="smallest k at which the k-threshold-gated variants "
                        f"are reported valid (default {DEFAULT_K_MIN})")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("construct", help="emit a generated graph as JSON")
    p.add_argument("kind", choices=sorted(_CONSTRUCT_FLAGS))
    p.add_argument("--x", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--blocks", type=int, default=None)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="crossing statistics of a graph JSON file")
    p.add_argument("file", help="path to graph JSON, or - for stdin")
    p.add_argument("--k", type=int, default=None,
                   help="also report whether every edge is crossed at most k times")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("search", help="exact maximum edge count (n <= %d)"
                                      % MAX_SEARCH_N)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--bipartite", choices=("free", "alternating", "consecutive"),
                   default=None)
    p.add_argument("--budget-nodes", type=int, default=None,
                   help=f"search node budget (default: ${ENV_NODE_BUDGET} "
                        "if set, else unbounded)")
    p.add_argument("--warm-start", default=None, metavar="FILE",
                   help="graph JSON used to seed the incumbent")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("circulant", help="max-cut of C_n^{1..r}: exact or bounds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--method", required=True,
                   choices=("exact", "mohar", "lemma", "lemma-refined"))
    p.add_argument("--precision", type=int, default=6, metavar="DIGITS")
    p.set_defaults(func=_cmd_circulant)

    p = sub.add_parser("xorsum", help="xor double sum of a bit string")
    p.add_argument("--bits", required=True)
    p.add_argument("--r", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--cyclic", action="store_true", default=True,
                       help="wrap indices modulo n (default)")
    group.add_argument("--bounded", action="store_true", default=False,
                       help="drop index pairs that leave 0..n-1")
    p.set_defaults(func=_cmd_xorsum)

    p = sub.add_parser("sweep", help="evaluate all bounds over an (n, k) grid")
    p.add_argument("--n-from", type=int, required=True)
    p.add_argument("--n-to", type=int, required=True)
    p.add_argument("--n-step", type=int, default=1)
    p.add_argument("--k-from", type=int, required=True)
    p.add_argument("--k-to", type=int, required=True)
    p.add_argument("--k-step", type=int, default=1)
    p.add_argument("--bipartite", action="store_true")
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.add_argument("--precision", type=int, default=6, metavar="DIGITS")
    p.add_argument("--k-threshold", type=int, default=DEFAULT_K_MIN, metavar="K")
    p.set_defaults(func=_cmd_sweep)

    return parser


def run(argv=None, out=None) -> int:
    """Parse argv, execute, write the result; return the exit code."""
    stream = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        text = args.func(args)
    except CliError as err:
        stream.write(_dump(err.record()))
        return err.exit_code
    except SystemExit as exc:  # argparse --help
        code = exc.code
        return code if isinstance(code, int) else 0
    stream.write(text)
    return 0


def main() -> int:
    return run(sys.argv[1:])
