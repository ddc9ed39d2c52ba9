"""Command line front end.

Subcommands:

  compute         index values for graphs from a file or stdin
  bounds          evaluate bound checks for given graphs
  family          emit a member of a named parametric family
  verify          exhaustive bound sweep over all small graphs
  audit-formulas  compare printed family closed forms against computed values
  extremal        graphs attaining an extreme index value

Exit codes: 0 clean, 1 usage or input errors, 2 completed but found bound
violations (verify, bounds) or formula disagreements (audit-formulas).

Exact values are printed as "num/den" strings (denominator omitted when 1)
or "sqrt(num/den)" for the one square-root bound; --decimal adds a truncated
decimal convenience column next to them.
"""

from __future__ import annotations

import argparse
import csv as _csv
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import IO, List, Optional, Tuple

from .bounds import evaluate_bounds, expand_bound_ids
from .errors import SteinerGutError
from .exact import decimal_str, value_str
from .families import FamilySpec, generate, audit_formulas
from .graph import Graph, complement, from_edge_list, is_connected
from .graph6 import graph6_decode, graph6_encode
from .indices import gutman, steiner_degree_distance, steiner_gutman, steiner_wiener
from .steiner import steiner_all_subsets
from .verify import (
    EnumerationSpec,
    enumerate_graphs,
    find_extremal,
    merge_reports,
    report_to_dict,
    shard_graphs,
    sweep,
    sweep_shard,
    write_checks_csv,
)

INDEX_NAMES = ("sgut", "sw", "sdd", "gut")

# CLI family names to library family identifiers
FAMILY_NAMES = {
    "path": "path",
    "cycle": "cycle",
    "star": "star",
    "complete": "complete",
    "kn-minus-matching": "complete_minus_perfect_matching",
}

CLI_OBJECTIVES = ("max-product", "max-sum", "max-sgut", "min-sgut")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; remap that to 1."""

    def error(self, message):
        raise _UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="steinergut", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_graph_input(p):
        p.add_argument("--graph", required=True, metavar="FILE",
                       help="input file, or - for stdin")
        p.add_argument("--format", choices=("g6", "edgelist"), default="g6",
                       help="g6: one graph6 string per line (batch); edgelist: "
                            "'u v' lines for a single graph, optional leading "
                            "line with the vertex count")

    p = sub.add_parser("compute", help="index values for given graphs")
    add_graph_input(p)
    p.add_argument("--k", default="all", help="group size, an integer or 'all' (default)")
    p.add_argument("--indices", default="sgut,sw,sdd,gut",
                   help="comma list from sgut,sw,sdd,gut")
    p.add_argument("--out", choices=("json", "csv"), default="json")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("bounds", help="evaluate bound checks for given graphs")
    add_graph_input(p)
    p.add_argument("--k", default="all", help="group size, an integer or 'all' (default)")
    p.add_argument("--set", dest="bound_set", default="all",
                   help="comma list of bound ids or group names (default all)")
    p.add_argument("--out", choices=("json", "csv"), default="json")
    p.add_argument("--decimal", type=int, default=None, metavar="DIGITS",
                   help="also render bound values as truncated decimals")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("family", help="emit a member of a parametric family")
    p.add_argument("--name", required=True, choices=sorted(FAMILY_NAMES))
    p.add_argument("--n", required=True, type=int, help="number of vertices")
    p.add_argument("--emit", choices=("g6", "edgelist"), default="g6")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("verify", help="exhaustive bound sweep over small graphs")
    p.add_argument("--n-max", required=True, type=int)
    p.add_argument("--k", default="all", help="group size, an integer or 'all' (default)")
    p.add_argument("--set", dest="bound_set", default="all",
                   help="comma list of bound ids or group names (default all)")
    dd = p.add_mutually_exclusive_group()
    dd.add_argument("--dedup", action="store_true", default=True,
                    help="sweep isomorphism classes (the default)")
    dd.add_argument("--labeled", dest="dedup", action="store_false",
                    help="sweep labeled graphs instead")
    p.add_argument("--coconnected", action="store_true",
                   help="only graphs whose complement is also connected")
    p.add_argument("--out", default="-", metavar="FILE",
                   help="write the JSON report here (default stdout)")
    p.add_argument("--csv", default=None, metavar="FILE",
                   help="also write one CSV row per executed check")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("audit-formulas",
                       help="compare printed family closed forms with computed values")
    p.add_argument("--n-max", required=True, type=int)
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("extremal", help="graphs attaining an extreme index value")
    p.add_argument("--n", required=True, type=int, help="number of vertices")
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--objective", required=True, choices=CLI_OBJECTIVES)
    p.add_argument("--coconnected", action="store_true")
    p.set_defaults(func=_cmd_extremal)

    return parser


def _read_text(path: str) -> Tuple[str, str]:
    if path == "-":
        return "stdin", sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return path, fh.read()


def _parse_edgelist(label: str, text: str) -> Graph:
    """One graph: 'u v' lines; an optional first line holds the vertex count."""
    edges = []
    n: Optional[int] = None
    first = True
    for i, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        if first and len(parts) == 1:
            try:
                n = int(parts[0])
            except ValueError:
                raise _UsageError(f"{label}:{i}: bad vertex count {s!r}")
            first = False
            continue
        first = False
        if len(parts) != 2:
            raise _UsageError(f"{label}:{i}: expected 'u v', got {s!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise _UsageError(f"{label}:{i}: expected integer endpoints, got {s!r}")
        edges.append((u, v))
    if n is None:
        if not edges:
            raise _UsageError(f"{label}: no edges and no vertex count line")
        n = max(max(u, v) for u, v in edges) + 1
    return from_edge_list(n, edges)


def _load_graphs(args) -> List[Tuple[str, Graph]]:
    """(graph6 name, Graph) pairs from the --graph input."""
    label, text = _read_text(args.graph)
    if args.format == "edgelist":
        g = _parse_edgelist(label, text)
        return [(graph6_encode(g), g)]
    out = []
    for i, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        try:
            g = graph6_decode(s)
        except SteinerGutError as exc:
            raise exc.__class__(f"{label}:{i}: {exc}") from None
        out.append((s, g))
    if not out:
        raise _UsageError(f"no graphs found in {label}")
    return out


def _k_list(kval: str, n: int) -> List[int]:
    if kval == "all":
        return list(range(2, n + 1))
    try:
        k = int(kval)
    except ValueError:
        raise _UsageError(f"--k must be an integer or 'all', got {kval!r}")
    return [k]


def _index_names(spec: str) -> List[str]:
    names = [t.strip() for t in spec.split(",") if t.strip()]
    if not names:
        raise _UsageError("--indices is empty")
    for t in names:
        if t not in INDEX_NAMES:
            raise _UsageError(f"unknown index {t!r}, pick from {','.join(INDEX_NAMES)}")
    return names


def _bound_ids(spec: str) -> List[str]:
    tokens = [t.strip() for t in spec.split(",") if t.strip()]
    try:
        return expand_bound_ids(tokens or None)
    except ValueError as exc:
        raise _UsageError(str(exc))


def _emit_records(recs, columns, fmt: str, out: IO[str]) -> None:
    if fmt == "json":
        print(json.dumps(recs, indent=2), file=out)
        return
    writer = _csv.writer(out)
    writer.writerow(columns)
    for rec in recs:
        writer.writerow(["" if rec.get(c) is None else rec.get(c, "") for c in columns])


def _cmd_compute(args, out, err) -> int:
    names = _index_names(args.indices)
    recs = []
    for g6, g in _load_graphs(args):
        table = steiner_all_subsets(g)
        for k in _k_list(args.k, g.n):
            rec = {"graph6": g6, "n": g.n, "m": g.m, "k": k}
            if "sgut" in names:
                rec["sgut"] = steiner_gutman(g, k, table=table)
            if "sw" in names:
                rec["sw"] = steiner_wiener(g, k, table=table)
            if "sdd" in names:
                rec["sdd"] = steiner_degree_distance(g, k, table=table)
            if "gut" in names:
                rec["gut"] = gutman(g) if k == 2 else None
            recs.append(rec)
    columns = ["graph6", "n", "m", "k"] + [c for c in INDEX_NAMES if c in names]
    _emit_records(recs, columns, args.out, out)
    return 0


def _cmd_family(args, out, err) -> int:
    g = generate(FamilySpec(FAMILY_NAMES[args.name], args.n))
    if args.emit == "g6":
        print(graph6_encode(g), file=out)
    else:
        print(g.n, file=out)
        for u, v in g.edges():
            print(u, v, file=out)
    return 0


def _skip_reason(group: str, g: Graph, co_conn: bool) -> Optional[str]:
    if group == "prop21" and g.n < 3:
        return "needs order at least 3"
    if group == "cor41" and g.n < 4:
        return "needs order at least 4"
    if group in ("thm32", "cor41", "ps", "amgm") and not co_conn:
        return "complement is disconnected"
    return None


def _cmd_bounds(args, out, err) -> int:
    ids = _bound_ids(args.bound_set)
    decimal = args.decimal
    found_violation = False
    records = []
    csv_rows = []
    for g6, g in _load_graphs(args):
        table = steiner_all_subsets(g)
        gbar = complement(g)
        co_conn = is_connected(gbar)
        co_table = steiner_all_subsets(gbar) if co_conn else None
        skipped = []
        runnable = []
        for b in ids:
            group = b.split(".")[0]
            reason = _skip_reason(group, g, co_conn)
            if reason is None:
                runnable.append(b)
            elif not any(s["group"] == group for s in skipped):
                skipped.append({"group": group, "reason": reason})
        for k in _k_list(args.k, g.n):
            checks = []
            for c in (evaluate_bounds(g, k, runnable, table=table, co_table=co_table)
                      if runnable else ()):
                if not c.holds:
                    found_violation = True
                item = {
                    "bound_id": c.bound_id,
                    "case_label": c.case_label,
                    "bound_value": value_str(c.bound_value),
                    "actual": c.actual,
                    "holds": c.holds,
                    "tight": c.tight,
                }
                row = [g6, g.n, k, c.bound_id, c.case_label, value_str(c.bound_value)]
                if decimal is not None:
                    item["decimal"] = decimal_str(c.bound_value, decimal)
                    row.append(item["decimal"])
                row += [c.actual, int(c.holds), int(c.tight)]
                checks.append(item)
                csv_rows.append(row)
            records.append({"graph6": g6, "n": g.n, "k": k, "checks": checks,
                            "skipped": skipped})
    if args.out == "json":
        print(json.dumps(records, indent=2), file=out)
    else:
        writer = _csv.writer(out)
        header = ["graph6", "n", "k", "bound_id", "case_label", "bound_value"]
        if decimal is not None:
            header.append("decimal")
        header += ["actual", "holds", "tight"]
        writer.writerow(header)
        writer.writerows(csv_rows)
    return 2 if found_violation else 0


def _cmd_verify(args, out, err) -> int:
    ids = _bound_ids(args.bound_set)
    if args.n_max < 1:
        raise _UsageError("--n-max must be at least 1")
    if args.k == "all":
        k_range = "all"
    else:
        k_range = tuple(_k_list(args.k, args.n_max))
        if any(k < 2 or k > args.n_max for k in k_range):
            raise _UsageError(f"--k must lie in 2..{args.n_max}")
    collect = args.csv is not None
    reports = []
    for n in range(2, args.n_max + 1):
        spec = EnumerationSpec(
            n=n,
            require_connected=True,
            require_coconnected=args.coconnected,
            dedup_isomorphism=args.dedup,
            k_range="all" if k_range == "all" else tuple(k for k in k_range if k <= n),
        )
        if args.jobs > 1:
            graphs = enumerate_graphs(spec)
            payloads = [
                (spec, tuple(shard), tuple(ids), collect)
                for shard in shard_graphs(graphs, args.jobs)
            ]
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                shards = list(pool.map(sweep_shard, payloads))
            report = merge_reports(spec, shards)
        else:
            report = sweep(spec, ids, collect_checks=collect)
        reports.append(report)
        print(
            f"n={n}: {report.graphs_scanned} graphs, {report.checks_run} checks, "
            f"{len(report.violations)} violations, {len(report.tight_cases)} tight",
            file=err,
        )

    total_viol = sum(len(r.violations) for r in reports)
    doc = {
        "n_max": args.n_max,
        "bound_set": list(ids),
        "k": args.k,
        "require_connected": True,
        "require_coconnected": args.coconnected,
        "dedup_isomorphism": args.dedup,
        "totals": {
            "graphs_scanned": sum(r.graphs_scanned for r in reports),
            "checks_run": sum(r.checks_run for r in reports),
            "violations": total_viol,
            "tight_cases": sum(len(r.tight_cases) for r in reports),
            "formula_audit_findings": sum(len(r.formula_audit_findings) for r in reports),
        },
        "reports": [report_to_dict(r) for r in reports],
    }
    text = json.dumps(doc, indent=2)
    if args.out == "-":
        print(text, file=out)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    if collect:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            write_checks_csv([row for r in reports for row in r.checks], fh)
    return 2 if total_viol else 0


def _cmd_audit(args, out, err) -> int:
    if args.n_max < 2:
        raise _UsageError("--n-max must be at least 2")
    audits = audit_formulas(args.n_max)
    bad = [a for a in audits if not a.agrees]
    for a in bad:
        print(
            f"{a.family} n={a.n} k={a.k}: printed {a.printed_value} "
            f"!= computed {a.computed_value}",
            file=out,
        )
    print(f"{len(audits)} comparisons, {len(bad)} disagreements", file=out)
    return 2 if bad else 0


def _cmd_extremal(args, out, err) -> int:
    spec = EnumerationSpec(
        n=args.n,
        require_connected=True,
        require_coconnected=args.coconnected,
    )
    result = find_extremal(spec, args.k, args.objective)
    print(
        json.dumps(
            {
                "objective": result.objective,
                "n": args.n,
                "k": result.k,
                "value": result.value,
                "graph6s": list(result.graph6s),
            },
            indent=2,
        ),
        file=out,
    )
    return 0


def run_cli(argv, stdout: Optional[IO[str]] = None, stderr: Optional[IO[str]] = None) -> int:
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return 1
    except SystemExit as exc:  # --help
        return 0 if (exc.code or 0) == 0 else 1
    try:
        return args.func(args, out, err)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return 1
    except SteinerGutError as exc:
        print(f"error: {exc}", file=err)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return 1


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))
