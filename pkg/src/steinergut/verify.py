"""Exhaustive bound verification over all small graphs.

A sweep enumerates every graph matching an EnumerationSpec (connected by
default, optionally complement-connected, deduped by isomorphism or raw
labeled), evaluates the requested bound checks for every admissible k, and
collects violations and equality cases into a VerificationReport.  Bounds
whose preconditions a graph fails to meet (too small an order, disconnected
complement) are skipped quietly and never counted as run.

Enumeration is capped at order 8.  Deduped enumeration builds each level by
attaching one new vertex to every canonical graph of the previous level and
keeping one canonical representative per isomorphism class; labeled
enumeration streams edge bitmasks in ascending order and is only meant for
small orders (it visits 2^21 graphs already at order 7).
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, IO, List, Optional, Sequence, Tuple, Union

from .bounds import (
    EqualityWitness,
    diagnose_equality,
    evaluate_bounds,
    expand_bound_ids,
)
from .canon import canonical_key_and_perms, relabel_rows
from .errors import KOutOfRange, NoCaseApplies, OrderTooLarge
from .exact import Scalar, value_str
from .families import FormulaAudit, audit_for_order
from .graph import Graph, complement, edge_mask, from_edge_mask, is_connected, iter_bits
from .graph6 import graph6_encode
from .indices import steiner_gutman
from .steiner import steiner_all_subsets

ENUMERATION_CAP = 8

# groups that compare a graph against its complement
_PAIRED = frozenset(("thm32", "cor41", "ps", "amgm"))


@dataclass(frozen=True)
class EnumerationSpec:
    """What to enumerate and which k values to sweep."""

    n: int
    require_connected: bool = True
    require_coconnected: bool = False
    dedup_isomorphism: bool = True
    k_range: Union[str, Tuple[int, ...]] = "all"


def _k_values(spec: EnumerationSpec) -> List[int]:
    if spec.k_range == "all":
        return list(range(2, spec.n + 1))
    ks = []
    for k in spec.k_range:
        if not 2 <= k <= spec.n:
            raise KOutOfRange(f"k={k} outside 2..{spec.n}")
        ks.append(k)
    return sorted(set(ks))


@lru_cache(maxsize=None)
def _canonical_graphs(n: int, connected_only: bool) -> Tuple[Graph, ...]:
    """All order-n graphs up to isomorphism, in canonical labeling.

    Every order-n graph is some order-(n-1) graph plus one new vertex, and
    when both are connected the new vertex can be chosen non-cut so the
    parent is connected and the attachment nonempty.  Sweeping all masks
    over all parents of the previous level therefore hits every class.
    """
    if n == 1:
        return (Graph(1, (0,), 0),)
    parents = _canonical_graphs(n - 1, connected_only)
    lo = 1 if connected_only else 0
    seen: Dict[Tuple[int, ...], Graph] = {}
    top = 1 << (n - 1)
    for parent in parents:
        base = list(parent.adj) + [0]
        for mask in range(lo, 1 << (n - 1)):
            adj = list(base)
            adj[n - 1] = mask
            for v in iter_bits(mask):
                adj[v] |= top
            rows = tuple(adj)
            key, perms = canonical_key_and_perms(rows)
            if key not in seen:
                seen[key] = Graph(n, relabel_rows(rows, perms[0]), parent.m + mask.bit_count())
    return tuple(sorted(seen.values(), key=lambda g: (g.m, edge_mask(g))))


def enumerate_graphs(spec: EnumerationSpec) -> List[Graph]:
    """Materialize the graphs selected by ``spec``, in deterministic order.

    Deduped mode orders canonical representatives by (edge count, edge
    bitmask); labeled mode orders by ascending edge bitmask.
    """
    n = spec.n
    if not 1 <= n <= ENUMERATION_CAP:
        raise OrderTooLarge(f"enumeration handles orders 1..{ENUMERATION_CAP}, got {n}")
    if spec.dedup_isomorphism:
        pool: Sequence[Graph] = _canonical_graphs(n, spec.require_connected)
    else:
        pool = [from_edge_mask(n, em) for em in range(1 << (n * (n - 1) // 2))]
        if spec.require_connected:
            pool = [g for g in pool if is_connected(g)]
    if spec.require_coconnected:
        pool = [g for g in pool if is_connected(complement(g))]
    return list(pool)


@dataclass(frozen=True)
class Violation:
    graph6: str
    k: int
    bound_id: str
    case_label: str
    bound_value: Scalar
    actual: int


@dataclass(frozen=True)
class TightCase:
    graph6: str
    k: int
    bound_id: str
    case_label: str
    witness: EqualityWitness


@dataclass(frozen=True)
class CheckRow:
    n: int
    graph6: str
    k: int
    bound_id: str
    case_label: str
    bound_value: Scalar
    actual: int
    holds: bool
    tight: bool


@dataclass(frozen=True)
class VerificationReport:
    spec: EnumerationSpec
    bound_set: Tuple[str, ...]
    graphs_scanned: int
    checks_run: int
    violations: Tuple[Violation, ...]
    tight_cases: Tuple[TightCase, ...]
    formula_audit_findings: Tuple[FormulaAudit, ...]
    checks: Tuple[CheckRow, ...]


def _applicable(group: str, n: int, co_connected: bool) -> bool:
    if group == "prop21":
        return n >= 3
    if group == "lem22":
        return True
    if group == "cor41":
        return co_connected and n >= 4
    return co_connected


def _audit_findings(n: int) -> Tuple[FormulaAudit, ...]:
    if n < 2:
        return ()
    return tuple(a for a in audit_for_order(n) if not a.agrees)


def sweep(
    spec: EnumerationSpec,
    bound_set: Optional[Sequence[str]] = None,
    *,
    graphs: Optional[Sequence[Graph]] = None,
    collect_checks: bool = False,
    include_formula_audit: bool = True,
) -> VerificationReport:
    """Run every requested bound check over every enumerated graph.

    ``graphs`` overrides enumeration (used by the parallel driver to hand a
    contiguous slice to each worker; slices merged in order reproduce the
    single-process report exactly).
    """
    ids = expand_bound_ids(list(bound_set) if bound_set is not None else None)
    if graphs is None:
        graphs = enumerate_graphs(spec)
    ks = _k_values(spec)

    checks_run = 0
    violations: List[Violation] = []
    tights: List[TightCase] = []
    rows: List[CheckRow] = []
    need_pair = any(b.split(".")[0] in _PAIRED for b in ids)

    for g in graphs:
        g6 = graph6_encode(g)
        table = steiner_all_subsets(g)
        gbar = complement(g)
        co_conn = is_connected(gbar)
        co_table = steiner_all_subsets(gbar) if (co_conn and need_pair) else None
        runnable = [b for b in ids if _applicable(b.split(".")[0], g.n, co_conn)]
        if not runnable:
            continue
        witness_cache: Dict[int, EqualityWitness] = {}

        for k in ks:
            for check in evaluate_bounds(g, k, runnable, table=table, co_table=co_table):
                checks_run += 1
                if collect_checks:
                    rows.append(
                        CheckRow(
                            g.n, g6, k, check.bound_id, check.case_label,
                            check.bound_value, check.actual, check.holds, check.tight,
                        )
                    )
                if not check.holds:
                    violations.append(
                        Violation(
                            g6, k, check.bound_id, check.case_label,
                            check.bound_value, check.actual,
                        )
                    )
                elif check.tight:
                    if k not in witness_cache:
                        witness_cache[k] = diagnose_equality(
                            g, k, table=table, co_table=co_table
                        )
                    tights.append(
                        TightCase(g6, k, check.bound_id, check.case_label, witness_cache[k])
                    )

    audit = _audit_findings(spec.n) if include_formula_audit else ()
    return VerificationReport(
        spec=spec,
        bound_set=tuple(ids),
        graphs_scanned=len(graphs),
        checks_run=checks_run,
        violations=tuple(violations),
        tight_cases=tuple(tights),
        formula_audit_findings=audit,
        checks=tuple(rows),
    )


def shard_graphs(graphs: Sequence[Graph], jobs: int) -> List[List[Graph]]:
    """Split into ``jobs`` contiguous slices of near-equal size, order kept."""
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    total = len(graphs)
    out = []
    start = 0
    for i in range(jobs):
        stop = start + (total - start + (jobs - i - 1)) // (jobs - i)
        out.append(list(graphs[start:stop]))
        start = stop
    return out


def sweep_shard(payload: Tuple[EnumerationSpec, Tuple[Graph, ...], Tuple[str, ...], bool]):
    """Worker entry point for process pools; audit findings left to the merge."""
    spec, graphs, bound_set, collect = payload
    return sweep(
        spec, bound_set, graphs=graphs, collect_checks=collect, include_formula_audit=False
    )


def merge_reports(
    spec: EnumerationSpec,
    shards: Sequence[VerificationReport],
    *,
    include_formula_audit: bool = True,
) -> VerificationReport:
    """Concatenate shard reports in shard order into one report."""
    bound_set = shards[0].bound_set if shards else tuple(expand_bound_ids(None))
    violations: List[Violation] = []
    tights: List[TightCase] = []
    rows: List[CheckRow] = []
    scanned = 0
    run = 0
    for rep in shards:
        scanned += rep.graphs_scanned
        run += rep.checks_run
        violations.extend(rep.violations)
        tights.extend(rep.tight_cases)
        rows.extend(rep.checks)
    audit = _audit_findings(spec.n) if include_formula_audit else ()
    return VerificationReport(
        spec=spec,
        bound_set=bound_set,
        graphs_scanned=scanned,
        checks_run=run,
        violations=tuple(violations),
        tight_cases=tuple(tights),
        formula_audit_findings=audit,
        checks=tuple(rows),
    )


OBJECTIVES = ("max-sgut", "min-sgut", "max-sum", "min-sum", "max-product", "min-product")


@dataclass(frozen=True)
class ExtremalResult:
    objective: str
    k: int
    value: int
    graph6s: Tuple[str, ...]


def find_extremal(spec: EnumerationSpec, k: int, objective: str) -> ExtremalResult:
    """Graphs attaining the extreme value of an index quantity, ties kept.

    The sum and product objectives compare a graph with its complement and
    silently restrict to graphs whose complement is connected.
    """
    if objective not in OBJECTIVES:
        raise ValueError(f"unknown objective {objective!r}")
    if not 2 <= k <= spec.n:
        raise KOutOfRange(f"k={k} outside 2..{spec.n}")
    sense, quantity = objective.split("-", 1)
    best: Optional[int] = None
    hits: List[str] = []
    for g in enumerate_graphs(spec):
        table = steiner_all_subsets(g)
        if quantity == "sgut":
            val = steiner_gutman(g, k, table=table)
        else:
            gbar = complement(g)
            if not is_connected(gbar):
                continue
            a = steiner_gutman(g, k, table=table)
            b = steiner_gutman(gbar, k, table=steiner_all_subsets(gbar))
            val = a + b if quantity == "sum" else a * b
        if best is None or (val > best if sense == "max" else val < best):
            best = val
            hits = [graph6_encode(g)]
        elif val == best:
            hits.append(graph6_encode(g))
    if best is None:
        raise NoCaseApplies(f"no enumerated graph admits the {objective} objective")
    return ExtremalResult(objective, k, best, tuple(hits))


def report_to_dict(report: VerificationReport) -> Dict[str, object]:
    """JSON-ready dict; exact values serialized as "num/den" strings."""
    spec = report.spec
    return {
        "spec": {
            "n": spec.n,
            "require_connected": spec.require_connected,
            "require_coconnected": spec.require_coconnected,
            "dedup_isomorphism": spec.dedup_isomorphism,
            "k_range": "all" if spec.k_range == "all" else list(spec.k_range),
        },
        "bound_set": list(report.bound_set),
        "graphs_scanned": report.graphs_scanned,
        "checks_run": report.checks_run,
        "violations": [
            {
                "graph6": v.graph6,
                "k": v.k,
                "bound_id": v.bound_id,
                "case_label": v.case_label,
                "bound_value": value_str(v.bound_value),
                "actual": v.actual,
            }
            for v in report.violations
        ],
        "tight_cases": [
            {
                "graph6": t.graph6,
                "k": t.k,
                "bound_id": t.bound_id,
                "case_label": t.case_label,
                "witness": t.witness.as_dict(),
            }
            for t in report.tight_cases
        ],
        "formula_audit_findings": [
            {
                "family": a.family,
                "n": a.n,
                "k": a.k,
                "printed_value": a.printed_value,
                "computed_value": a.computed_value,
                "agrees": a.agrees,
            }
            for a in report.formula_audit_findings
        ],
    }


CSV_HEADER = ("n", "graph6", "k", "bound_id", "case_label", "bound_value", "actual", "holds", "tight")


def write_checks_csv(rows: Sequence[CheckRow], stream: IO[str]) -> None:
    """One line per executed check; bound values in exact notation."""
    writer = csv.writer(stream)
    writer.writerow(CSV_HEADER)
    for r in rows:
        writer.writerow(
            (
                r.n, r.graph6, r.k, r.bound_id, r.case_label,
                value_str(r.bound_value), r.actual, int(r.holds), int(r.tight),
            )
        )
