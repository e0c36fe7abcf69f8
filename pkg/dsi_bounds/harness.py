"""Verification harness: per-graph inequality chains, corpus scans and report rendering."""

from __future__ import annotations

import json
import logging
from collections import Counter
from collections.abc import Iterable, Iterator, Mapping, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any

from .config import DEFAULT_GUARDS, OracleGuards
from .const import (
    KIND_DOMINATION,
    KIND_INDEPENDENCE,
    LOG_CHAIN_FAILED,
    REPORT_OPTIONAL_KEYS,
    REPORT_REQUIRED_KEYS,
)
from .dsi import (
    RationalBound,
    annihilation,
    chromatic_dsi_bound,
    claw_w,
    dom_lower_w,
    dom_upper_z,
    dom_weak_lower,
    faudree_bound,
    k1p_free_bound,
    lower_j_annihilation,
    planar_bound,
    upper_j_annihilation,
    weak_lower,
    weak_upper,
)
from .exceptions import ChainFailure, GraphInputError, PreconditionError
from .graph import Graph, VertexSet, cut_edge_count, induced_edge_count
from .graph6 import to_graph6
from .oracle import (
    chi_j,
    enumerate_labeled_graphs,
    f_stats,
    is_j_dominating,
    is_j_independent,
    is_K1p_free,
    labeled_graph_count,
    max_upper_annihilating_size,
    min_lower_annihilating_size,
)

_LOGGER = logging.getLogger(__name__)

# Edge masks handed to one worker task.
CORPUS_CHUNK = 2048

# Counter key for graphs where c' <= c_j is not asserted.
SKIPPED_WEAK_LOWER = "c_weak<=c_j skipped (isolated vertex)"


@dataclass(frozen=True)
class ChainCheck:
    """One verified comparison: left <= right or left == right."""

    name: str
    left: int
    right: int
    relation: str = "<="

    @property
    def passed(self) -> bool:
        if self.relation == "==":
            return self.left == self.right
        return self.left <= self.right

    def as_dict(self) -> dict[str, Any]:
        return {"name": self.name, "left": self.left, "right": self.right, "pass": self.passed}


@dataclass
class BoundReport:
    """Everything computed for one graph at one j."""

    graph6: str
    n: int
    m: int
    j: int
    p: int | None = None
    alpha_j: int | None = None
    gamma_j: int | None = None
    chi_j: int | None = None
    bounds: dict[str, int] = field(default_factory=dict)
    rationals: dict[str, RationalBound] = field(default_factory=dict)
    checks: list[ChainCheck] = field(default_factory=list)

    @property
    def failures(self) -> list[ChainCheck]:
        return [check for check in self.checks if not check.passed]

    def value(self, key: str) -> Any:
        """Return the reported value for key, or None when it was not computed."""
        if key in ("graph6", "n", "m", "j", "p", "alpha_j", "gamma_j", "chi_j"):
            return getattr(self, key)
        if key in self.rationals:
            return self.rationals[key]
        return self.bounds.get(key)

    def as_dict(self) -> dict[str, Any]:
        """Render the JSON-lines row: required keys, present optional keys, then checks."""
        row: dict[str, Any] = {}
        for key in REPORT_REQUIRED_KEYS:
            row[key] = _plain(self.value(key))
        for key in REPORT_OPTIONAL_KEYS:
            value = self.value(key)
            if value is not None:
                row[key] = _plain(value)
        row["checks"] = [check.as_dict() for check in self.checks]
        return row


@dataclass(frozen=True)
class ExampleResult:
    """Outcome of one catalog entry; only the expected keys decide `passed`."""

    name: str
    expected: Mapping[str, Any]
    actual: Mapping[str, Any]
    provenance: str

    @property
    def passed(self) -> bool:
        return all(self.actual.get(key) == value for key, value in self.expected.items())

    def as_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "provenance": self.provenance,
            "expected": dict(self.expected),
            "actual": dict(self.actual),
            "pass": self.passed,
        }


@dataclass
class ScanSummary:
    """Aggregate of a corpus scan. Counts are order independent."""

    n_max: int
    j_values: tuple[int, ...]
    domination: bool
    graph_count: int = 0
    failure_count: int = 0
    check_count: int = 0
    claw_free_count: int = 0
    graphs_per_order: dict[int, int] = field(default_factory=dict)
    tightness: Counter = field(default_factory=Counter)
    first_failure: ChainFailure | None = None

    def merge(self, tally: _ChunkTally) -> None:
        self.graph_count += tally.graphs
        self.failure_count += tally.failures
        self.check_count += tally.checks
        self.claw_free_count += tally.claw_free
        self.graphs_per_order[tally.n] = self.graphs_per_order.get(tally.n, 0) + tally.graphs
        self.tightness.update(tally.tightness)
        if self.first_failure is None and tally.first_failure is not None:
            self.first_failure = tally.first_failure

    def as_dict(self) -> dict[str, Any]:
        return {
            "n_max": self.n_max,
            "j_values": list(self.j_values),
            "domination": self.domination,
            "graphs": self.graph_count,
            "graphs_per_order": {str(n): count for n, count in sorted(self.graphs_per_order.items())},
            "checks": self.check_count,
            "failures": self.failure_count,
            "claw_free": self.claw_free_count,
            "tightness": dict(sorted(self.tightness.items())),
            "first_failure": None if self.first_failure is None else str(self.first_failure),
        }


def _plain(value: Any) -> Any:
    if isinstance(value, RationalBound):
        return value.as_dict()
    return value


class _Checks:
    """Collects ChainChecks for one graph."""

    def __init__(self) -> None:
        self.items: list[ChainCheck] = []

    def le(self, name: str, left: int, right: int) -> None:
        self.items.append(ChainCheck(name, left, right, "<="))

    def eq(self, name: str, left: int, right: int) -> None:
        self.items.append(ChainCheck(name, left, right, "=="))

    def edge_split(self, graph: Graph, subset: VertexSet) -> None:
        # m[S] + m[V - S] + m(S, V - S) = m
        inside = induced_edge_count(graph, subset) + induced_edge_count(graph, graph.full_mask & ~subset)
        self.eq("witness_edge_identity", inside + cut_edge_count(graph, subset), graph.m)


def _finish(report: BoundReport, strict: bool) -> BoundReport:
    for check in report.failures:
        _LOGGER.error(LOG_CHAIN_FAILED, check.name, report.graph6, check.left, check.right)
        if strict:
            raise ChainFailure(report.graph6, check.name, f"{check.left} {check.relation} {check.right} is false")
    return report


def verify_independence_chain(
    graph: Graph,
    j: int,
    p: int = 3,
    guards: OracleGuards = DEFAULT_GUARDS,
    *,
    strict: bool = True,
) -> BoundReport:
    """Compute every independence-side bound for (graph, j) and check the chain.

    The chain is c' <= c_j <= alpha_j <= a_j <= chromatic bound <= a'_j, with
    a'_1 = a, the annihilating-set characterisations of a_j and c_j, and the
    invariants of the optimal family. c' <= c_j is only asserted when the graph
    has no isolated vertex. On K_(1,p)-free graphs the claw chain is added.

    Raises:
        ChainFailure: strict and a check failed.
        CapacityError: The graph exceeds an oracle guard.
    """
    stats = f_stats(graph, j, KIND_INDEPENDENCE, guards)
    alpha = stats.optimum
    chi = chi_j(graph, j, guards)
    report = BoundReport(to_graph6(graph), graph.n, graph.m, j, p=p, alpha_j=alpha, chi_j=chi)

    a = annihilation(graph)
    a_j = upper_j_annihilation(graph, j, stats)
    c_j = lower_j_annihilation(graph, j, stats)
    a_weak = weak_upper(graph, j)
    c_weak = weak_lower(graph)
    chrom = chromatic_dsi_bound(graph, j, chi)
    w = claw_w(graph, p)
    report.bounds.update(a=a, a_j=a_j, c_j=c_j, a_weak=a_weak, c_weak=c_weak, chrom_bound=chrom, claw_w=w)

    delta = graph.min_degree
    report.rationals["faudree"] = faudree_bound(graph, p)
    if delta >= j - 1:
        report.rationals["k1p_free"] = k1p_free_bound(graph, j, p)
    try:
        report.rationals["planar"] = planar_bound(graph, j)
    except PreconditionError:
        pass

    checks = _Checks()
    if delta >= 1:
        checks.le("c_weak<=c_j", c_weak, c_j)
    checks.le("c_j<=alpha_j", c_j, alpha)
    checks.le("alpha_j<=a_j", alpha, a_j)
    checks.le("a_j<=chrom_bound", a_j, chrom)
    checks.le("chrom_bound<=a_weak", chrom, a_weak)
    if j == 1:
        checks.eq("a_weak==a", a_weak, a)
        checks.le("a_j<=a", a_j, a)
    checks.eq("a_j==max_upper_annihilating", a_j, max_upper_annihilating_size(graph, j, stats, guards))
    checks.eq("c_j==min_lower_annihilating", c_j, min_lower_annihilating_size(graph, j, stats, guards))

    checks.eq("witness_size", stats.witness.bit_count(), alpha)
    checks.eq("witness_j_independent", int(is_j_independent(graph, stats.witness, j)), 1)
    checks.edge_split(graph, stats.witness)
    checks.le("family_inner_edges", 2 * stats.max_inner_edges, alpha * (j - 1))
    checks.le("family_outside_neighbors", graph.n - alpha, stats.min_degree_sum)

    if "planar" in report.rationals:
        checks.le("alpha_j<=planar", alpha, report.rationals["planar"].floor)
    if is_K1p_free(graph, p):
        if j == 1:
            checks.le("a_j<=claw_w", a_j, w)
            checks.le("claw_w<=faudree", w, report.rationals["faudree"].floor)
        if "k1p_free" in report.rationals:
            checks.le("alpha_j<=k1p_free", alpha, report.rationals["k1p_free"].floor)

    report.checks = checks.items
    return _finish(report, strict)


def verify_domination_chain(
    graph: Graph,
    j: int,
    guards: OracleGuards = DEFAULT_GUARDS,
    *,
    strict: bool = True,
) -> BoundReport:
    """Compute z_j, w_j and w'_j for (graph, j) and check w_j <= gamma_j <= z_j and w'_j <= gamma_j.

    Raises:
        ChainFailure: strict and a check failed.
        CapacityError: The graph exceeds an oracle guard.
    """
    stats = f_stats(graph, j, KIND_DOMINATION, guards)
    gamma = stats.optimum
    report = BoundReport(to_graph6(graph), graph.n, graph.m, j, gamma_j=gamma)

    z = dom_upper_z(graph, j, stats)
    w = dom_lower_w(graph, j, stats)
    w_weak = dom_weak_lower(graph, j)
    report.bounds.update(z_j=z, w_j=w, w_weak=w_weak)

    checks = _Checks()
    checks.le("w_j<=gamma_j", w, gamma)
    checks.le("gamma_j<=z_j", gamma, z)
    checks.le("w_weak<=gamma_j", w_weak, gamma)
    checks.eq("witness_size", stats.witness.bit_count(), gamma)
    checks.eq("witness_j_dominating", int(is_j_dominating(graph, stats.witness, j)), 1)
    checks.edge_split(graph, stats.witness)
    checks.le("family_outside_neighbors", j * (graph.n - gamma), stats.min_degree_sum)

    report.checks = checks.items
    return _finish(report, strict)


@dataclass
class _ChunkTally:
    n: int
    graphs: int = 0
    failures: int = 0
    checks: int = 0
    claw_free: int = 0
    tightness: Counter = field(default_factory=Counter)
    first_failure: ChainFailure | None = None


@dataclass(frozen=True)
class _ChunkTask:
    n: int
    start: int
    stop: int
    step: int
    j_values: tuple[int, ...]
    domination: bool
    p: int
    guards: OracleGuards
    strict: bool


def _tally_report(tally: _ChunkTally, report: BoundReport) -> None:
    tally.checks += len(report.checks)
    failed = report.failures
    if failed and tally.first_failure is None:
        check = failed[0]
        tally.first_failure = ChainFailure(report.graph6, check.name, f"{check.left} {check.relation} {check.right} is false")
    tally.failures += len(failed)


def _scan_chunk(task: _ChunkTask) -> _ChunkTally:
    """Run every requested chain over one slice of the edge-mask range."""
    tally = _ChunkTally(task.n)
    for graph in enumerate_labeled_graphs(task.n, task.start, task.stop, task.guards, task.step):
        tally.graphs += 1
        claw_free = is_K1p_free(graph, task.p)
        tally.claw_free += claw_free
        for j in task.j_values:
            report = verify_independence_chain(graph, j, task.p, task.guards, strict=task.strict)
            _tally_report(tally, report)
            alpha = report.alpha_j
            tally.tightness[f"j={j} alpha_j==a_j"] += alpha == report.bounds["a_j"]
            tally.tightness[f"j={j} c_j==alpha_j"] += report.bounds["c_j"] == alpha
            tally.tightness[f"j={j} alpha_j==chrom_bound"] += alpha == report.bounds["chrom_bound"]
            if graph.min_degree == 0:
                tally.tightness[SKIPPED_WEAK_LOWER] += 1
            if j == 1 and claw_free:
                tally.tightness["j=1 alpha==claw_w (claw-free)"] += alpha == report.bounds["claw_w"]
            if task.domination:
                report = verify_domination_chain(graph, j, task.guards, strict=task.strict)
                _tally_report(tally, report)
                gamma = report.gamma_j
                tally.tightness[f"j={j} gamma_j==z_j"] += gamma == report.bounds["z_j"]
                tally.tightness[f"j={j} gamma_j==w_j"] += gamma == report.bounds["w_j"]
    return tally


def _chunk_tasks(
    n_min: int,
    n_max: int,
    j_values: tuple[int, ...],
    domination: bool,
    p: int,
    guards: OracleGuards,
    strict: bool,
    step_for,
) -> Iterator[_ChunkTask]:
    for n in range(n_min, n_max + 1):
        total = labeled_graph_count(n)
        step = step_for(n)
        width = CORPUS_CHUNK * step
        for start in range(0, total, width):
            yield _ChunkTask(n, start, min(start + width, total), step, j_values, domination, p, guards, strict)


def corpus_scan(
    n_max: int,
    j_values: Iterable[int],
    domination: bool = False,
    guards: OracleGuards = DEFAULT_GUARDS,
    workers: int = 1,
    *,
    n_min: int = 1,
    p: int = 3,
    sample_order: int | None = None,
    sample_step: int = 1,
    strict: bool = True,
) -> ScanSummary:
    """Verify every chain on every labeled graph of order n_min..n_max.

    sample_order/sample_step thin out one order (normally 7) to every
    sample_step-th edge mask. Chunks are merged in mask order so the first
    failure reported is the same for any worker count.

    Raises:
        ChainFailure: strict and any check failed; carries the graph6 string.
        CapacityError: n_max exceeds guards.corpus.
        GraphInputError: Empty j_values, j < 1 or an invalid order range.
    """
    js = tuple(sorted(set(j_values)))
    if not js or js[0] < 1:
        raise GraphInputError(f"j_values must be a non-empty set of positive integers, got {list(j_values)}")
    if not 1 <= n_min <= n_max:
        raise GraphInputError(f"Invalid order range {n_min}..{n_max}")
    guards.check("corpus", n_max, "corpus_scan")

    def step_for(n: int) -> int:
        return sample_step if n == sample_order else 1

    summary = ScanSummary(n_max, js, domination)
    tasks = list(_chunk_tasks(n_min, n_max, js, domination, p, guards, strict, step_for))
    _LOGGER.info("Scanning orders %d..%d for j in %s over %d chunks with %d worker(s)", n_min, n_max, js, len(tasks), workers)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            for tally in executor.map(_scan_chunk, tasks):
                summary.merge(tally)
    else:
        for task in tasks:
            summary.merge(_scan_chunk(task))
    _LOGGER.info("Scanned %d graphs, %d checks, %d failures", summary.graph_count, summary.check_count, summary.failure_count)
    return summary


# -- Rendering -------------------------------------------------------------


def _rows(items: Iterable[Any]) -> list[dict[str, Any]]:
    return [item if isinstance(item, dict) else item.as_dict() for item in items]


def render_json_lines(items: Iterable[Any]) -> str:
    """One compact JSON object per line, keys in report order."""
    return "".join(json.dumps(row, separators=(",", ":")) + "\n" for row in _rows(items))


def _is_rational(value: Any) -> bool:
    return isinstance(value, dict) and set(value) == {"num", "den", "floor"}


def _tsv_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if _is_rational(value):
        return f"{value['num']}/{value['den']}"
    if isinstance(value, list) and all(isinstance(item, dict) and "pass" in item for item in value):
        return ",".join(f"{item['name']}={'pass' if item['pass'] else 'FAIL'}" for item in value)
    if isinstance(value, (dict, list)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def _columns(rows: Sequence[dict[str, Any]]) -> list[str]:
    columns: list[str] = []
    for row in rows:
        columns.extend(key for key in row if key not in columns)
    return columns


def render_tsv(items: Iterable[Any]) -> str:
    """A header line plus one tab-separated line per item; absent keys are empty cells."""
    rows = _rows(items)
    if not rows:
        return ""
    columns = _columns(rows)
    lines = ["\t".join(columns)]
    lines.extend("\t".join(_tsv_cell(row.get(column)) for column in columns) for row in rows)
    return "\n".join(lines) + "\n"


def _human_cell(value: Any) -> str:
    if _is_rational(value):
        return f"{value['num']}/{value['den']} (floor {value['floor']})"
    if isinstance(value, dict):
        return ", ".join(f"{key}={_human_cell(item)}" for key, item in value.items()) or "-"
    if value is None:
        return "-"
    return str(value)


def render_human(items: Iterable[Any]) -> str:
    """Readable blocks: a title line then indented key: value lines."""
    blocks = []
    for row in _rows(items):
        keys = list(row)
        title_key = keys[0]
        lines = [f"{title_key} {row[title_key]}"]
        for key in keys[1:]:
            value = row[key]
            if key == "checks" and isinstance(value, list):
                lines.append("  checks:")
                for check in value:
                    mark = "ok" if check["pass"] else "FAIL"
                    lines.append(f"    [{mark}] {check['name']}: {check['left']} vs {check['right']}")
                continue
            lines.append(f"  {key}: {_human_cell(value)}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + ("\n" if blocks else "")
