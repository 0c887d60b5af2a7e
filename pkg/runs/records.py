"""
Run records, output files and the benchmark sweep.

A frontier is written as ``c_gamma,c_tau`` CSV with a ``.trees`` sidecar
holding the witness edge indices; run reports are JSON lines. Every file is
written atomically.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import os
import statistics
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable

from graphs.core import Frontier
from instances.generators import InstanceSpec, generate, instance_id
from oracle.enumeration import EnumerationBudget, exact_frontier
from solver.services import Method, MethodOutcome, solve_with_method
from solver.supported import lower_convex_hull

logger = logging.getLogger(__name__)

# bench method label -> (method, epsilon cut)
BENCH_METHODS = {
    'eps-cut': (Method.EPS, True),
    'eps-nocut': (Method.EPS, False),
    'oracle': (Method.ORACLE, True),
    'supported': (Method.SUPPORTED, True),
}

ORACLE_VERIFY_MAX_VERTICES = 8

GROUP_KEYS = ['family', 'n', 'density', 'cost_mode', 'distribution', 'edge_rule', 'metric', 'blades']

AGGREGATE_COLUMNS = GROUP_KEYS + [
    'method', 'instances', 'failures', 'timeouts', 'mean_points', 'mean_seconds',
    'seconds_per_point', 'mean_nodes', 'oracle_mismatches',
]


@dataclass
class RunRecord:
    instance_id: str
    parameters: dict
    method: str
    cut_enabled: bool = True
    points_found: int = 0
    timed_out: bool = False
    total_seconds: float = 0.0
    bnb_nodes: int = 0
    subproblems_solved: int = 0
    cut_filtered_edges: int = 0
    oracle_mismatch: bool | None = None
    error: str = ''

    @property
    def seconds_per_point(self) -> float:
        return self.total_seconds / max(1, self.points_found)

    @property
    def failed(self) -> bool:
        return bool(self.error)

    def as_dict(self, timings: bool = True) -> dict:
        values = asdict(self)
        values['seconds_per_point'] = self.seconds_per_point
        if not timings:
            values.pop('total_seconds')
            values.pop('seconds_per_point')
        return values

    @classmethod
    def from_outcome(cls, label: str, parameters: dict, method: str, outcome: MethodOutcome,
                     cut_enabled: bool = True) -> 'RunRecord':
        report = outcome.report
        return cls(
            instance_id=label,
            parameters=parameters,
            method=method,
            cut_enabled=cut_enabled,
            points_found=report.points_found,
            timed_out=report.timed_out,
            total_seconds=report.elapsed_seconds,
            bnb_nodes=report.bnb_nodes,
            subproblems_solved=report.subproblems_solved,
            cut_filtered_edges=report.cut_filtered_edges,
        )


def atomic_write(path, text: str) -> None:
    """Write ``text`` to a temporary file next to ``path`` and move it into place."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    handle, temporary = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix='.tmp')
    try:
        with os.fdopen(handle, 'w', encoding='utf-8', newline='') as stream:
            stream.write(text)
        os.replace(temporary, path)
    except BaseException:
        if os.path.exists(temporary):
            os.unlink(temporary)
        raise


def frontier_csv(frontier: Frontier) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(['c_gamma', 'c_tau'])
    writer.writerows(frontier.as_tuples())
    return buffer.getvalue()


def frontier_trees(frontier: Frontier) -> str:
    """One line per point: c_gamma c_tau followed by the witness edge indices"""
    lines = []
    for entry in frontier:
        fields = [entry.point.c_gamma, entry.point.c_tau, *entry.tree.sorted_edges()]
        lines.append(' '.join(str(value) for value in fields))
    return ''.join(line + '\n' for line in lines)


def report_lines(records: Iterable[RunRecord], timings: bool = True) -> str:
    return ''.join(json.dumps(record.as_dict(timings), sort_keys=True) + '\n' for record in records)


def write_frontier(output, frontier: Frontier, record: RunRecord, report=None) -> None:
    output = Path(output)
    atomic_write(output, frontier_csv(frontier))
    atomic_write(output.with_name(output.name + '.trees'), frontier_trees(frontier))
    atomic_write(report or output.with_name(output.name + '.report'), report_lines([record]))


@dataclass(frozen=True)
class BenchTask:
    spec: InstanceSpec
    method: str
    time_limit: float | None
    verify_oracle: bool = False
    max_trees: int | None = None


@dataclass
class BenchResult:
    record: RunRecord
    outcome: MethodOutcome | None = field(default=None, repr=False)


def _oracle_mismatch(graph, method: str, frontier: Frontier, max_trees: int | None) -> bool | None:
    if graph.n > ORACLE_VERIFY_MAX_VERTICES:
        return None
    budget = EnumerationBudget(max_trees) if max_trees is not None else EnumerationBudget()
    expected = exact_frontier(graph, budget)
    if method == Method.SUPPORTED:
        return lower_convex_hull(expected) != frontier.objective_points()
    return expected.as_tuples() != frontier.as_tuples()


def run_bench_task(task: BenchTask) -> BenchResult:
    """Solve one sweep instance; failures are recorded, never raised."""
    label = instance_id(task.spec)
    parameters = task.spec.parameters()
    method, cut_enabled = BENCH_METHODS[task.method]
    try:
        graph = generate(task.spec)
        outcome = solve_with_method(graph, method, cut_enabled=cut_enabled, time_limit=task.time_limit,
                                    max_trees=task.max_trees)
        record = RunRecord.from_outcome(label, parameters, task.method, outcome, cut_enabled)
        if task.verify_oracle and not outcome.timed_out:
            record.oracle_mismatch = _oracle_mismatch(graph, method, outcome.frontier, task.max_trees)
            if record.oracle_mismatch:
                logger.warning("Oracle mismatch on %s with %s", label, task.method)
    except Exception as exc:
        logger.warning("Bench run %s with %s failed: %s", label, task.method, exc)
        error = '; '.join(exc.messages) if hasattr(exc, 'messages') else str(exc)
        return BenchResult(RunRecord(label, parameters, task.method, cut_enabled, error=error or type(exc).__name__))
    return BenchResult(record, outcome)


def run_bench(tasks: list[BenchTask], parallel: int = 1) -> list[BenchResult]:
    """Results in task order; with ``parallel`` > 1 instances run in separate processes."""
    if parallel <= 1 or len(tasks) <= 1:
        return [run_bench_task(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=parallel) as pool:
        return list(pool.map(run_bench_task, tasks))


def _group_key(record: RunRecord) -> tuple:
    return tuple(record.parameters.get(key, '') for key in GROUP_KEYS) + (record.method,)


def _mean(values: list) -> float | str:
    return statistics.fmean(values) if values else ''


def aggregate(records: Iterable[RunRecord]) -> list[dict]:
    """One row per instance class and method, in order of first appearance."""
    groups: dict[tuple, list[RunRecord]] = {}
    for record in records:
        groups.setdefault(_group_key(record), []).append(record)

    rows = []
    for key, members in groups.items():
        solved = [record for record in members if not record.failed]
        verified = [record for record in solved if record.oracle_mismatch is not None]
        row = dict(zip(GROUP_KEYS + ['method'], key))
        row.update(
            instances=len(members),
            failures=len(members) - len(solved),
            timeouts=sum(record.timed_out for record in solved),
            mean_points=_mean([record.points_found for record in solved]),
            mean_seconds=_mean([record.total_seconds for record in solved]),
            seconds_per_point=_mean([record.seconds_per_point for record in solved]),
            mean_nodes=_mean([record.bnb_nodes for record in solved]),
            oracle_mismatches=sum(record.oracle_mismatch for record in verified) if verified else '',
        )
        rows.append(row)
    return rows


def aggregate_csv(rows: list[dict]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=AGGREGATE_COLUMNS, lineterminator='\n')
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()
