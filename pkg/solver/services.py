"""
Solver services - one entry point per solution method, shared by the
management commands and the API, plus persistence of finished runs.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass

from django.db import models, transaction

from graphs.core import Frontier, Graph
from oracle.enumeration import EnumerationBudget, exact_frontier

from .exceptions import TimeLimitExceeded
from .frontier import DEFAULT_TIME_LIMIT, SolveReport, solve_frontier
from .supported import supported_frontier

logger = logging.getLogger(__name__)


class Method(models.TextChoices):
    EPS = 'eps', 'Epsilon-constraint'
    ORACLE = 'oracle', 'Spanning tree enumeration'
    SUPPORTED = 'supported', 'Supported points only'


@dataclass(frozen=True)
class MethodOutcome:
    method: str
    frontier: Frontier
    report: SolveReport

    @property
    def timed_out(self) -> bool:
        return self.report.timed_out


def solve_with_method(
    graph: Graph,
    method: str = Method.EPS,
    cut_enabled: bool = True,
    time_limit: float | None = DEFAULT_TIME_LIMIT,
    max_trees: int | None = None,
) -> MethodOutcome:
    """Run one method; time-outs come back as partial frontiers."""
    if method == Method.EPS:
        frontier, report = solve_frontier(graph, cut_enabled=cut_enabled, time_limit=time_limit)
        return MethodOutcome(Method.EPS, frontier, report)

    started = time.perf_counter()
    report = SolveReport()
    if method == Method.ORACLE:
        budget = EnumerationBudget(max_trees) if max_trees is not None else EnumerationBudget()
        frontier = exact_frontier(graph, budget)
    elif method == Method.SUPPORTED:
        try:
            frontier = supported_frontier(graph, time_limit=time_limit)
        except TimeLimitExceeded as exc:
            logger.warning("Supported front search timed out: %s", exc)
            frontier = exc.partial if exc.partial is not None else Frontier()
            report.timed_out = True
    else:
        raise ValueError(f"Unknown method {method!r}; choose one of {', '.join(Method.values)}")

    report.points_found = len(frontier)
    report.elapsed_seconds = time.perf_counter() - started
    return MethodOutcome(Method(method), frontier, report)


@transaction.atomic
def store_run(outcome: MethodOutcome, *, instance=None, label: str = '', parameters: dict | None = None,
              cut_enabled: bool = True, time_limit: float | None = None):
    """Persist a finished run with its frontier points."""
    from .models import FrontierPoint, SolveRun

    report = outcome.report
    run = SolveRun.objects.create(
        instance=instance,
        instance_label=label or (instance.name if instance is not None else ''),
        parameters=parameters or {},
        method=outcome.method,
        cut_enabled=cut_enabled,
        time_limit_seconds=time_limit,
        points_found=report.points_found,
        timed_out=report.timed_out,
        total_seconds=report.elapsed_seconds,
        bnb_nodes=report.bnb_nodes,
        subproblems_solved=report.subproblems_solved,
        cut_filtered_edges=report.cut_filtered_edges,
    )
    FrontierPoint.objects.bulk_create([
        FrontierPoint(
            run=run,
            position=position,
            c_gamma=entry.point.c_gamma,
            c_tau=entry.point.c_tau,
            tree_edges=entry.tree.sorted_edges(),
        )
        for position, entry in enumerate(outcome.frontier)
    ])
    logger.info("Stored run %s (%s, %d points)", run.id, run.method, run.points_found)
    return run
