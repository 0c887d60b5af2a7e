"""
Hybrid epsilon-constraint frontier enumeration.

Starting from lexmin(c_gamma, c_tau) every iteration tightens the trench
budget to one below the previous point and solves the scaled subproblem
min D * c_gamma + c_tau. The loop ends when the budget drops below the MST
cost and the subproblem turns infeasible.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field

from graphs.core import Frontier, FrontierPoint, Graph, ObjectivePoint, Tree, kruskal_mst, lexmin_gamma_tau

from .branch_and_bound import SubproblemResult, SubproblemSpec, SubproblemStatus, solve_subproblem
from .exceptions import FrontierOrderError, InconsistentLexminError, TimeLimitExceeded
from .scaling import compute_scaling

logger = logging.getLogger(__name__)

DEFAULT_TIME_LIMIT = 300


@dataclass
class SolveReport:
    points_found: int = 0
    bnb_nodes: int = 0
    subproblems_solved: int = 0
    subproblem_millis: list[float] = field(default_factory=list)
    timed_out: bool = False
    cut_filtered_edges: int = 0
    elapsed_seconds: float = 0.0

    def absorb(self, result: SubproblemResult) -> None:
        self.subproblems_solved += 1
        self.bnb_nodes += result.nodes
        self.subproblem_millis.append(result.elapsed_ms)
        self.cut_filtered_edges += result.cut_filtered_edges

    def as_dict(self) -> dict:
        return {
            'points_found': self.points_found,
            'bnb_nodes': self.bnb_nodes,
            'subproblems_solved': self.subproblems_solved,
            'subproblem_millis': [round(ms, 3) for ms in self.subproblem_millis],
            'timed_out': self.timed_out,
            'cut_filtered_edges': self.cut_filtered_edges,
            'elapsed_seconds': round(self.elapsed_seconds, 6),
        }


def deadline_after(time_limit: float | None) -> float | None:
    if time_limit is None:
        return None
    if time_limit <= 0:
        raise ValueError(f"Time limit must be positive, got {time_limit}")
    return time.monotonic() + time_limit


def solve_frontier(
    graph: Graph,
    cut_enabled: bool = True,
    time_limit: float | None = DEFAULT_TIME_LIMIT,
) -> tuple[Frontier, SolveReport]:
    """
    Compute the complete non-dominated set.

    On time-out the returned frontier holds the points proven so far and
    ``report.timed_out`` is set; the incumbent of the interrupted
    subproblem is discarded.
    """
    started = time.perf_counter()
    deadline = deadline_after(time_limit)
    report = SolveReport()

    tree, point = lexmin_gamma_tau(graph)
    scaling = compute_scaling(graph, point)
    found = [FrontierPoint(point, tree)]
    logger.info("Frontier point %s from lexmin(c_gamma, c_tau), D=%d", point.as_tuple(), scaling.scale)

    if scaling.d_lex == 0:
        logger.info("Ideal point %s is feasible, frontier is a single point", point.as_tuple())
    while scaling.d_lex > 0:
        if deadline is not None and time.monotonic() > deadline:
            report.timed_out = True
            break
        epsilon = point.c_tau - 1
        if epsilon < 0:
            # c_tau = 0 cannot be improved on
            break
        spec = SubproblemSpec(epsilon=epsilon, scaling=scaling, cut_enabled=cut_enabled)
        result = solve_subproblem(graph, spec, deadline)
        report.absorb(result)

        if result.status is SubproblemStatus.TIME_LIMIT:
            report.timed_out = True
            break
        if result.status is SubproblemStatus.INFEASIBLE:
            break
        if not (result.point.c_gamma > point.c_gamma and result.point.c_tau < point.c_tau):
            raise FrontierOrderError(
                f"Iterate {result.point.as_tuple()} does not improve on {point.as_tuple()} at eps={epsilon}"
            )
        point = result.point
        found.append(FrontierPoint(point, result.tree))
        logger.info(
            "Frontier point %s at eps=%d after %d nodes (%.1f ms)",
            point.as_tuple(), epsilon, result.nodes, result.elapsed_ms,
        )

    report.points_found = len(found)
    report.elapsed_seconds = time.perf_counter() - started
    if report.timed_out:
        logger.warning(
            "Time limit of %ss reached with %d proven frontier points", time_limit, report.points_found
        )
    return Frontier(points=tuple(found)), report


def lexmin_tau_gamma(graph: Graph, deadline: float | None = None) -> tuple[Tree, ObjectivePoint]:
    """Cheapest-path tree among the minimum trench-cost spanning trees."""
    mst = kruskal_mst(graph)
    spec = SubproblemSpec(epsilon=mst.trench_cost, weights=(1, 0), cut_enabled=True, incumbent_hint=mst.tree)
    result = solve_subproblem(graph, spec, deadline)
    if result.status is SubproblemStatus.TIME_LIMIT:
        raise TimeLimitExceeded("Time limit reached while computing lexmin(c_tau, c_gamma)")
    if result.point.c_tau != mst.trench_cost:
        raise InconsistentLexminError(
            f"lexmin(c_tau, c_gamma) returned c_tau={result.point.c_tau}, MST costs {mst.trench_cost}"
        )
    return result.tree, result.point
