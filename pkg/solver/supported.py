"""Extreme supported points by dichotomic weighted-sum search."""

from __future__ import annotations

import logging
from typing import Sequence

from graphs.core import Frontier, FrontierPoint, Graph, ObjectivePoint, dominance_filter, lexmin_gamma_tau, weighted_sum

from .branch_and_bound import SubproblemSpec, SubproblemStatus, solve_subproblem
from .exceptions import TimeLimitExceeded
from .frontier import deadline_after, lexmin_tau_gamma

logger = logging.getLogger(__name__)


def _turn(a: ObjectivePoint, b: ObjectivePoint, c: ObjectivePoint) -> int:
    """Positive when b lies strictly below the segment from a to c."""
    return ((b.c_gamma - a.c_gamma) * (c.c_tau - a.c_tau)
            - (b.c_tau - a.c_tau) * (c.c_gamma - a.c_gamma))


def is_supported_extreme(points: Sequence[ObjectivePoint]) -> bool:
    """True when every inner point of a frontier is a strict lower-left hull vertex."""
    return all(_turn(a, b, c) > 0 for a, b, c in zip(points, points[1:], points[2:]))


def lower_convex_hull(frontier: Frontier) -> list[ObjectivePoint]:
    """Vertices of the lower-left convex hull of a frontier, collinear points dropped."""
    hull: list[ObjectivePoint] = []
    for point in frontier.objective_points():
        while len(hull) >= 2 and _turn(hull[-2], hull[-1], point) <= 0:
            hull.pop()
        hull.append(point)
    return hull


def supported_frontier(graph: Graph, time_limit: float | None = None) -> Frontier:
    deadline = deadline_after(time_limit)
    tree, point = lexmin_gamma_tau(graph)
    left = FrontierPoint(point, tree)
    tree, point = lexmin_tau_gamma(graph, deadline)
    right = FrontierPoint(point, tree)
    found = [left]
    if right.point != left.point:
        found.append(right)

    pending = [(left.point, right.point)] if right.point != left.point else []
    while pending:
        p, q = pending.pop()
        weights = (p.c_tau - q.c_tau, q.c_gamma - p.c_gamma)
        spec = SubproblemSpec(epsilon=None, weights=weights, cut_enabled=False)
        result = solve_subproblem(graph, spec, deadline)
        if result.status is SubproblemStatus.TIME_LIMIT:
            raise TimeLimitExceeded(
                "Time limit reached during the dichotomic search", partial=dominance_filter(found)
            )
        if result.objective < weighted_sum(p, weights):
            logger.info("Supported point %s between %s and %s", result.point.as_tuple(), p.as_tuple(), q.as_tuple())
            found.append(FrontierPoint(result.point, result.tree))
            pending.extend([(p, result.point), (result.point, q)])

    return dominance_filter(found)
