"""
Brute-force ground truth: every spanning tree of a small instance and the
exact non-dominated set computed from them.

Trees are produced by a contraction/deletion recursion over ascending edge
indices. A deletion branch is only entered while the contracted graph plus
the undecided edges stays connected, so every branch ends in a tree.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from networkx.utils import UnionFind

from graphs.core import (
    Frontier, Graph, ObjectivePoint, Tree, dominance_filter, eval_tree,
    weighted_sum,
)

logger = logging.getLogger(__name__)

DEFAULT_MAX_TREES = 5_000_000


class BudgetExceeded(Exception):
    """More spanning trees exist than the enumeration budget allows."""

    def __init__(self, delivered: int):
        self.delivered = delivered
        super().__init__(f"Spanning tree budget exhausted after {delivered} trees")


@dataclass(frozen=True)
class EnumerationBudget:
    max_trees: int = DEFAULT_MAX_TREES

    def __post_init__(self):
        if self.max_trees < 1:
            raise ValueError(f"max_trees must be positive, got {self.max_trees}")


class SubproblemOptimum(NamedTuple):
    tree: Tree
    point: ObjectivePoint
    objective: int


def _still_connected(graph: Graph, position: int, labels: list[int]) -> bool:
    components = UnionFind(set(labels[1:]))
    for edge in graph.edges[position:]:
        components.union(labels[edge.u], labels[edge.v])
    roots = {components[label] for label in labels[1:]}
    return len(roots) == 1


def _branch(graph: Graph, position: int, labels: list[int], chosen: list[int]) -> Iterator[tuple[int, ...]]:
    if len(chosen) == graph.n - 1:
        yield tuple(chosen)
        return
    if position == graph.m:
        return

    edge = graph.edges[position]
    kept, absorbed = labels[edge.u], labels[edge.v]
    if kept != absorbed:
        contracted = [kept if label == absorbed else label for label in labels]
        chosen.append(position)
        yield from _branch(graph, position + 1, contracted, chosen)
        chosen.pop()
        if not _still_connected(graph, position + 1, labels):
            return
    yield from _branch(graph, position + 1, labels, chosen)


def enumerate_spanning_trees(graph: Graph, budget: EnumerationBudget = EnumerationBudget()) -> Iterator[Tree]:
    """
    Yield every spanning tree exactly once in a deterministic order.

    Raises BudgetExceeded once ``budget.max_trees`` trees have been delivered
    and another one exists.
    """
    delivered = 0
    labels = list(range(graph.n + 1))
    for edge_indices in _branch(graph, 0, labels, []):
        if delivered == budget.max_trees:
            raise BudgetExceeded(delivered)
        delivered += 1
        yield Tree.from_edges(graph, edge_indices)
    logger.debug("Enumerated %d spanning trees (n=%d, m=%d)", delivered, graph.n, graph.m)


def count_spanning_trees(graph: Graph, budget: EnumerationBudget = EnumerationBudget()) -> int:
    return sum(1 for _ in enumerate_spanning_trees(graph, budget))


def exact_frontier(graph: Graph, budget: EnumerationBudget = EnumerationBudget()) -> Frontier:
    """Non-dominated set by exhaustion; the first enumerated witness of a point wins."""
    best_per_gamma: dict[int, tuple[ObjectivePoint, Tree]] = {}
    for tree in enumerate_spanning_trees(graph, budget):
        point = eval_tree(graph, tree)
        current = best_per_gamma.get(point.c_gamma)
        if current is None or point.c_tau < current[0].c_tau:
            best_per_gamma[point.c_gamma] = (point, tree)
    return dominance_filter(best_per_gamma.values())


def exact_subproblem(
    graph: Graph,
    epsilon: int | None,
    weights: tuple[int, int],
    budget: EnumerationBudget = EnumerationBudget(),
) -> SubproblemOptimum | None:
    """Minimum of the weighted objective over trees with c_tau <= epsilon, or None."""
    best = None
    for tree in enumerate_spanning_trees(graph, budget):
        point = eval_tree(graph, tree)
        if epsilon is not None and point.c_tau > epsilon:
            continue
        objective = weighted_sum(point, weights)
        if best is None or objective < best.objective:
            best = SubproblemOptimum(tree, point, objective)
    return best
