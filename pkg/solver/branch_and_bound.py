"""
Exact combinatorial branch-and-bound for one epsilon-constraint subproblem:

    min  w_gamma * c_gamma(T) + w_tau * c_tau(T)   s.t.  c_tau(T) <= epsilon

Nodes fix edges as forced or forbidden. Lower bounds per node are the root
distance sum over the non-forbidden edges (c_gamma) and the Kruskal tree
with the node's forced/forbidden edges (c_tau). Nodes are explored best
bound first; every node also offers its shortest-path completion and its
MST completion as incumbents.
"""

from __future__ import annotations

import enum
import heapq
import itertools
import logging
import time
from dataclasses import dataclass, field
from typing import Iterable

from graphs.core import (
    Graph, ObjectivePoint, PathTree, Tree, eval_tree, minimum_spanning_edges,
    shortest_path_completion,
)

from .scaling import ScalingInfo

logger = logging.getLogger(__name__)


class SubproblemStatus(enum.Enum):
    OPTIMAL = 'optimal'
    INFEASIBLE = 'infeasible'
    TIME_LIMIT = 'time_limit'


@dataclass(frozen=True)
class SubproblemSpec:
    """
    One scalarized problem. ``weights`` overrides the hybrid weights (D, 1)
    taken from ``scaling``; epsilon None means no trench budget.
    """
    epsilon: int | None
    scaling: ScalingInfo | None = None
    cut_enabled: bool = True
    incumbent_hint: Tree | None = None
    weights: tuple[int, int] | None = None

    def __post_init__(self):
        if self.epsilon is not None and self.epsilon < 0:
            raise ValueError(f"epsilon must be non-negative, got {self.epsilon}")
        if self.weights is None and self.scaling is None:
            raise ValueError("A subproblem needs either scaling information or explicit weights")
        gamma_weight, tau_weight = self.objective_weights
        if gamma_weight < 0 or tau_weight < 0 or gamma_weight + tau_weight == 0:
            raise ValueError(f"Objective weights must be non-negative and not both zero: {self.objective_weights}")

    @property
    def objective_weights(self) -> tuple[int, int]:
        return self.weights if self.weights is not None else self.scaling.weights


@dataclass(frozen=True)
class BnbNode:
    forced: frozenset[int]
    forbidden: frozenset[int]
    bound_gamma: int
    bound_tau: int
    completion: PathTree = field(compare=False, repr=False)


@dataclass(frozen=True)
class SubproblemResult:
    status: SubproblemStatus
    tree: Tree | None
    point: ObjectivePoint | None
    objective: int | None
    nodes: int
    cut_filtered_edges: int
    elapsed_ms: float

    @property
    def feasible(self) -> bool:
        return self.tree is not None


def epsilon_cut_threshold(graph: Graph, epsilon: int) -> int:
    """epsilon minus the trench cost of the n - 2 cheapest edges"""
    cheapest = graph.trench_order[:max(graph.n - 2, 0)]
    return epsilon - sum(graph.edges[index].trench_cost for index in cheapest)


def epsilon_cut_filter(graph: Graph, epsilon: int) -> frozenset[int]:
    """
    Edges that can still appear in a tree of trench cost <= epsilon.

    With S the n - 2 cheapest edges, any tree containing e costs at least
    trench(e) + sum(S), so e is admissible iff trench(e) <= epsilon - sum(S).
    """
    threshold = epsilon_cut_threshold(graph, epsilon)
    return frozenset(index for index, edge in enumerate(graph.edges) if edge.trench_cost <= threshold)


class _Search:

    def __init__(self, graph: Graph, weights: tuple[int, int], epsilon: int | None, deadline: float | None):
        self.graph = graph
        self.weights = weights
        self.epsilon = epsilon
        self.deadline = deadline
        self.incumbent_value: int | None = None
        self.incumbent_edges: tuple[int, ...] | None = None
        self.nodes = 0
        self.timed_out = False
        self._sequence = itertools.count()

    def value(self, gamma: int, tau: int) -> int:
        return self.weights[0] * gamma + self.weights[1] * tau

    def improves(self, value: int) -> bool:
        return self.incumbent_value is None or value < self.incumbent_value

    def offer(self, edge_indices: Iterable[int], gamma: int | None = None) -> None:
        edge_indices = tuple(edge_indices)
        tau = sum(self.graph.edges[index].trench_cost for index in edge_indices)
        if self.epsilon is not None and tau > self.epsilon:
            return
        if gamma is None:
            gamma = eval_tree(self.graph, Tree.from_edges(self.graph, edge_indices)).c_gamma
        value = self.value(gamma, tau)
        if self.improves(value):
            self.incumbent_value = value
            self.incumbent_edges = edge_indices

    def make_node(self, forced: frozenset[int], forbidden: frozenset[int]) -> BnbNode | None:
        self.nodes += 1
        spanning = minimum_spanning_edges(self.graph, forced, forbidden)
        if spanning is None:
            return None
        bound_tau = sum(self.graph.edges[index].trench_cost for index in spanning)
        if self.epsilon is not None and bound_tau > self.epsilon:
            return None

        completion = shortest_path_completion(self.graph, forbidden, preferred=forced)
        bound_gamma = sum(completion.distance.values())
        if not self.improves(self.value(bound_gamma, bound_tau)):
            return None

        self.offer(completion.parent_edge.values(), gamma=bound_gamma)
        self.offer(spanning)
        return BnbNode(forced, forbidden, bound_gamma, bound_tau, completion)

    def branching_edge(self, node: BnbNode) -> int | None:
        """Undecided edge of the shortest-path completion with maximal trench cost"""
        undecided = [index for index in node.completion.parent_edge.values() if index not in node.forced]
        if not undecided:
            return None
        return max(undecided, key=lambda index: (self.graph.edges[index].trench_cost, -index))

    def run(self, forbidden: frozenset[int]) -> None:
        heap = []
        root = self.make_node(frozenset(), forbidden)
        if root is not None:
            heap.append((self.value(root.bound_gamma, root.bound_tau), next(self._sequence), root))

        while heap:
            if self.deadline is not None and time.monotonic() > self.deadline:
                self.timed_out = True
                break
            bound, _, node = heapq.heappop(heap)
            if not self.improves(bound):
                break
            edge = self.branching_edge(node)
            if edge is None:
                continue
            for child in (self.make_node(node.forced | {edge}, node.forbidden),
                          self.make_node(node.forced, node.forbidden | {edge})):
                if child is not None:
                    child_bound = self.value(child.bound_gamma, child.bound_tau)
                    if self.improves(child_bound):
                        heapq.heappush(heap, (child_bound, next(self._sequence), child))


def solve_subproblem(graph: Graph, spec: SubproblemSpec, deadline: float | None = None) -> SubproblemResult:
    """
    Solve one scalarized subproblem exactly, or stop at ``deadline``
    (a ``time.monotonic()`` value) with the best incumbent found so far.
    """
    started = time.perf_counter()
    weights = spec.objective_weights

    forbidden = frozenset()
    if spec.cut_enabled and spec.epsilon is not None:
        forbidden = frozenset(range(graph.m)) - epsilon_cut_filter(graph, spec.epsilon)

    search = _Search(graph, weights, spec.epsilon, deadline)
    if spec.incumbent_hint is not None:
        search.offer(spec.incumbent_hint.edge_set)
    if len(forbidden) < graph.m:
        initial = minimum_spanning_edges(graph, forbidden=forbidden)
        if initial is not None:
            search.offer(initial)
        search.run(forbidden)

    if search.timed_out:
        status = SubproblemStatus.TIME_LIMIT
    elif search.incumbent_edges is None:
        status = SubproblemStatus.INFEASIBLE
    else:
        status = SubproblemStatus.OPTIMAL

    tree = point = None
    if search.incumbent_edges is not None:
        tree = Tree.from_edges(graph, search.incumbent_edges)
        point = eval_tree(graph, tree)

    elapsed_ms = (time.perf_counter() - started) * 1000.0
    logger.debug(
        "Subproblem eps=%s weights=%s: %s after %d nodes (%.1f ms, %d edges cut)",
        spec.epsilon, weights, status.value, search.nodes, elapsed_ms, len(forbidden),
    )
    return SubproblemResult(
        status=status,
        tree=tree,
        point=point,
        objective=search.incumbent_value,
        nodes=search.nodes,
        cut_filtered_edges=len(forbidden),
        elapsed_ms=elapsed_ms,
    )
