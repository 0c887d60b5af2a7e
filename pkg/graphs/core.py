"""
Graph core - instance representation, objective evaluation and the
polynomial subroutines everything else builds on:
Dijkstra, Kruskal with forced/forbidden edges, the cheapest shortest-path
tree and dominance filtering.

Vertices are numbered 1..n. Edge indices are positions in ``Graph.edges``,
which validate_graph keeps sorted by (u, v).
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

import networkx as nx
from networkx.utils import UnionFind

from .exceptions import (
    CostOverflow, DisconnectedGraph, DuplicateEdge, GraphValidationError,
    NegativeCost, NotSpanningTree, SelfLoop,
)

logger = logging.getLogger(__name__)

MAX_COST = 2 ** 40
INT64_LIMIT = 2 ** 63


class Edge(NamedTuple):
    u: int
    v: int
    cable_cost: int
    trench_cost: int


@dataclass(frozen=True)
class Graph:
    """Undirected connected instance with a root and two costs per edge."""
    n: int
    root: int
    edges: tuple[Edge, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """(neighbour, edge index) pairs per vertex; slot 0 is unused"""
        buckets: list[list[tuple[int, int]]] = [[] for _ in range(self.n + 1)]
        for index, edge in enumerate(self.edges):
            buckets[edge.u].append((edge.v, index))
            buckets[edge.v].append((edge.u, index))
        return tuple(tuple(bucket) for bucket in buckets)

    @cached_property
    def trench_order(self) -> tuple[int, ...]:
        """Edge indices by ascending (trench cost, index)"""
        return tuple(sorted(range(self.m), key=lambda i: (self.edges[i].trench_cost, i)))

    @cached_property
    def edge_lookup(self) -> Mapping[tuple[int, int], int]:
        return MappingProxyType({(e.u, e.v): i for i, e in enumerate(self.edges)})

    def edge_index(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return self.edge_lookup[(u, v)]

    @cached_property
    def is_ctp(self) -> bool:
        """True when both cost vectors coincide (plain cable-trench instance)"""
        return all(e.cable_cost == e.trench_cost for e in self.edges)

    @cached_property
    def has_zero_cable_cost(self) -> bool:
        return any(e.cable_cost == 0 for e in self.edges)

    def total_cable_cost(self) -> int:
        return sum(e.cable_cost for e in self.edges)

    def total_trench_cost(self) -> int:
        return sum(e.trench_cost for e in self.edges)


@dataclass(frozen=True)
class Tree:
    """
    Spanning tree oriented towards the root.

    ``parent`` maps every non-root vertex to (parent vertex, edge index);
    ``order`` lists the vertices root first, parents before children.
    """
    edge_set: frozenset[int]
    parent: Mapping[int, tuple[int, int]] = field(compare=False, repr=False)
    order: tuple[int, ...] = field(compare=False, repr=False)

    @classmethod
    def from_edges(cls, graph: Graph, edge_indices: Iterable[int]) -> 'Tree':
        edge_set = frozenset(edge_indices)
        if len(edge_set) != graph.n - 1 or any(not 0 <= i < graph.m for i in edge_set):
            raise NotSpanningTree(
                f"Expected {graph.n - 1} distinct edge indices of the graph, got {sorted(edge_set)}"
            )

        parent: dict[int, tuple[int, int]] = {}
        order = [graph.root]
        seen = {graph.root}
        head = 0
        while head < len(order):
            vertex = order[head]
            head += 1
            for neighbour, index in graph.adjacency[vertex]:
                if index in edge_set and neighbour not in seen:
                    seen.add(neighbour)
                    parent[neighbour] = (vertex, index)
                    order.append(neighbour)

        if len(order) != graph.n:
            raise NotSpanningTree("Edge set does not connect every vertex to the root")
        return cls(edge_set=edge_set, parent=parent, order=tuple(order))

    def path_to_root(self, vertex: int) -> list[int]:
        """Edge indices of P(vertex), listed from the vertex upwards"""
        path = []
        while vertex in self.parent:
            vertex, index = self.parent[vertex]
            path.append(index)
        return path

    def sorted_edges(self) -> list[int]:
        return sorted(self.edge_set)


@dataclass(frozen=True, order=True)
class ObjectivePoint:
    """(c_gamma, c_tau): total root-path cable cost and total trench cost"""
    c_gamma: int
    c_tau: int

    def __post_init__(self):
        if self.c_gamma < 0 or self.c_tau < 0:
            raise NegativeCost(f"Objective values must be non-negative, got {self.as_tuple()}")
        if self.c_gamma >= INT64_LIMIT or self.c_tau >= INT64_LIMIT:
            raise CostOverflow(f"Objective values exceed 64-bit range: {self.as_tuple()}")

    def as_tuple(self) -> tuple[int, int]:
        return (self.c_gamma, self.c_tau)

    def dominates(self, other: 'ObjectivePoint') -> bool:
        return (self.c_gamma <= other.c_gamma and self.c_tau <= other.c_tau
                and self != other)


class FrontierPoint(NamedTuple):
    point: ObjectivePoint
    tree: Tree


@dataclass(frozen=True)
class Frontier:
    """Mutually non-dominated points by increasing c_gamma, one witness each."""
    points: tuple[FrontierPoint, ...] = ()

    def __post_init__(self):
        for previous, current in zip(self.points, self.points[1:]):
            if not (previous.point.c_gamma < current.point.c_gamma
                    and previous.point.c_tau > current.point.c_tau):
                raise ValueError(
                    f"Frontier order violated between {previous.point.as_tuple()} "
                    f"and {current.point.as_tuple()}"
                )

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[FrontierPoint]:
        return iter(self.points)

    def objective_points(self) -> list[ObjectivePoint]:
        return [entry.point for entry in self.points]

    def as_tuples(self) -> list[tuple[int, int]]:
        return [entry.point.as_tuple() for entry in self.points]


class ShortestPaths(NamedTuple):
    distance: dict[int, int]
    tight_edges: frozenset[tuple[int, int, int]]


class PathTree(NamedTuple):
    distance: dict[int, int]
    parent_edge: dict[int, int]


class MstResult(NamedTuple):
    tree: Tree | None
    trench_cost: int | None

    @property
    def feasible(self) -> bool:
        return self.tree is not None


def validate_graph(raw_edges: Iterable[Sequence[int]], n: int, root: int = 1) -> Graph:
    """
    Normalise a raw (u, v, cable_cost, trench_cost) list into a Graph.

    Endpoints are swapped so that u < v and edges are sorted by (u, v).
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise GraphValidationError(f"Vertex count must be an integer >= 2, got {n!r}", code='vertex_count')
    if isinstance(root, bool) or not isinstance(root, int) or not 1 <= root <= n:
        raise GraphValidationError(f"Root {root!r} is not a vertex in 1..{n}", code='root')

    normalized: dict[tuple[int, int], Edge] = {}
    for raw in raw_edges:
        if len(raw) != 4:
            raise GraphValidationError(f"Edge {tuple(raw)!r} must have four fields", code='edge_shape')
        u, v, cable, trench = raw
        for value in (u, v, cable, trench):
            if isinstance(value, bool) or not isinstance(value, int):
                raise GraphValidationError(
                    f"Edge {tuple(raw)!r} has a non-integer field", code='non_integral'
                )
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphValidationError(f"Edge ({u}, {v}) references a vertex outside 1..{n}", code='unknown_vertex')
        if u == v:
            raise SelfLoop(f"Self-loop at vertex {u}")
        if cable < 0 or trench < 0:
            raise NegativeCost(f"Edge ({u}, {v}) has a negative cost")
        if cable > MAX_COST or trench > MAX_COST:
            raise CostOverflow(f"Edge ({u}, {v}) cost exceeds 2^40")
        if u > v:
            u, v = v, u
        if (u, v) in normalized:
            raise DuplicateEdge(f"Edge ({u}, {v}) appears more than once")
        normalized[(u, v)] = Edge(u, v, cable, trench)

    connectivity = nx.Graph()
    connectivity.add_nodes_from(range(1, n + 1))
    connectivity.add_edges_from(normalized)
    if not nx.is_connected(connectivity):
        raise DisconnectedGraph(
            f"Graph has {nx.number_connected_components(connectivity)} connected components"
        )

    edges = tuple(normalized[key] for key in sorted(normalized))
    return Graph(n=n, root=root, edges=edges)


def eval_tree(graph: Graph, tree: Tree) -> ObjectivePoint:
    """
    Evaluate (c_gamma, c_tau) of a spanning tree.

    c_gamma is computed twice: by accumulating depths from the root and by
    weighting every edge with the number of vertices below it.
    """
    if len(tree.parent) != graph.n - 1 or len(tree.order) != graph.n or tree.order[0] != graph.root:
        raise NotSpanningTree("Tree does not span the graph")
    if {index for _, index in tree.parent.values()} != tree.edge_set:
        raise NotSpanningTree("Parent map and edge set describe different edges")

    depth = {graph.root: 0}
    for vertex in tree.order[1:]:
        above, index = tree.parent[vertex]
        edge = graph.edges[index]
        if above not in depth or {edge.u, edge.v} != {vertex, above}:
            raise NotSpanningTree(f"Vertex {vertex} is not attached through edge {index}")
        depth[vertex] = depth[above] + edge.cable_cost

    below = dict.fromkeys(tree.order, 1)
    weighted = 0
    for vertex in reversed(tree.order[1:]):
        above, index = tree.parent[vertex]
        below[above] += below[vertex]
        weighted += graph.edges[index].cable_cost * below[vertex]

    by_depth = sum(depth.values())
    if by_depth != weighted:
        raise ArithmeticError(f"c_gamma mismatch: depth sum {by_depth} != subtree sum {weighted}")

    c_tau = sum(graph.edges[index].trench_cost for index in tree.edge_set)
    return ObjectivePoint(c_gamma=by_depth, c_tau=c_tau)


def shortest_path_completion(
    graph: Graph,
    forbidden: frozenset[int] = frozenset(),
    preferred: frozenset[int] = frozenset(),
) -> PathTree | None:
    """
    Dijkstra from the root over the non-forbidden edges.

    Among tight edges into a vertex the parent edge is chosen by
    (not preferred, trench cost, index), restricted to tails already settled,
    so the parent edges always form a shortest-path tree. Returns None when
    some vertex is unreachable.
    """
    edges = graph.edges
    distance = {graph.root: 0}
    parent_edge: dict[int, int] = {}
    settled: set[int] = set()
    heap = [(0, graph.root)]

    def rank(index: int) -> tuple[bool, int, int]:
        return (index not in preferred, edges[index].trench_cost, index)

    while heap:
        dist, vertex = heapq.heappop(heap)
        if vertex in settled:
            continue
        settled.add(vertex)
        for neighbour, index in graph.adjacency[vertex]:
            if neighbour in settled or index in forbidden:
                continue
            candidate = dist + edges[index].cable_cost
            known = distance.get(neighbour)
            if known is None or candidate < known:
                distance[neighbour] = candidate
                parent_edge[neighbour] = index
                heapq.heappush(heap, (candidate, neighbour))
            elif candidate == known and rank(index) < rank(parent_edge[neighbour]):
                parent_edge[neighbour] = index

    if len(settled) != graph.n:
        return None
    return PathTree(distance=distance, parent_edge=parent_edge)


def dijkstra_sssp(graph: Graph) -> ShortestPaths:
    """Exact root distances (root included at 0) and the tight directed edges."""
    completion = shortest_path_completion(graph)
    distance = completion.distance
    tight = set()
    for index, edge in enumerate(graph.edges):
        if distance[edge.u] + edge.cable_cost == distance[edge.v]:
            tight.add((edge.u, edge.v, index))
        if distance[edge.v] + edge.cable_cost == distance[edge.u]:
            tight.add((edge.v, edge.u, index))
    return ShortestPaths(distance=distance, tight_edges=frozenset(tight))


def minimum_spanning_edges(
    graph: Graph,
    forced: frozenset[int] = frozenset(),
    forbidden: frozenset[int] = frozenset(),
) -> list[int] | None:
    """Kruskal edge list containing ``forced`` and avoiding ``forbidden``, or None."""
    components = UnionFind(graph.vertices())
    chosen = []
    for index in sorted(forced):
        edge = graph.edges[index]
        if components[edge.u] == components[edge.v]:
            return None
        components.union(edge.u, edge.v)
        chosen.append(index)

    for index in graph.trench_order:
        if len(chosen) == graph.n - 1:
            break
        if index in forced or index in forbidden:
            continue
        edge = graph.edges[index]
        if components[edge.u] != components[edge.v]:
            components.union(edge.u, edge.v)
            chosen.append(index)

    if len(chosen) != graph.n - 1:
        return None
    return chosen


def kruskal_mst(
    graph: Graph,
    forced: Iterable[int] = (),
    forbidden: Iterable[int] = (),
) -> MstResult:
    """Minimum trench-cost spanning tree with forced and forbidden edges."""
    forced = frozenset(forced)
    forbidden = frozenset(forbidden)
    if forced & forbidden:
        raise ValueError(f"Edges {sorted(forced & forbidden)} are both forced and forbidden")

    chosen = minimum_spanning_edges(graph, forced, forbidden)
    if chosen is None:
        return MstResult(tree=None, trench_cost=None)
    cost = sum(graph.edges[index].trench_cost for index in chosen)
    return MstResult(tree=Tree.from_edges(graph, chosen), trench_cost=cost)


def _cheapest_arborescence(graph: Graph, distance: Mapping[int, int]) -> list[int]:
    """Edmonds over the tight digraph with trench weights; handles zero-cost cycles."""
    scale = graph.n * graph.m + 1
    digraph = nx.DiGraph()
    digraph.add_nodes_from(graph.vertices())
    for index, edge in enumerate(graph.edges):
        for tail, head in ((edge.u, edge.v), (edge.v, edge.u)):
            if head != graph.root and distance[tail] + edge.cable_cost == distance[head]:
                digraph.add_edge(tail, head, weight=edge.trench_cost * scale + index, index=index)
    arborescence = nx.minimum_spanning_arborescence(digraph, attr='weight', preserve_attrs=True)
    return [data['index'] for _, _, data in arborescence.edges(data=True)]


def lexmin_gamma_tau(graph: Graph) -> tuple[Tree, ObjectivePoint]:
    """Cheapest (trench) tree among all shortest-path trees."""
    completion = shortest_path_completion(graph)
    if graph.has_zero_cable_cost:
        logger.debug("Zero cable costs present, using minimum spanning arborescence")
        edge_indices = _cheapest_arborescence(graph, completion.distance)
    else:
        edge_indices = completion.parent_edge.values()

    tree = Tree.from_edges(graph, edge_indices)
    point = eval_tree(graph, tree)
    expected = sum(completion.distance.values())
    if point.c_gamma != expected:
        raise ArithmeticError(f"Shortest-path tree has c_gamma {point.c_gamma}, expected {expected}")
    return tree, point


def dominance_filter(entries: Iterable[tuple[ObjectivePoint, Tree]]) -> Frontier:
    """Keep the non-dominated points; the first witness of a point wins."""
    ordered = sorted(enumerate(entries), key=lambda item: (item[1][0].c_gamma, item[1][0].c_tau, item[0]))
    kept: list[FrontierPoint] = []
    for _, (point, tree) in ordered:
        if kept and point.c_tau >= kept[-1].point.c_tau:
            continue
        kept.append(FrontierPoint(point, tree))
    return Frontier(points=tuple(kept))


def weighted_sum(point: ObjectivePoint, weights: tuple[int, int]) -> int:
    return weights[0] * point.c_gamma + weights[1] * point.c_tau


def ideal_point(frontier: Frontier) -> ObjectivePoint | None:
    if not frontier.points:
        return None
    return ObjectivePoint(frontier.points[0].point.c_gamma, frontier.points[-1].point.c_tau)


def nadir_point(frontier: Frontier) -> ObjectivePoint | None:
    if not frontier.points:
        return None
    return ObjectivePoint(frontier.points[-1].point.c_gamma, frontier.points[0].point.c_tau)
