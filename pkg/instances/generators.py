"""
Deterministic instance families: incomplete, complete, grid and
location-based graphs plus the windmill family with exponentially many
non-dominated points.

All randomness of one instance comes from a single Lehmer stream seeded with
``spec.seed``. Draw order is fixed: topology first (points, tree, extra
edges), then costs edge by edge in ascending (u, v) order. Generated
instances are always rooted at vertex 1.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np
from django.db import models
from networkx.utils import UnionFind

from graphs.core import MAX_COST, Graph, validate_graph
from graphs.exceptions import CostOverflow

from .exceptions import InfeasibleDensity, InvalidInstanceSpec
from .rng import LehmerStream

logger = logging.getLogger(__name__)

COST_SCALE = 100


class Family(models.TextChoices):
    INCOMPLETE = 'incomplete', 'Incomplete (random density)'
    COMPLETE = 'complete', 'Complete graph'
    GRID = 'grid', 'Grid graph'
    LOCATION = 'location', 'Location based'
    WINDMILL = 'windmill', 'Windmill'


class CostMode(models.TextChoices):
    CTP = 'ctp', 'Cable-trench (equal costs)'
    GCTP = 'gctp', 'Generalized (independent costs)'


class PointDistribution(models.TextChoices):
    UNIFORM = 'uniform', 'Uniform on the unit square'
    NORMAL = 'normal', 'Standard bivariate normal'


class EdgeRule(models.TextChoices):
    RANDOM = 'random', 'Random edges'
    MIN_EUCLIDEAN = 'min_euclidean', 'Shortest Euclidean edges'
    MIN_MANHATTAN = 'min_manhattan', 'Shortest Manhattan edges'


class Metric(models.TextChoices):
    EUCLIDEAN = 'euclidean', 'Euclidean'
    MANHATTAN = 'manhattan', 'Manhattan'


DENSITY_FAMILIES = {Family.INCOMPLETE, Family.LOCATION}


def _as_density(value) -> Fraction | None:
    if value is None:
        return None
    if isinstance(value, float):
        return Fraction(str(value))
    return Fraction(value)


@dataclass(frozen=True)
class InstanceSpec:
    family: str
    n: int | None = None
    density: Fraction | None = None
    distribution: str | None = None
    edge_rule: str | None = None
    metric: str | None = None
    cost_mode: str = CostMode.CTP
    seed: int = 1
    blades: int | None = None

    def __post_init__(self):
        if self.family not in Family.values:
            raise InvalidInstanceSpec(f"Unknown family {self.family!r}")
        if self.cost_mode not in CostMode.values:
            raise InvalidInstanceSpec(f"Unknown cost mode {self.cost_mode!r}")
        try:
            object.__setattr__(self, 'density', _as_density(self.density))
        except (TypeError, ValueError):
            raise InvalidInstanceSpec(f"Density {self.density!r} is not a number")

        if self.family == Family.WINDMILL:
            if self.blades is None or self.blades < 1:
                raise InvalidInstanceSpec("Windmill instances need blades >= 1")
            if self.n is not None and self.n != 2 * self.blades + 1:
                raise InvalidInstanceSpec("Windmill vertex count is fixed at 2 * blades + 1")
        else:
            if self.blades is not None:
                raise InvalidInstanceSpec(f"blades only applies to windmill instances, not {self.family}")
            if self.n is None or self.n < 2:
                raise InvalidInstanceSpec("Instances need n >= 2 vertices")

        if self.family in DENSITY_FAMILIES:
            if self.density is None or not 0 < self.density <= 1:
                raise InvalidInstanceSpec(f"{self.family} instances need a density in (0, 1]")
        elif self.density is not None:
            raise InvalidInstanceSpec(f"density does not apply to {self.family} instances")

        if self.family == Family.LOCATION:
            object.__setattr__(self, 'distribution', self.distribution or PointDistribution.UNIFORM)
            object.__setattr__(self, 'edge_rule', self.edge_rule or EdgeRule.RANDOM)
            object.__setattr__(self, 'metric', self.metric or _default_metric(self.edge_rule))
            if self.distribution not in PointDistribution.values:
                raise InvalidInstanceSpec(f"Unknown point distribution {self.distribution!r}")
            if self.edge_rule not in EdgeRule.values:
                raise InvalidInstanceSpec(f"Unknown edge rule {self.edge_rule!r}")
            if self.metric not in Metric.values:
                raise InvalidInstanceSpec(f"Unknown metric {self.metric!r}")
        elif any(value is not None for value in (self.distribution, self.edge_rule, self.metric)):
            raise InvalidInstanceSpec("distribution, edge rule and metric only apply to location instances")

    @property
    def vertex_count(self) -> int:
        if self.family == Family.WINDMILL:
            return 2 * self.blades + 1
        return self.n

    def parameters(self) -> dict:
        """Flat parameter record (JSON friendly) used in files, runs and the API"""
        values = {'family': str(self.family), 'n': self.vertex_count, 'cost_mode': str(self.cost_mode)}
        if self.family == Family.WINDMILL:
            values['blades'] = self.blades
            return values
        values['seed'] = self.seed
        if self.density is not None:
            values['density'] = _density_label(self.density)
        if self.family == Family.LOCATION:
            values.update(distribution=str(self.distribution), edge_rule=str(self.edge_rule),
                          metric=str(self.metric))
        return values


def _default_metric(edge_rule: str | None) -> str:
    return Metric.MANHATTAN if edge_rule == EdgeRule.MIN_MANHATTAN else Metric.EUCLIDEAN


def _density_label(density: Fraction) -> str:
    return format(float(density), 'g')


def _round_half_up(value) -> int:
    return math.floor(value + Fraction(1, 2)) if isinstance(value, Fraction) else math.floor(value + 0.5)


def instance_id(spec: InstanceSpec) -> str:
    """Stable identifier such as ``incomplete-n8-d0.5-ctp-s3``"""
    if spec.family == Family.WINDMILL:
        return f"windmill-k{spec.blades}"
    parts = [str(spec.family), f"n{spec.n}"]
    if spec.density is not None:
        parts.append(f"d{_density_label(spec.density)}")
    if spec.family == Family.LOCATION:
        parts.extend([str(spec.distribution), str(spec.edge_rule), str(spec.metric)])
    parts.extend([str(spec.cost_mode), f"s{spec.seed}"])
    return '-'.join(parts)


def parameter_comment(spec: InstanceSpec) -> str:
    """Comment line written at the top of generated instance files"""
    return ' '.join(f"{key}={value}" for key, value in spec.parameters().items())


def edge_count(spec: InstanceSpec) -> int:
    """round(density * n(n-1)/2), rounding halves up; must allow a spanning tree"""
    pairs = spec.n * (spec.n - 1) // 2
    m = _round_half_up(spec.density * pairs)
    if m < spec.n - 1:
        raise InfeasibleDensity(
            f"Density {_density_label(spec.density)} gives {m} edges, "
            f"fewer than the {spec.n - 1} a spanning tree on {spec.n} vertices needs"
        )
    return m


def _all_pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]


def _random_spanning_tree(rng: LehmerStream, n: int) -> set[tuple[int, int]]:
    """Random vertex order, each vertex attached to a uniformly drawn earlier one"""
    order = list(range(1, n + 1))
    rng.shuffle(order)
    pairs = set()
    for position in range(1, n):
        anchor = order[rng.below(position)]
        vertex = order[position]
        pairs.add((min(anchor, vertex), max(anchor, vertex)))
    return pairs


def _add_random_pairs(rng: LehmerStream, n: int, pairs: set[tuple[int, int]], m: int) -> None:
    absent = [pair for pair in _all_pairs(n) if pair not in pairs]
    while len(pairs) < m:
        position = rng.below(len(absent))
        pairs.add(absent[position])
        absent[position] = absent[-1]
        absent.pop()


def _draw_costs(rng: LehmerStream, n: int, pairs, cost_mode: str) -> Graph:
    raw = []
    for u, v in sorted(pairs):
        if cost_mode == CostMode.CTP:
            cost = rng.cost()
            raw.append((u, v, cost, cost))
        else:
            cable = rng.cost()
            raw.append((u, v, cable, rng.cost()))
    return validate_graph(raw, n=n, root=1)


def gen_incomplete(spec: InstanceSpec) -> Graph:
    m = edge_count(spec)
    rng = LehmerStream(spec.seed)
    pairs = _random_spanning_tree(rng, spec.n)
    _add_random_pairs(rng, spec.n, pairs, m)
    return _draw_costs(rng, spec.n, pairs, spec.cost_mode)


def gen_complete(spec: InstanceSpec) -> Graph:
    rng = LehmerStream(spec.seed)
    return _draw_costs(rng, spec.n, _all_pairs(spec.n), spec.cost_mode)


def grid_width(n: int) -> int:
    """round(sqrt(n)); exact because sqrt(n) is never a half-integer"""
    width = math.isqrt(n)
    return width + 1 if n - width * width > width else width


def gen_grid(spec: InstanceSpec) -> Graph:
    """Row-major layout with ``grid_width(n)`` vertices per row, last row possibly shorter"""
    n = spec.n
    width = grid_width(n)
    pairs = []
    for position in range(n):
        vertex = position + 1
        if (position + 1) % width and position + 1 < n:
            pairs.append((vertex, vertex + 1))
        if position + width < n:
            pairs.append((vertex, vertex + width))
    rng = LehmerStream(spec.seed)
    return _draw_costs(rng, n, pairs, spec.cost_mode)


def _draw_points(rng: LehmerStream, spec: InstanceSpec) -> np.ndarray:
    draw = rng.uniform if spec.distribution == PointDistribution.UNIFORM else rng.normal
    coordinates = []
    for _ in range(spec.n):
        x = draw()
        y = draw()
        coordinates.append((x, y))
    return np.array(coordinates, dtype=float)


def _scaled_costs(distances: np.ndarray) -> np.ndarray:
    """Affine rescale so the longest candidate edge costs 100, rounded, at least 1"""
    longest = float(distances.max())
    if longest == 0.0:
        return np.ones_like(distances, dtype=np.int64)
    scaled = np.floor(distances * (COST_SCALE / longest) + 0.5).astype(np.int64)
    return np.maximum(scaled, 1)


def gen_location(spec: InstanceSpec) -> Graph:
    m = edge_count(spec)
    rng = LehmerStream(spec.seed)
    points = _draw_points(rng, spec)

    candidates = _all_pairs(spec.n)
    tails = np.array([u - 1 for u, _ in candidates])
    heads = np.array([v - 1 for _, v in candidates])
    offsets = points[tails] - points[heads]
    euclidean = np.hypot(offsets[:, 0], offsets[:, 1])
    manhattan = np.abs(offsets).sum(axis=1)

    if spec.edge_rule == EdgeRule.RANDOM:
        selected = _random_spanning_tree(rng, spec.n)
        _add_random_pairs(rng, spec.n, selected, m)
        chosen = [position for position, pair in enumerate(candidates) if pair in selected]
    else:
        lengths = euclidean if spec.edge_rule == EdgeRule.MIN_EUCLIDEAN else manhattan
        ranking = sorted(range(len(candidates)), key=lambda position: (float(lengths[position]), position))
        components = UnionFind(range(1, spec.n + 1))
        in_tree = []
        for position in ranking:
            u, v = candidates[position]
            if components[u] != components[v]:
                components.union(u, v)
                in_tree.append(position)
        taken = set(in_tree)
        extras = [position for position in ranking if position not in taken][:m - len(in_tree)]
        chosen = sorted(taken.union(extras))

    euclidean_cost = _scaled_costs(euclidean)
    manhattan_cost = _scaled_costs(manhattan)
    raw = []
    for position in chosen:
        u, v = candidates[position]
        if spec.cost_mode == CostMode.GCTP:
            cable, trench = int(euclidean_cost[position]), int(manhattan_cost[position])
        else:
            source = euclidean_cost if spec.metric == Metric.EUCLIDEAN else manhattan_cost
            cable = trench = int(source[position])
        raw.append((u, v, cable, trench))
    return validate_graph(raw, n=spec.n, root=1)


def gen_windmill(spec: InstanceSpec) -> Graph:
    """
    Blade k joins v_0 (vertex 1) to v_{2k-1} by a_k (cost 3*10^(k-1)) and
    to v_{2k} by d_k (4*10^(k-1)), and closes with b_k (2*10^(k-1)).
    Vertex v_i is numbered i + 1. The seed is ignored.
    """
    blades = spec.blades
    if 4 * 10 ** (blades - 1) > MAX_COST:
        raise CostOverflow(f"A windmill with {blades} blades exceeds the 2^40 cost cap")
    raw = []
    for blade in range(1, blades + 1):
        unit = 10 ** (blade - 1)
        inner, outer = 2 * blade, 2 * blade + 1
        raw.append((1, inner, 3 * unit, 3 * unit))
        raw.append((1, outer, 4 * unit, 4 * unit))
        raw.append((inner, outer, 2 * unit, 2 * unit))
    return validate_graph(raw, n=2 * blades + 1, root=1)


GENERATORS: dict[str, Callable[[InstanceSpec], Graph]] = {
    Family.INCOMPLETE: gen_incomplete,
    Family.COMPLETE: gen_complete,
    Family.GRID: gen_grid,
    Family.LOCATION: gen_location,
    Family.WINDMILL: gen_windmill,
}


def generate(spec: InstanceSpec) -> Graph:
    graph = GENERATORS[spec.family](spec)
    logger.debug("Generated %s with %d edges", instance_id(spec), graph.m)
    return graph
