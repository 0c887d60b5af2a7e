"""
Integer scaling of the hybrid epsilon-constraint objective.

The subproblem minimizes D * c_gamma + c_tau with D = d_lex + 1, where d_lex
is the trench-cost spread between lexmin(c_gamma, c_tau) and the MST. Inside
the loop every feasible tree has c_tau within d_lex of the MST, so one unit
of c_gamma always outweighs any c_tau difference.
"""

from dataclasses import dataclass

from graphs.core import INT64_LIMIT, Graph, ObjectivePoint, kruskal_mst, lexmin_gamma_tau
from graphs.exceptions import CostOverflow


@dataclass(frozen=True)
class ScalingInfo:
    d_lex: int
    scale: int

    def __post_init__(self):
        if self.d_lex < 0:
            raise ValueError(f"d_lex must be non-negative, got {self.d_lex}")
        if self.scale != self.d_lex + 1:
            raise ValueError("scale must equal d_lex + 1")

    @property
    def weights(self) -> tuple[int, int]:
        return (self.scale, 1)


def compute_scaling(graph: Graph, lexmin_point: ObjectivePoint | None = None) -> ScalingInfo:
    if lexmin_point is None:
        _, lexmin_point = lexmin_gamma_tau(graph)
    mst_cost = kruskal_mst(graph).trench_cost
    d_lex = lexmin_point.c_tau - mst_cost
    scale = d_lex + 1

    # every edge lies on at most n - 1 root paths
    gamma_cap = (graph.n - 1) * graph.total_cable_cost()
    if scale * gamma_cap + graph.total_trench_cost() >= INT64_LIMIT:
        raise CostOverflow(f"Scaled objective with D={scale} may exceed the 64-bit range")
    return ScalingInfo(d_lex=d_lex, scale=scale)
