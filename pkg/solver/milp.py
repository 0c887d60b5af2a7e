"""
LP-format export of the single-commodity flow formulation.

Variables: x_i_j >= 0 is the number of cables on arc (i, j), y_i_j (i < j)
is 1 when edge {i, j} is trenched. The output is byte-deterministic for a
fixed input.
"""

from __future__ import annotations

from graphs.core import Graph

from .branch_and_bound import epsilon_cut_threshold
from .scaling import compute_scaling

LINE_WIDTH = 78


def _x(tail: int, head: int) -> str:
    return f"x_{tail}_{head}"


def _y(u: int, v: int) -> str:
    return f"y_{u}_{v}"


def _expression(terms: list[tuple[int, str]]) -> list[str]:
    tokens = []
    for position, (coefficient, name) in enumerate(terms):
        sign = '-' if coefficient < 0 else '+'
        magnitude = abs(coefficient)
        if position == 0:
            tokens.append(f"-{magnitude} {name}" if coefficient < 0 else f"{magnitude} {name}")
        else:
            tokens.append(f"{sign} {magnitude} {name}")
    return tokens


def _plain(names: list[str], signs: list[str]) -> list[str]:
    """Unit-coefficient terms written without the coefficient."""
    tokens = []
    for position, (sign, name) in enumerate(zip(signs, names)):
        if position == 0:
            tokens.append(name if sign == '+' else f"-{name}")
        else:
            tokens.append(f"{sign} {name}")
    return tokens


def _wrap(label: str, tokens: list[str], tail: str = '') -> list[str]:
    lines = []
    current = f" {label}:"
    for token in tokens + ([tail] if tail else []):
        if len(current) + 1 + len(token) > LINE_WIDTH and current.strip():
            lines.append(current)
            current = '  ' + token
        else:
            current = f"{current} {token}"
    lines.append(current)
    return lines


def export_milp(
    graph: Graph,
    epsilon: int | None = None,
    cut: bool = False,
    weights: tuple[int, int] | None = None,
) -> str:
    """
    Objective weights default to (D, 1) from the hybrid scaling. The cut
    rows need a trench budget, so ``cut`` without ``epsilon`` is rejected.
    """
    if cut and epsilon is None:
        raise ValueError("The epsilon cut needs an epsilon budget")
    if epsilon is not None and epsilon < 0:
        raise ValueError(f"epsilon must be non-negative, got {epsilon}")
    if weights is None:
        weights = compute_scaling(graph).weights
    gamma_weight, tau_weight = weights
    if gamma_weight < 0 or tau_weight < 0:
        raise ValueError(f"Objective weights must be non-negative, got {weights}")

    root = graph.root
    arcs = []
    for edge in graph.edges:
        arcs.append((edge.u, edge.v, edge.cable_cost))
        arcs.append((edge.v, edge.u, edge.cable_cost))

    lines = [
        f"\\ cable-trench flow model: n={graph.n} m={graph.m} root={root}",
        f"\\ objective weights: cable {gamma_weight}, trench {tau_weight}",
        "Minimize",
    ]
    objective = [(gamma_weight * cost, _x(tail, head)) for tail, head, cost in arcs]
    objective += [(tau_weight * edge.trench_cost, _y(edge.u, edge.v)) for edge in graph.edges]
    lines += _wrap('obj', _expression(objective))

    lines.append("Subject To")
    out_of_root = [_x(tail, head) for tail, head, _ in arcs if tail == root]
    lines += _wrap('root_flow', _plain(out_of_root, ['+'] * len(out_of_root)), f"= {graph.n - 1}")

    for vertex in graph.vertices():
        if vertex == root:
            continue
        incoming = [_x(tail, head) for tail, head, _ in arcs if head == vertex]
        outgoing = [_x(tail, head) for tail, head, _ in arcs if tail == vertex]
        tokens = _plain(incoming + outgoing, ['+'] * len(incoming) + ['-'] * len(outgoing))
        lines += _wrap(f"flow_{vertex}", tokens, "= 1")

    trenches = [_y(edge.u, edge.v) for edge in graph.edges]
    lines += _wrap('tree_size', _plain(trenches, ['+'] * len(trenches)), f"= {graph.n - 1}")

    for edge in graph.edges:
        tokens = [f"{graph.n - 1} {_y(edge.u, edge.v)}", f"- {_x(edge.u, edge.v)}", f"- {_x(edge.v, edge.u)}"]
        lines += _wrap(f"couple_{edge.u}_{edge.v}", tokens, ">= 0")

    if epsilon is not None:
        budget = [(edge.trench_cost, _y(edge.u, edge.v)) for edge in graph.edges]
        lines += _wrap('eps_budget', _expression(budget), f"<= {epsilon}")
    if cut:
        threshold = epsilon_cut_threshold(graph, epsilon)
        for edge in graph.edges:
            lines.append(f" cut_{edge.u}_{edge.v}: {edge.trench_cost} {_y(edge.u, edge.v)} <= {threshold}")

    lines.append("Bounds")
    for tail, head, _ in arcs:
        if head == root:
            lines.append(f" {_x(tail, head)} = 0")

    lines.append("Binaries")
    lines += _binaries(trenches)
    lines.append("End")
    return "\n".join(lines) + "\n"


def _binaries(names: list[str]) -> list[str]:
    lines = []
    current = ''
    for name in names:
        if current and len(current) + 1 + len(name) > LINE_WIDTH:
            lines.append(current)
            current = ''
        current = f"{current} {name}"
    if current:
        lines.append(current)
    return lines
