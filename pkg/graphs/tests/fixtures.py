"""Small hand-checked instances shared by the test suites"""

from graphs.core import MAX_COST, Tree, validate_graph

# Four-cycle with root S = 1: the three spanning trees T1, T2, T3 map to
# (26, 21), (29, 19) and (31, 15); the fourth tree is dominated.
EXAMPLE_EDGES = [
    (1, 2, 5, 5),
    (1, 4, 10, 10),
    (2, 3, 6, 6),
    (3, 4, 4, 4),
]


def example_graph():
    return validate_graph(EXAMPLE_EDGES, n=4, root=1)


def tree_of(graph, *pairs):
    return Tree.from_edges(graph, [graph.edge_index(u, v) for u, v in pairs])


def example_trees(graph):
    return {
        'T1': tree_of(graph, (1, 2), (1, 4), (2, 3)),
        'T2': tree_of(graph, (1, 2), (1, 4), (3, 4)),
        'T3': tree_of(graph, (1, 2), (2, 3), (3, 4)),
    }


# Valid costs whose scaled objective D * c_gamma + c_tau overflows 64 bits
OVERFLOW_FILE = (
    "p bgctp 3 3 1\n"
    f"e 1 2 {MAX_COST} 0\n"
    f"e 1 3 1 {MAX_COST}\n"
    f"e 2 3 1 {MAX_COST}\n"
)
