"""Validation errors raised by the graph core"""

from django.core.exceptions import ValidationError


class GraphValidationError(ValidationError):
    """Base class for every structural problem with an instance."""
    default_code = 'invalid_graph'

    def __init__(self, message, code=None, params=None):
        super().__init__(message, code=code or self.default_code, params=params)


class DisconnectedGraph(GraphValidationError):
    default_code = 'disconnected'


class SelfLoop(GraphValidationError):
    default_code = 'self_loop'


class DuplicateEdge(GraphValidationError):
    default_code = 'duplicate_edge'


class NegativeCost(GraphValidationError):
    default_code = 'negative_cost'


class CostOverflow(GraphValidationError):
    default_code = 'cost_overflow'


class NotSpanningTree(GraphValidationError):
    default_code = 'not_spanning_tree'
