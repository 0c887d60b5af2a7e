"""Solver errors"""


class SolverError(Exception):
    """Base class for solver failures that are not input validation problems."""


class TimeLimitExceeded(SolverError):

    def __init__(self, message, partial=None):
        self.partial = partial
        super().__init__(message)


class InconsistentLexminError(SolverError):
    """lexmin(c_tau, c_gamma) came back with a trench cost other than the MST's."""


class FrontierOrderError(SolverError):
    """Consecutive epsilon-constraint iterates failed to improve strictly."""
