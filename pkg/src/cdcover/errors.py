"""Exception types shared across the package."""


class GraphError(ValueError):
    """Malformed graph data or an operation applied to the wrong graph."""


class UnknownEdgeError(GraphError):
    """An edge id that does not belong to the graph at hand."""


class PreconditionError(ValueError):
    """An operation was called outside its stated preconditions."""


class CircuitGraphError(PreconditionError):
    """The graph is a single circuit, which degree-two suppression cannot anchor."""


class NoCircuitError(PreconditionError):
    """No circuit exists through the requested edge within the allowed set."""


class NotEvenError(PreconditionError):
    """An edge set that was required to be an even subgraph is not."""


class BudgetExceededError(RuntimeError):
    """A search ran out of budget before the space was fully enumerated.

    Distinct from a definitive negative: the search is inconclusive.
    """

    def __init__(self, message, *, nodes=None, stage=None):
        super().__init__(message)
        self.nodes = nodes
        self.stage = stage


class InternalCheckError(RuntimeError):
    """A construction failed its own runtime verification; indicates a bug."""


class TheoryViolationError(InternalCheckError):
    """An outcome the underlying theory rules out for valid inputs."""
