"""Exception types shared across the package."""


class GraphError(ValueError):
    """Invalid graph input or an operation's precondition was violated."""


class CapError(GraphError):
    """A size cap (vertices, edges, solver limits) would be exceeded."""


class NotBipartiteError(GraphError):
    pass


class BudgetExhausted(Exception):
    """Raised internally when a search runs out of its work budget."""
