from __future__ import annotations


class GraphError(ValueError):
    """Bad input: a graph or parameter outside an operation's domain."""


class NotCompletableError(GraphError):
    pass


class PlanarityError(GraphError):
    pass


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; indicates a bug or malformed input."""
