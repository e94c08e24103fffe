"""Exception types shared across the package."""


class GraphError(ValueError):
    """Invalid input: malformed graph, bad vertex id, out-of-scope request."""


class Graph6Error(GraphError):
    """Malformed graph6 text. Carries the byte offset of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class HypothesisError(GraphError):
    """A precondition of an operation does not hold; the message names it."""


class ContradictionError(RuntimeError):
    """An exhaustive search came up empty although a witness is guaranteed
    to exist on the given input.

    This is never swallowed: it means either an implementation bug or a
    genuine counterexample to a published guarantee, and both deserve a
    loud report.
    """
