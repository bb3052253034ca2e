"""Domain exceptions for invariant computations."""

from collections.abc import Sequence

from zappatic.core.exceptions import ZappaticError


class MissingWeightsError(ZappaticError, ValueError):
    """Raised when a general-mode formula needs weights the graph does not carry.

    Attributes:
        fields: Dotted paths of the missing weights (``vertices.2.chi``).
    """

    def __init__(self, fields: Sequence[str]):
        self.fields = tuple(fields)
        shown = ", ".join(self.fields[:4])
        if len(self.fields) > 4:
            shown += f" (+{len(self.fields) - 4} more)"
        super().__init__(f"missing weights: {shown}")


class DisconnectedGraphError(ZappaticError, ValueError):
    """Raised when a formula that assumes a connected curve gets a disconnected dual graph."""
    pass


class InvalidSuppliedValueError(ZappaticError, ValueError):
    """Raised when a user-supplied dimension (ker/coker of Phi) is impossible."""
    pass
