"""Domain exceptions for loading and validating associated graphs."""

from __future__ import annotations

from typing import TYPE_CHECKING

from zappatic.core.exceptions import ZappaticError

if TYPE_CHECKING:
    from zappatic.graph.validation import ValidationReport


class GraphLoadError(ZappaticError, ValueError):
    """Raised when a graph document cannot be parsed into a ZappaticGraph.

    Attributes:
        path: Where the problem is, either a dotted field path
            (``edges.3.u``) or a ``line:column`` position for malformed JSON.
        reason: Human-readable description of the problem.
    """

    def __init__(self, path: str, reason: str):
        self.path = path
        self.reason = reason
        super().__init__(f"{path}: {reason}" if path else reason)


class UnknownReferenceError(GraphLoadError):
    """Raised when an edge or point references a vertex/edge id that does not exist."""
    pass


class DuplicateIdError(GraphLoadError):
    """Raised when a point lists the same edge id more than once."""
    pass


class UnknownEdgeError(ZappaticError, KeyError):
    """Raised when an edge-local query names an edge id outside the graph.

    Attributes:
        edge: The offending edge id.
        edge_count: Number of edges in the graph.
    """

    def __init__(self, edge: int, edge_count: int):
        self.edge = edge
        self.edge_count = edge_count
        super().__init__(f"edge {edge} does not exist (graph has {edge_count} edges)")

    def __str__(self) -> str:
        return self.args[0]


class PointShapeError(ZappaticError, ValueError):
    """Raised when a point's edge list does not have the shape its kind demands."""
    pass


class InvalidGraphError(ZappaticError, ValueError):
    """Raised when a graph fails semantic validation.

    Attributes:
        report: The failing ValidationReport with itemized violations.
    """

    def __init__(self, report: ValidationReport):
        self.report = report
        summary = "; ".join(v.message for v in report.violations[:3])
        more = len(report.violations) - 3
        if more > 0:
            summary += f" (+{more} more)"
        super().__init__(f"invalid Zappatic graph: {summary}")
