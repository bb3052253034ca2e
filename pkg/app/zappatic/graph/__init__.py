"""The associated graph G_X: schema, loading, inference, validation and counting."""

from .census import EdgeCensus, SingularityCensus, counts, edge_local_census
from .exceptions import (
    DuplicateIdError,
    GraphLoadError,
    InvalidGraphError,
    PointShapeError,
    UnknownEdgeError,
    UnknownReferenceError,
)
from .inference import infer_r3
from .loader import GraphLoader, load, serialize, to_document
from .schema import (
    EdgeData,
    GraphMode,
    PointKind,
    SingularPoint,
    VertexWeights,
    ZappaticGraph,
)
from .shapes import PointTrace, trace
from .validation import ValidationReport, Violation, ViolationCode, prepare, validate

__all__ = [
    "ZappaticGraph",
    "VertexWeights",
    "EdgeData",
    "SingularPoint",
    "GraphMode",
    "PointKind",
    "GraphLoader",
    "load",
    "serialize",
    "to_document",
    "infer_r3",
    "validate",
    "prepare",
    "ValidationReport",
    "Violation",
    "ViolationCode",
    "PointTrace",
    "trace",
    "counts",
    "edge_local_census",
    "SingularityCensus",
    "EdgeCensus",
    "GraphLoadError",
    "UnknownReferenceError",
    "DuplicateIdError",
    "UnknownEdgeError",
    "PointShapeError",
    "InvalidGraphError",
]
