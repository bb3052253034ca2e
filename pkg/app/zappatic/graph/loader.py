"""Loading and canonical serialization of graph documents.

`load` turns JSON text into a `ZappaticGraph` with every planar default
applied. It checks syntax, schema and references but not semantics; see
`zappatic.graph.validation` for the latter. `serialize` is its inverse and
produces the canonical, byte-stable form.
"""

import json
from pathlib import Path
from typing import Any, Union

from pydantic import ValidationError

from zappatic.graph.document import EdgeDocument, GraphDocument, PointDocument, VertexDocument
from zappatic.graph.exceptions import DuplicateIdError, GraphLoadError, UnknownReferenceError
from zappatic.graph.schema import (
    LINE_WEIGHTS,
    PLANE_WEIGHTS,
    EdgeData,
    GraphMode,
    SingularPoint,
    VertexWeights,
    ZappaticGraph,
)
from zappatic.logging_config import get_logger

logger = get_logger(__name__)

_SIDE_SWAPS = (("self_int_u", "self_int_v"), ("normal_deg_u", "normal_deg_v"))


def _validation_error(exc: ValidationError) -> GraphLoadError:
    """Convert the first pydantic error into a GraphLoadError with a dotted path."""
    first = exc.errors()[0]
    path = ".".join(str(part) for part in first["loc"])
    return GraphLoadError(path, first["msg"])


# ═══════════════════════════════════════════════════════════════════════════════
# GRAPH LOADER
# ═══════════════════════════════════════════════════════════════════════════════

class GraphLoader:

    # =========================================================
    # 1. RECORD RESOLUTION
    # =========================================================
    @staticmethod
    def _vertex(index: int, doc: VertexDocument, planar: bool) -> VertexWeights:
        given = doc.model_dump(exclude_none=True)
        if not planar:
            return VertexWeights(**given)
        for name, value in given.items():
            if value != PLANE_WEIGHTS[name]:
                raise GraphLoadError(
                    f"vertices.{index}.{name}",
                    f"planar vertices are planes; {name} must be {PLANE_WEIGHTS[name]} (got {value})",
                )
        return VertexWeights.plane()

    @staticmethod
    def _edge(index: int, doc: EdgeDocument, vertex_count: int, planar: bool) -> EdgeData:
        for side in ("u", "v"):
            vertex = getattr(doc, side)
            if vertex >= vertex_count:
                raise UnknownReferenceError(
                    f"edges.{index}.{side}",
                    f"unknown vertex {vertex} (graph has {vertex_count} vertices)",
                )
        if doc.u == doc.v:
            raise GraphLoadError(f"edges.{index}", f"edge is a loop at vertex {doc.u}")

        given = doc.model_dump(exclude_none=True)
        if doc.u > doc.v:
            # Normalize to u < v; side-dependent weights follow their vertex.
            given["u"], given["v"] = doc.v, doc.u
            for left, right in _SIDE_SWAPS:
                left_value, right_value = given.pop(left, None), given.pop(right, None)
                if right_value is not None:
                    given[left] = right_value
                if left_value is not None:
                    given[right] = left_value

        if not planar:
            return EdgeData(**given)
        for name, value in given.items():
            if name in LINE_WEIGHTS and value != LINE_WEIGHTS[name]:
                raise GraphLoadError(
                    f"edges.{index}.{name}",
                    f"planar edges are lines; {name} must be {LINE_WEIGHTS[name]} (got {value})",
                )
        return EdgeData.line(given["u"], given["v"])

    @staticmethod
    def _point(index: int, doc: PointDocument, edge_count: int) -> SingularPoint:
        seen: set[int] = set()
        for position, edge_id in enumerate(doc.edges):
            if edge_id >= edge_count:
                raise UnknownReferenceError(
                    f"points.{index}.edges.{position}",
                    f"unknown edge {edge_id} (graph has {edge_count} edges)",
                )
            if edge_id in seen:
                raise DuplicateIdError(
                    f"points.{index}.edges.{position}",
                    f"edge {edge_id} is listed more than once",
                )
            seen.add(edge_id)
        return SingularPoint(kind=doc.kind, edges=tuple(doc.edges))

    # =========================================================
    # 2. CORE (plain dictionaries)
    # =========================================================
    @staticmethod
    def from_dict(data: Any) -> ZappaticGraph:
        """Build a ZappaticGraph from a decoded JSON document.

        Raises:
            GraphLoadError: On schema violations (with the offending field path).
            UnknownReferenceError: On dangling vertex or edge ids.
            DuplicateIdError: On a point that repeats an edge id.
        """
        if not isinstance(data, dict):
            raise GraphLoadError("", "document must be a JSON object")
        try:
            doc = GraphDocument.model_validate(data)
        except ValidationError as exc:
            raise _validation_error(exc) from exc

        planar = doc.mode is GraphMode.PLANAR
        vertices = tuple(GraphLoader._vertex(i, v, planar) for i, v in enumerate(doc.vertices))
        edges = tuple(
            GraphLoader._edge(i, e, len(vertices), planar) for i, e in enumerate(doc.edges)
        )
        points = tuple(GraphLoader._point(i, p, len(edges)) for i, p in enumerate(doc.points))

        try:
            graph = ZappaticGraph(mode=doc.mode, vertices=vertices, edges=edges, points=points)
        except ValidationError as exc:
            raise _validation_error(exc) from exc

        logger.debug(
            "graph_loaded",
            mode=graph.mode.value,
            vertices=graph.vertex_count,
            edges=graph.edge_count,
            points=len(graph.points),
        )
        return graph

    # =========================================================
    # 3. FORMAT ADAPTERS (JSON text)
    # =========================================================
    @classmethod
    def from_string(cls, document: str) -> ZappaticGraph:
        """Parse JSON text; syntax errors carry a ``line:column`` path."""
        try:
            data = json.loads(document)
        except json.JSONDecodeError as exc:
            raise GraphLoadError(f"{exc.lineno}:{exc.colno}", exc.msg) from exc
        return cls.from_dict(data)

    # =========================================================
    # 4. I/O ADAPTERS (disk)
    # =========================================================
    @classmethod
    def from_file(cls, file_path: Union[str, Path]) -> ZappaticGraph:
        path = Path(file_path)
        if not path.exists():
            raise FileNotFoundError(f"graph document not found: {path}")
        return cls.from_string(path.read_text(encoding="utf-8"))


def load(document: str) -> ZappaticGraph:
    """Parse a graph document (UTF-8 JSON text). Does not validate semantics."""
    return GraphLoader.from_string(document)


# ═══════════════════════════════════════════════════════════════════════════════
# CANONICAL SERIALIZATION
# ═══════════════════════════════════════════════════════════════════════════════

def to_document(graph: ZappaticGraph) -> dict[str, Any]:
    """Render a graph as a plain document in schema key order.

    Planar weights are implied by the mode and therefore omitted.
    """
    planar = graph.mode is GraphMode.PLANAR
    return {
        "mode": graph.mode.value,
        "vertices": [{} if planar else v.model_dump(exclude_none=True) for v in graph.vertices],
        "edges": [
            {"u": e.u, "v": e.v} if planar else e.model_dump(exclude_none=True)
            for e in graph.edges
        ],
        "points": [{"kind": p.kind.value, "edges": list(p.edges)} for p in graph.points],
    }


def serialize(graph: ZappaticGraph) -> str:
    """Canonical compact JSON text of a graph, newline-terminated."""
    return json.dumps(to_document(graph), separators=(",", ":")) + "\n"
