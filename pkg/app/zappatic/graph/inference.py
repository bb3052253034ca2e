"""Planar R_3 inference.

In planar mode open 3-faces need not be listed: two lines in a plane
always meet, so every pair of edges at a vertex not covered by a listed
point is an R_3 point over that pair.
"""

from zappatic.graph.schema import GraphMode, PointKind, SingularPoint, ZappaticGraph
from zappatic.graph.shapes import graph_corners, try_trace
from zappatic.logging_config import get_logger

logger = get_logger(__name__)


def covered_corners(graph: ZappaticGraph) -> set[tuple[int, int, int]]:
    """Corners covered by the well-formed listed points."""
    covered = set()
    for point in graph.points:
        traced = try_trace(graph, point)
        if traced is not None:
            covered.update(traced.corners)
    return covered


def infer_r3(graph: ZappaticGraph) -> ZappaticGraph:
    """Add an R_3 point over every uncovered adjacent edge pair.

    Only planar graphs are enriched; general graphs are returned unchanged.
    Pairs of parallel edges are skipped (they cannot bound an open face and
    are reported by validation). The operation is idempotent.
    """
    if graph.mode is not GraphMode.PLANAR:
        return graph

    covered = covered_corners(graph)
    inferred = []
    for vertex, first, second in graph_corners(graph):
        if (vertex, first, second) in covered:
            continue
        if graph.edges[first].other(vertex) == graph.edges[second].other(vertex):
            continue
        inferred.append(SingularPoint(kind=PointKind.R, edges=(first, second)))

    if not inferred:
        return graph
    logger.debug("r3_inferred", added=len(inferred))
    return graph.model_copy(update={"points": graph.points + tuple(inferred)})
