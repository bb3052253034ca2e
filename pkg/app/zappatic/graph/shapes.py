"""Shape tracing of singular points.

A point's edge list must walk a cycle (E), a simple path (R) or a star
(S) through pairwise-distinct vertices. Tracing recovers the vertex
sequence, the traversal direction of every edge and the corners the point
covers. A corner is an unordered pair of edges meeting at a vertex, keyed
as ``(vertex, low_edge, high_edge)``.
"""

from collections.abc import Sequence
from itertools import combinations
from typing import Optional

from zappatic.core.primitives import MIN_ANGLE_ORDER, MIN_POINT_ORDER, ImmutableRecord
from zappatic.graph.exceptions import PointShapeError
from zappatic.graph.schema import EdgeData, PointKind, SingularPoint, ZappaticGraph

Corner = tuple[int, int, int]


def corner(vertex: int, first: int, second: int) -> Corner:
    return (vertex, min(first, second), max(first, second))


class PointTrace(ImmutableRecord):
    """Result of tracing one point.

    Attributes:
        vertices: Walk order for E and R; for S the centre first, then the
            opposite endpoints in edge order.
        directions: Per listed edge, +1 if traversed from its lower to its
            higher endpoint, -1 otherwise (S edges point away from the centre).
        corners: Corners covered by the point.
    """
    kind: PointKind
    order: int
    vertices: tuple[int, ...]
    directions: tuple[int, ...]
    corners: tuple[Corner, ...]


def _walk(edges: Sequence[EdgeData], start: int) -> Optional[tuple[list[int], list[int]]]:
    """Follow ``edges`` from ``start``; None when consecutive edges do not meet."""
    vertices = [start]
    directions = []
    current = start
    for edge in edges:
        if current not in edge.endpoints:
            return None
        directions.append(1 if current == edge.u else -1)
        current = edge.other(current)
        vertices.append(current)
    return vertices, directions


def _trace_cycle(edges: Sequence[EdgeData], ids: Sequence[int]) -> PointTrace:
    n = len(edges)
    if n < MIN_POINT_ORDER:
        raise PointShapeError(f"an E-point needs at least {MIN_POINT_ORDER} edges (got {n})")
    first = edges[0]
    for start in (first.u, first.v):
        walked = _walk(edges, start)
        if walked is None:
            continue
        vertices, directions = walked
        if vertices[-1] != start:
            continue
        cycle = vertices[:-1]
        if len(set(cycle)) != n:
            raise PointShapeError("E-point cycle revisits a vertex")
        corners = tuple(
            corner(cycle[i], ids[i - 1], ids[i]) for i in range(n)
        )
        return PointTrace(
            kind=PointKind.E,
            order=n,
            vertices=tuple(cycle),
            directions=tuple(directions),
            corners=corners,
        )
    raise PointShapeError("E-point edges do not close up into a cycle")


def _trace_path(edges: Sequence[EdgeData], ids: Sequence[int]) -> PointTrace:
    m = len(edges)
    if m + 1 < MIN_POINT_ORDER:
        raise PointShapeError(f"an R-point needs at least {MIN_POINT_ORDER - 1} edges (got {m})")
    first = edges[0]
    for start in (first.u, first.v):
        walked = _walk(edges, start)
        if walked is None:
            continue
        vertices, directions = walked
        if len(set(vertices)) != m + 1:
            continue
        corners = tuple(corner(vertices[i], ids[i - 1], ids[i]) for i in range(1, m))
        return PointTrace(
            kind=PointKind.R,
            order=m + 1,
            vertices=tuple(vertices),
            directions=tuple(directions),
            corners=corners,
        )
    raise PointShapeError("R-point edges do not form a simple path")


def _trace_star(edges: Sequence[EdgeData], ids: Sequence[int]) -> PointTrace:
    m = len(edges)
    if m + 1 < MIN_ANGLE_ORDER:
        raise PointShapeError(f"an S-point needs at least {MIN_ANGLE_ORDER - 1} edges (got {m})")
    common = set(edges[0].endpoints)
    for edge in edges[1:]:
        common &= set(edge.endpoints)
    if len(common) != 1:
        raise PointShapeError("S-point edges do not share exactly one common vertex")
    centre = common.pop()
    others = [edge.other(centre) for edge in edges]
    if len(set(others)) != m:
        raise PointShapeError("S-point edges do not reach pairwise-distinct vertices")
    return PointTrace(
        kind=PointKind.S,
        order=m + 1,
        vertices=(centre, *others),
        directions=tuple(1 if centre == edge.u else -1 for edge in edges),
        corners=tuple(corner(centre, a, b) for a, b in combinations(ids, 2)),
    )


_TRACERS = {
    PointKind.E: _trace_cycle,
    PointKind.R: _trace_path,
    PointKind.S: _trace_star,
}


def trace(graph: ZappaticGraph, point: SingularPoint) -> PointTrace:
    """Trace ``point`` inside ``graph``.

    Raises:
        PointShapeError: If the edge list does not have the required shape.
    """
    edges = [graph.edges[i] for i in point.edges]
    return _TRACERS[point.kind](edges, point.edges)


def try_trace(graph: ZappaticGraph, point: SingularPoint) -> Optional[PointTrace]:
    try:
        return trace(graph, point)
    except PointShapeError:
        return None


def graph_corners(graph: ZappaticGraph) -> list[Corner]:
    """Every corner of the solid graph, grouped by vertex."""
    corners = []
    for vertex in range(graph.vertex_count):
        for a, b in combinations(graph.incident_edges(vertex), 2):
            corners.append(corner(vertex, a, b))
    return corners
