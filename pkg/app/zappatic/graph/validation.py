"""Semantic validation of associated graphs.

`validate` never raises: it returns a report with itemized violations.
`prepare` is the entry point used by every downstream computation. It
infers planar R_3 points, validates, and raises on failure.
"""

from collections import Counter
from enum import Enum
from math import comb
from typing import Optional

import networkx as nx

from zappatic.core.primitives import ImmutableRecord
from zappatic.graph.exceptions import InvalidGraphError, PointShapeError
from zappatic.graph.inference import infer_r3
from zappatic.graph.schema import GraphMode, PointKind, ZappaticGraph
from zappatic.graph.shapes import PointTrace, graph_corners, trace
from zappatic.logging_config import get_logger

logger = get_logger(__name__)


class ViolationCode(str, Enum):
    """Categories of validation failures."""
    DISCONNECTED = "disconnected"
    POINT_SHAPE = "point_shape"
    PARALLEL_EDGES = "parallel_edges"
    DOUBLE_COVERAGE = "double_coverage"
    UNCOVERED_PAIR = "uncovered_pair"
    PAIR_IDENTITY = "pair_identity"


class Violation(ImmutableRecord):
    code: ViolationCode
    message: str
    point: Optional[int] = None
    vertex: Optional[int] = None


class ValidationReport(ImmutableRecord):
    """Outcome of `validate`.

    Attributes:
        valid: True when no violation was found.
        violations: Itemized failures, in check order.
        pair_count: Left side of the planar pair-coverage identity,
            the sum over vertices of w(w-1)/2 (None in general mode).
        pair_cover: Right side, the pairs covered by the points by count
            (None in general mode).
    """
    valid: bool
    violations: tuple[Violation, ...] = ()
    pair_count: Optional[int] = None
    pair_cover: Optional[int] = None


def solid_graph(graph: ZappaticGraph) -> nx.MultiGraph:
    """The vertices and edges of G_X as a networkx multigraph keyed by edge id."""
    solid = nx.MultiGraph()
    solid.add_nodes_from(range(graph.vertex_count))
    for index, edge in enumerate(graph.edges):
        solid.add_edge(edge.u, edge.v, key=index)
    return solid


def covered_pair_count(traces: list[PointTrace]) -> int:
    """Pairs of adjacent edges covered by the given points, counted by kind and order.

    An n-face covers n pairs, an open n-face n-2 and an n-angle (n-1 choose 2).
    """
    total = 0
    for traced in traces:
        n = traced.order
        if traced.kind is PointKind.E:
            total += n
        elif traced.kind is PointKind.R:
            total += n - 2
        else:
            total += comb(n - 1, 2)
    return total


def validate(graph: ZappaticGraph) -> ValidationReport:
    """Check connectivity, point shapes and (planar) exact pair coverage.

    Planar graphs are checked after R_3 inference, so omitted open
    3-faces are not reported as uncovered.
    """
    if graph.mode is GraphMode.PLANAR:
        graph = infer_r3(graph)

    violations: list[Violation] = []

    if not nx.is_connected(solid_graph(graph)):
        violations.append(Violation(
            code=ViolationCode.DISCONNECTED,
            message="the solid graph (vertices and edges) is not connected",
        ))

    traces: list[PointTrace] = []
    for index, point in enumerate(graph.points):
        try:
            traces.append(trace(graph, point))
        except PointShapeError as exc:
            violations.append(Violation(
                code=ViolationCode.POINT_SHAPE,
                message=f"point {index} ({point.kind.value}): {exc}",
                point=index,
            ))

    if graph.mode is not GraphMode.PLANAR:
        return _report(violations)

    pairs = Counter(edge.endpoints for edge in graph.edges)
    for (u, v), count in sorted(pairs.items()):
        if count > 1:
            violations.append(Violation(
                code=ViolationCode.PARALLEL_EDGES,
                message=f"planes {u} and {v} share {count} edges; two planes meet in one line",
                vertex=u,
            ))

    coverage = Counter(c for traced in traces for c in traced.corners)
    for vertex, first, second in graph_corners(graph):
        hits = coverage.get((vertex, first, second), 0)
        if hits == 0:
            violations.append(Violation(
                code=ViolationCode.UNCOVERED_PAIR,
                message=f"edges {first} and {second} at vertex {vertex} are not covered by any point",
                vertex=vertex,
            ))
        elif hits > 1:
            violations.append(Violation(
                code=ViolationCode.DOUBLE_COVERAGE,
                message=f"edges {first} and {second} at vertex {vertex} are covered by {hits} points",
                vertex=vertex,
            ))

    pair_count = sum(comb(w, 2) for w in graph.valences())
    pair_cover = covered_pair_count(traces)
    if pair_count != pair_cover:
        violations.append(Violation(
            code=ViolationCode.PAIR_IDENTITY,
            message=f"adjacent edge pairs ({pair_count}) differ from pairs covered by points ({pair_cover})",
        ))
    return _report(violations, pair_count, pair_cover)


def _report(
    violations: list[Violation],
    pair_count: Optional[int] = None,
    pair_cover: Optional[int] = None,
) -> ValidationReport:
    return ValidationReport(
        valid=not violations,
        violations=tuple(violations),
        pair_count=pair_count,
        pair_cover=pair_cover,
    )


def prepare(graph: ZappaticGraph) -> ZappaticGraph:
    """Infer planar R_3 points and validate.

    Returns:
        The enriched graph, ready for counting and invariant formulas.

    Raises:
        InvalidGraphError: If validation fails.
    """
    enriched = infer_r3(graph)
    report = validate(enriched)
    if not report.valid:
        logger.info("graph_rejected", violations=len(report.violations))
        raise InvalidGraphError(report)
    return enriched
