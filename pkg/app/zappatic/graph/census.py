"""Singularity census of an associated graph.

Counts vertices, edges, joined vertex pairs, faces, open faces and angles
by order, plus the valence vector. Both the global census and the
edge-local census along one double curve are plain frozen records, so the
invariant formulas can run on hypothetical censuses too.
"""

from collections import Counter

from pydantic import computed_field

from zappatic.core.primitives import ImmutableRecord, NonNegativeInt
from zappatic.graph.exceptions import UnknownEdgeError
from zappatic.graph.schema import PointKind, ZappaticGraph


def _ordered(counter: Counter) -> dict[int, int]:
    return {n: counter[n] for n in sorted(counter) if counter[n]}


class _PointCounts(ImmutableRecord):
    """Point counts by order: ``faces`` (f_n), ``open_faces`` (r_n), ``angles`` (s_n)."""
    faces: dict[int, NonNegativeInt] = {}
    open_faces: dict[int, NonNegativeInt] = {}
    angles: dict[int, NonNegativeInt] = {}

    def f(self, n: int) -> int:
        return self.faces.get(n, 0)

    def r(self, n: int) -> int:
        return self.open_faces.get(n, 0)

    def s(self, n: int) -> int:
        return self.angles.get(n, 0)

    def rho(self, n: int) -> int:
        """r_3 for n = 3, else r_n + s_n."""
        if n == 3:
            return self.r(3)
        return self.r(n) + self.s(n)

    def orders(self) -> list[int]:
        """Every order that occurs, ascending."""
        return sorted(set(self.faces) | set(self.open_faces) | set(self.angles))


class SingularityCensus(_PointCounts):
    """Global census of G_X.

    Attributes:
        v: Number of vertices.
        e: Number of edges.
        e_tilde: Number of vertex pairs joined by at least one edge.
        valences: Edge count at each vertex, in vertex order.
    """
    v: NonNegativeInt
    e: NonNegativeInt
    e_tilde: NonNegativeInt
    valences: tuple[NonNegativeInt, ...] = ()

    @computed_field
    @property
    def f_total(self) -> int:
        return sum(self.faces.values())

    @computed_field
    @property
    def r_total(self) -> int:
        return sum(self.open_faces.values())

    @computed_field
    @property
    def s_total(self) -> int:
        return sum(self.angles.values())

    @computed_field
    @property
    def rho_total(self) -> int:
        return self.r_total + self.s_total

    @computed_field
    @property
    def tau(self) -> int:
        return self.rho_total + self.f_total

    def has_only(self, allowed: set[tuple[PointKind, int]]) -> bool:
        """True when every point present is one of the (kind, order) pairs in ``allowed``."""
        present = (
            {(PointKind.E, n) for n in self.faces}
            | {(PointKind.R, n) for n in self.open_faces}
            | {(PointKind.S, n) for n in self.angles}
        )
        return present <= allowed

    def has_higher_open_points(self) -> bool:
        """True when some R_n or S_n with n >= 4 exists."""
        return any(n >= 4 for n in self.open_faces) or bool(self.angles)


class EdgeCensus(_PointCounts):
    """Census of the points lying on one edge (double curve) gamma."""
    edge: NonNegativeInt


def _point_counters(points) -> tuple[Counter, Counter, Counter]:
    by_kind = {PointKind.E: Counter(), PointKind.R: Counter(), PointKind.S: Counter()}
    for point in points:
        by_kind[point.kind][point.order] += 1
    return by_kind[PointKind.E], by_kind[PointKind.R], by_kind[PointKind.S]


def counts(graph: ZappaticGraph) -> SingularityCensus:
    """Census of a validated graph (planar graphs after R_3 inference)."""
    faces, open_faces, angles = _point_counters(graph.points)
    return SingularityCensus(
        v=graph.vertex_count,
        e=graph.edge_count,
        e_tilde=len({edge.endpoints for edge in graph.edges}),
        faces=_ordered(faces),
        open_faces=_ordered(open_faces),
        angles=_ordered(angles),
        valences=graph.valences(),
    )


def edge_local_census(graph: ZappaticGraph, edge: int) -> EdgeCensus:
    """f_n, r_n, s_n along one edge: points whose edge list contains it.

    Raises:
        UnknownEdgeError: If ``edge`` is not an edge id of ``graph``.
    """
    if not 0 <= edge < graph.edge_count:
        raise UnknownEdgeError(edge, graph.edge_count)
    faces, open_faces, angles = _point_counters(p for p in graph.points if edge in p.edges)
    return EdgeCensus(
        edge=edge,
        faces=_ordered(faces),
        open_faces=_ordered(open_faces),
        angles=_ordered(angles),
    )
