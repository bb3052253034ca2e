"""Cellular chain complex of G_X and its Betti numbers.

0-cells are vertices, 1-cells the solid edges and 2-cells the closed
faces (E-points). Open faces and angles contribute no cells. Edges are
oriented from their lower to their higher endpoint; a face row carries +1
on each edge it traverses in that direction and -1 otherwise.
"""

from zappatic.core.primitives import ImmutableRecord, NonNegativeInt
from zappatic.graph.schema import PointKind, ZappaticGraph
from zappatic.graph.shapes import trace
from zappatic.homology.linalg import integer_rank, matmul
from zappatic.logging_config import get_logger

logger = get_logger(__name__)


class ChainComplex(ImmutableRecord):
    """Boundary matrices of the CW structure.

    Attributes:
        vertex_count: Number of 0-cells.
        edge_count: Number of 1-cells.
        face_count: Number of 2-cells.
        d1: e x v matrix; row of edge (u, v) has -1 at u and +1 at v.
        d2: f x e matrix; one signed row per closed face.
    """
    vertex_count: NonNegativeInt
    edge_count: NonNegativeInt
    face_count: NonNegativeInt
    d1: tuple[tuple[int, ...], ...]
    d2: tuple[tuple[int, ...], ...]

    def rank_d1(self) -> int:
        return integer_rank(self.d1)

    def rank_d2(self) -> int:
        return integer_rank(self.d2)

    def boundary_squared_is_zero(self) -> bool:
        """True when d2 . d1 = 0."""
        return all(entry == 0 for row in matmul(self.d2, self.d1) for entry in row)


class BettiVector(ImmutableRecord):
    b0: NonNegativeInt
    b1: NonNegativeInt
    b2: NonNegativeInt

    @property
    def euler(self) -> int:
        return self.b0 - self.b1 + self.b2


class HomologyReport(ImmutableRecord):
    """Cell counts, boundary ranks and Betti numbers of one graph."""
    v: NonNegativeInt
    e: NonNegativeInt
    f: NonNegativeInt
    rank_d1: NonNegativeInt
    rank_d2: NonNegativeInt
    betti: BettiVector


def chain_complex(graph: ZappaticGraph) -> ChainComplex:
    """Build d1 and d2 for a validated graph."""
    v = graph.vertex_count
    d1 = []
    for edge in graph.edges:
        row = [0] * v
        row[edge.u] = -1
        row[edge.v] = 1
        d1.append(tuple(row))

    d2 = []
    for point in graph.points:
        if point.kind is not PointKind.E:
            continue
        traced = trace(graph, point)
        row = [0] * graph.edge_count
        for edge_id, direction in zip(point.edges, traced.directions):
            row[edge_id] = direction
        d2.append(tuple(row))

    return ChainComplex(
        vertex_count=v,
        edge_count=graph.edge_count,
        face_count=len(d2),
        d1=tuple(d1),
        d2=tuple(d2),
    )


def homology_report(graph: ZappaticGraph) -> HomologyReport:
    """Betti numbers over Q together with the ranks they come from.

    b0 = v - rank d1, b1 = e - rank d1 - rank d2, b2 = f - rank d2.
    """
    complex_ = chain_complex(graph)
    rank_d1 = complex_.rank_d1()
    rank_d2 = complex_.rank_d2()
    betti_vector = BettiVector(
        b0=complex_.vertex_count - rank_d1,
        b1=complex_.edge_count - rank_d1 - rank_d2,
        b2=complex_.face_count - rank_d2,
    )
    logger.debug("betti_computed", **betti_vector.model_dump())
    return HomologyReport(
        v=complex_.vertex_count,
        e=complex_.edge_count,
        f=complex_.face_count,
        rank_d1=rank_d1,
        rank_d2=rank_d2,
        betti=betti_vector,
    )


def betti(graph: ZappaticGraph) -> BettiVector:
    return homology_report(graph).betti
