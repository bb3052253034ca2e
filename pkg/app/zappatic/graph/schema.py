"""
Domain model of the associated graph G_X of a good Zappatic surface.

Vertices are the irreducible components X_i, edges the irreducible
components of the double curves, and singular points are recorded as
E_n faces, R_n open faces and S_n angles over ordered edge lists.

Ids are implicit: the i-th vertex has id i, the j-th edge has id j. Edges
are stored lexicographically oriented (u < v), which fixes every sign of
the boundary maps downstream.
"""

from collections.abc import Sequence
from enum import Enum
from typing import Optional

from pydantic import Field, model_validator

from zappatic.core.primitives import (
    ImmutableRecord,
    NonNegativeInt,
    PositiveInt,
)


# ═══════════════════════════════════════════════════════════════════════════
# VOCABULARY
# ═══════════════════════════════════════════════════════════════════════════

class GraphMode(str, Enum):
    """Which family of components the graph describes.

    PLANAR:  Every component is a plane and every double curve a line.
             Weights are forced and open 3-faces may be left implicit.
    GENERAL: Components and double curves carry explicit weights; every
             singular point must be listed.
    """
    PLANAR = "planar"
    GENERAL = "general"


class PointKind(str, Enum):
    """Local type of a Zappatic singular point.

    E: cone over a cycle of lines (closed face).
    R: cone over a chain of lines (open face).
    S: cone over a fork of lines (angle).
    """
    E = "E"
    R = "R"
    S = "S"


# ═══════════════════════════════════════════════════════════════════════════
# WEIGHTS
# ═══════════════════════════════════════════════════════════════════════════

PLANE_WEIGHTS = {"chi": 1, "k2": 9, "pg": 0, "q": 0, "sectional_genus": 0, "degree": 1}
"""Invariants of P^2 with its hyperplane class."""

LINE_WEIGHTS = {
    "genus": 0,
    "degree": 1,
    "self_int_u": 1,
    "self_int_v": 1,
    "normal_deg_u": 1,
    "normal_deg_v": 1,
}
"""A line in P^2 on both sides of the double curve."""


class VertexWeights(ImmutableRecord):
    """Invariants of one component X_i.

    Attributes:
        chi: Holomorphic Euler characteristic of the structure sheaf.
        k2: Self-intersection of the canonical class of X_i.
        pg: Geometric genus.
        q: Irregularity.
        sectional_genus: Genus of a general hyperplane section D_i.
        degree: Degree of X_i.

    Any field may be unknown (None) in general mode; formulas that need a
    missing weight report it as unavailable.
    """
    chi: Optional[int] = None
    k2: Optional[int] = None
    pg: Optional[NonNegativeInt] = None
    q: Optional[NonNegativeInt] = None
    sectional_genus: Optional[NonNegativeInt] = None
    degree: Optional[PositiveInt] = None

    @classmethod
    def plane(cls) -> "VertexWeights":
        return cls(**PLANE_WEIGHTS)

    def is_plane(self) -> bool:
        return self.model_dump() == PLANE_WEIGHTS


class EdgeData(ImmutableRecord):
    """One irreducible component of a double curve C_ij.

    Self-intersections and normal degrees are side-dependent: the ``_u``
    values are computed on X_u, the ``_v`` values on X_v.
    """
    u: NonNegativeInt
    v: NonNegativeInt
    genus: Optional[NonNegativeInt] = None
    degree: Optional[PositiveInt] = None
    self_int_u: Optional[int] = None
    self_int_v: Optional[int] = None
    normal_deg_u: Optional[int] = None
    normal_deg_v: Optional[int] = None

    @model_validator(mode="after")
    def _check_orientation(self) -> "EdgeData":
        if self.u == self.v:
            raise ValueError(f"edge is a loop at vertex {self.u}")
        if self.u > self.v:
            raise ValueError(f"edge must be oriented low to high (got u={self.u}, v={self.v})")
        return self

    @classmethod
    def line(cls, u: int, v: int) -> "EdgeData":
        return cls(u=u, v=v, **LINE_WEIGHTS)

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.u, self.v)

    def is_line(self) -> bool:
        return self.model_dump(exclude={"u", "v"}) == LINE_WEIGHTS

    def other(self, vertex: int) -> int:
        """Return the endpoint opposite to ``vertex``."""
        if vertex == self.u:
            return self.v
        if vertex == self.v:
            return self.u
        raise ValueError(f"vertex {vertex} is not an endpoint of edge ({self.u}, {self.v})")


# ═══════════════════════════════════════════════════════════════════════════
# SINGULAR POINTS
# ═══════════════════════════════════════════════════════════════════════════

class SingularPoint(ImmutableRecord):
    """An E_n, R_n or S_n point over an ordered list of edge ids.

    E lists the n edges of a closed face in cyclic order; R lists the
    n-1 edges of an open face in path order; S lists the n-1 edges of an
    angle, all meeting at the centre.
    """
    kind: PointKind
    edges: tuple[NonNegativeInt, ...] = Field(min_length=1)

    @property
    def order(self) -> int:
        if self.kind is PointKind.E:
            return len(self.edges)
        return len(self.edges) + 1


# ═══════════════════════════════════════════════════════════════════════════
# ASSOCIATED GRAPH
# ═══════════════════════════════════════════════════════════════════════════

class ZappaticGraph(ImmutableRecord):
    """The decorated multigraph G_X.

    Construction checks referential integrity and the planar weight
    convention; semantic checks (connectivity, point shapes, pair coverage)
    live in `zappatic.graph.validation`.
    """
    mode: GraphMode
    vertices: tuple[VertexWeights, ...] = Field(min_length=1)
    edges: tuple[EdgeData, ...] = ()
    points: tuple[SingularPoint, ...] = ()

    @model_validator(mode="after")
    def _check_references(self) -> "ZappaticGraph":
        n_vertices = len(self.vertices)
        for index, edge in enumerate(self.edges):
            if edge.v >= n_vertices:
                raise ValueError(f"edge {index} references unknown vertex {edge.v}")
        n_edges = len(self.edges)
        for index, point in enumerate(self.points):
            for edge_id in point.edges:
                if edge_id >= n_edges:
                    raise ValueError(f"point {index} references unknown edge {edge_id}")
            if len(set(point.edges)) != len(point.edges):
                raise ValueError(f"point {index} lists an edge more than once")
        return self

    @model_validator(mode="after")
    def _check_planar_weights(self) -> "ZappaticGraph":
        if self.mode is not GraphMode.PLANAR:
            return self
        for index, vertex in enumerate(self.vertices):
            if not vertex.is_plane():
                raise ValueError(f"planar vertex {index} does not carry plane weights")
        for index, edge in enumerate(self.edges):
            if not edge.is_line():
                raise ValueError(f"planar edge {index} does not carry line weights")
        return self

    @classmethod
    def planar(
        cls,
        vertex_count: int,
        edges: Sequence[tuple[int, int]],
        points: Sequence[tuple[PointKind, Sequence[int]]] = (),
    ) -> "ZappaticGraph":
        """Build a planar graph from bare vertex pairs and point edge lists."""
        return cls(
            mode=GraphMode.PLANAR,
            vertices=tuple(VertexWeights.plane() for _ in range(vertex_count)),
            edges=tuple(EdgeData.line(min(u, v), max(u, v)) for u, v in edges),
            points=tuple(SingularPoint(kind=kind, edges=tuple(ids)) for kind, ids in points),
        )

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def incident_edges(self, vertex: int) -> list[int]:
        """Edge ids touching ``vertex``, in id order."""
        return [i for i, edge in enumerate(self.edges) if vertex in edge.endpoints]

    def valences(self) -> tuple[int, ...]:
        counts = [0] * self.vertex_count
        for edge in self.edges:
            counts[edge.u] += 1
            counts[edge.v] += 1
        return tuple(counts)
