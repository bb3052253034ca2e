"""Associated graphs from incidence structures of planes.

An incidence structure lists labelled points and the planes spanned by
them. Lines are the sides shared by two planes. Every point lying on at
least three planes is classified through its local graph (planes through
the point as vertices, lines through it as edges): a path is an R_n
point, a cycle an E_n point, a star with n >= 4 an S_n point.
"""

from collections import defaultdict
from collections.abc import Sequence
from itertools import combinations
from typing import Optional

import networkx as nx
from pydantic import Field, model_validator

from zappatic.core.primitives import MIN_ANGLE_ORDER, ImmutableRecord
from zappatic.families.exceptions import InvalidConfigurationError
from zappatic.graph.schema import PointKind, ZappaticGraph
from zappatic.graph.validation import prepare
from zappatic.logging_config import get_logger

logger = get_logger(__name__)


# =============================================================================
# STRUCTURE
# =============================================================================

class Side(ImmutableRecord):
    """A side of a plane with an explicit line key.

    Planes on a torus may share a point pair along two different lines;
    explicit keys keep those lines apart.
    """
    key: str
    ends: tuple[str, str]


class Plane(ImmutableRecord):
    """A plane spanned by ``points``.

    Without ``sides`` every pair of points is a candidate line, keyed by
    the unordered pair.
    """
    label: str
    points: tuple[str, ...] = Field(min_length=3)
    sides: Optional[tuple[Side, ...]] = None

    def lines(self) -> list[Side]:
        if self.sides is not None:
            return list(self.sides)
        return [Side(key=pair_key(a, b), ends=(a, b)) for a, b in combinations(self.points, 2)]


class IncidenceStructure(ImmutableRecord):
    points: tuple[str, ...]
    planes: tuple[Plane, ...] = Field(min_length=1)

    @model_validator(mode="after")
    def _check_labels(self) -> "IncidenceStructure":
        known = set(self.points)
        if len(known) != len(self.points):
            raise ValueError("point labels must be unique")
        for plane in self.planes:
            if len(set(plane.points)) != len(plane.points):
                raise ValueError(f"plane {plane.label!r} repeats a point")
            for label in plane.points:
                if label not in known:
                    raise ValueError(f"plane {plane.label!r} references unknown point {label!r}")
            for side in plane.sides or ():
                if not set(side.ends) <= set(plane.points):
                    raise ValueError(f"side {side.key!r} does not lie on plane {plane.label!r}")
        return self


def pair_key(a: str, b: str) -> str:
    low, high = sorted((a, b))
    return f"{low}|{high}"


# =============================================================================
# DERIVATION
# =============================================================================

def _lines(inc: IncidenceStructure) -> tuple[dict[str, list[int]], dict[str, tuple[str, str]]]:
    planes_on: dict[str, list[int]] = defaultdict(list)
    ends: dict[str, tuple[str, str]] = {}
    for index, plane in enumerate(inc.planes):
        for side in plane.lines():
            planes_on[side.key].append(index)
            ends[side.key] = side.ends
    for key, planes in planes_on.items():
        if len(planes) > 2:
            labels = ", ".join(inc.planes[i].label for i in planes)
            raise InvalidConfigurationError(f"line {key!r} lies on {len(planes)} planes ({labels})")
    return planes_on, ends


def _walk_path(local: nx.MultiGraph) -> list[int]:
    start = min(node for node, degree in local.degree() if degree == 1)
    ids: list[int] = []
    previous, current = None, start
    while True:
        step = next(
            ((other, key) for _, other, key in local.edges(current, keys=True) if other != previous),
            None,
        )
        if step is None:
            return ids
        previous, current = current, step[0]
        ids.append(step[1])


def classify_point(local: nx.MultiGraph, label: str) -> tuple[PointKind, list[int]]:
    """Kind and ordered edge ids of the point whose local graph is ``local``.

    Edge keys of ``local`` are edge ids of the associated graph.

    Raises:
        InvalidConfigurationError: If the local graph is not a path, a cycle or a star.
    """
    n = local.number_of_nodes()
    m = local.number_of_edges()
    degrees = sorted(degree for _, degree in local.degree())
    if nx.is_connected(local):
        if m == n and degrees[-1] == 2:
            cycle = nx.find_cycle(local, source=min(local.nodes))
            return PointKind.E, [key for _, _, key in cycle]
        if m == n - 1 and degrees[-1] <= 2:
            return PointKind.R, _walk_path(local)
        if m == n - 1 and n >= MIN_ANGLE_ORDER and degrees[-1] == n - 1:
            return PointKind.S, sorted(key for _, _, key in local.edges(keys=True))
    raise InvalidConfigurationError("not a good Zappatic configuration", point=label)


def derive_graph(inc: IncidenceStructure) -> ZappaticGraph:
    """Planar associated graph of an incidence structure.

    Vertices are the planes in order. Edges are the lines shared by two
    planes, sorted by plane pair and line key. Points on three or more
    planes become singular points; the graph is then prepared.

    Raises:
        InvalidConfigurationError: If a line lies on three planes or a local
            graph is neither a path, a cycle nor a star.
        InvalidGraphError: If the derived graph fails validation.
    """
    planes_on, ends = _lines(inc)
    shared = sorted(
        (planes[0], planes[1], key) for key, planes in planes_on.items() if len(planes) == 2
    )
    edge_id = {key: index for index, (_, _, key) in enumerate(shared)}

    points = []
    for label in inc.points:
        through = [i for i, plane in enumerate(inc.planes) if label in plane.points]
        if len(through) < 3:
            continue
        local = nx.MultiGraph()
        local.add_nodes_from(through)
        for u, v, key in shared:
            if label in ends[key]:
                local.add_edge(u, v, key=edge_id[key])
        points.append(classify_point(local, label))

    graph = ZappaticGraph.planar(
        len(inc.planes),
        [(u, v) for u, v, _ in shared],
        points,
    )
    logger.debug("graph_derived", planes=len(inc.planes), lines=len(shared), points=len(points))
    return prepare(graph)


def structure(planes: Sequence[tuple[str, Sequence[str]]]) -> IncidenceStructure:
    """Incidence structure from ``(label, point labels)`` pairs; points in first-seen order."""
    seen: dict[str, None] = {}
    for _, labels in planes:
        seen.update(dict.fromkeys(labels))
    return IncidenceStructure(
        points=tuple(seen),
        planes=tuple(Plane(label=label, points=tuple(labels)) for label, labels in planes),
    )
