"""Seeded random planar configurations.

A random spanning tree plus a few extra simple edges gives the graph.
Points are then placed greedily on corners nobody covers yet: closed
faces along basis cycles, S_4 angles at vertices of valence >= 3, R_4
points along paths of three edges. R_3 inference covers the rest.
"""

import random
from itertools import combinations
from typing import Optional

import networkx as nx
from pydantic import ValidationError

from zappatic.config import Settings, get_settings
from zappatic.families.exceptions import require_minimum
from zappatic.families.planes import chain_planes
from zappatic.graph.exceptions import InvalidGraphError
from zappatic.graph.schema import PointKind, ZappaticGraph
from zappatic.graph.shapes import Corner, corner
from zappatic.graph.validation import prepare
from zappatic.logging_config import get_logger

logger = get_logger(__name__)

FACE_PROBABILITY = 0.5
ANGLE_PROBABILITY = 0.3
OPEN_FACE_PROBABILITY = 0.2


def _edges(rng: random.Random, size: int, ratio: float) -> list[tuple[int, int]]:
    pairs = {(rng.randrange(i), i) for i in range(1, size)}
    for _ in range(round(ratio * size)):
        u, v = rng.sample(range(size), 2)
        pairs.add((min(u, v), max(u, v)))
    return sorted(pairs)


class _Cover:
    """Corners claimed so far and the points claiming them."""

    def __init__(self) -> None:
        self.corners: set[Corner] = set()
        self.points: list[tuple[PointKind, tuple[int, ...]]] = []

    def claim(self, kind: PointKind, ids: tuple[int, ...], corners: list[Corner]) -> bool:
        if any(c in self.corners for c in corners):
            return False
        self.corners.update(corners)
        self.points.append((kind, ids))
        return True


def _place_faces(rng: random.Random, graph: nx.Graph, cover: _Cover) -> None:
    for cycle in nx.cycle_basis(graph, 0):
        if len(cycle) < 3 or rng.random() >= FACE_PROBABILITY:
            continue
        ring = cycle + cycle[:1]
        ids = [graph.edges[ring[k], ring[k + 1]]["id"] for k in range(len(cycle))]
        corners = [corner(cycle[k], ids[k - 1], ids[k]) for k in range(len(cycle))]
        cover.claim(PointKind.E, tuple(ids), corners)


def _place_angles(rng: random.Random, graph: nx.Graph, cover: _Cover) -> None:
    for vertex in sorted(graph.nodes):
        incident = sorted(graph.edges[vertex, other]["id"] for other in graph.neighbors(vertex))
        if len(incident) < 3 or rng.random() >= ANGLE_PROBABILITY:
            continue
        ids = tuple(sorted(rng.sample(incident, 3)))
        cover.claim(PointKind.S, ids, [corner(vertex, a, b) for a, b in combinations(ids, 2)])


def _place_open_faces(
    rng: random.Random, graph: nx.Graph, edges: list[tuple[int, int]], cover: _Cover
) -> None:
    for b, c in edges:
        if rng.random() >= OPEN_FACE_PROBABILITY:
            continue
        before = [a for a in sorted(graph.neighbors(b)) if a != c]
        if not before:
            continue
        a = rng.choice(before)
        after = [d for d in sorted(graph.neighbors(c)) if d not in (a, b)]
        if not after:
            continue
        d = rng.choice(after)
        first, middle, last = (graph.edges[a, b]["id"], graph.edges[b, c]["id"], graph.edges[c, d]["id"])
        cover.claim(
            PointKind.R,
            (first, middle, last),
            [corner(b, first, middle), corner(c, middle, last)],
        )


def _attempt(rng: random.Random, size: int, ratio: float) -> Optional[ZappaticGraph]:
    edges = _edges(rng, size, ratio)
    graph = nx.Graph()
    graph.add_nodes_from(range(size))
    for index, (u, v) in enumerate(edges):
        graph.add_edge(u, v, id=index)

    cover = _Cover()
    _place_faces(rng, graph, cover)
    _place_angles(rng, graph, cover)
    _place_open_faces(rng, graph, edges, cover)
    try:
        return prepare(ZappaticGraph.planar(size, edges, cover.points))
    except (InvalidGraphError, ValidationError) as exc:
        logger.debug("random_attempt_rejected", error=str(exc))
        return None


def random_planar_config(seed: int, size: int, settings: Optional[Settings] = None) -> ZappaticGraph:
    """Deterministic pseudo-random valid planar graph on ``size`` planes.

    The same seed and size always give the same graph.

    Args:
        seed: Seed of the private random generator.
        size: Number of planes (>= 2).
        settings: Source of the retry budget and extra edge ratio;
            the cached application settings when omitted.
    """
    require_minimum("size", size, 2)
    settings = settings or get_settings()
    rng = random.Random(seed)
    for _ in range(settings.RANDOM_MAX_RETRIES):
        graph = _attempt(rng, size, settings.RANDOM_EXTRA_EDGE_RATIO)
        if graph is not None:
            return graph
    logger.info("random_config_fallback", seed=seed, size=size, attempts=settings.RANDOM_MAX_RETRIES)
    return chain_planes(size)
