"""Stick curves: nodal unions of lines, as dual graphs."""

from collections.abc import Sequence
from enum import Enum
from typing import Optional

import networkx as nx

from zappatic.families.exceptions import StickCurveShapeError, require_minimum
from zappatic.invariants.curves import DualGraph


class StickKind(str, Enum):
    """Shape of a stick curve.

    R: Chain of n lines.
    S: Fork of n - 1 lines through one line.
    E: Cycle of n lines.
    T: Any tree, given as an adjacency.
    Z: Any connected curve with exactly one cycle, given as an adjacency.
    """
    R = "R"
    S = "S"
    E = "E"
    T = "T"
    Z = "Z"


def _custom(kind: StickKind, n: int, extra: Optional[Sequence[tuple[int, int]]]) -> DualGraph:
    if extra is None:
        raise StickCurveShapeError(f"a {kind.value} stick curve needs an explicit adjacency")
    try:
        dual = DualGraph(genera=(0,) * n, edges=tuple(tuple(pair) for pair in extra))
    except ValueError as exc:
        raise StickCurveShapeError(str(exc)) from exc
    graph = dual.to_networkx()
    if kind is StickKind.T and not nx.is_tree(graph):
        raise StickCurveShapeError("T adjacency must be a tree")
    if kind is StickKind.Z:
        cycles = len(dual.edges) - n + 1
        if not nx.is_connected(graph) or cycles != 1:
            raise StickCurveShapeError(f"Z adjacency must be connected with one cycle (h1 = {cycles})")
    return dual


def stick_curve_graph(
    kind: StickKind, n: int, extra: Optional[Sequence[tuple[int, int]]] = None
) -> DualGraph:
    """Dual graph of a stick curve with ``n`` rational components.

    Raises:
        ParameterRangeError: If ``n`` is too small for ``kind``.
        StickCurveShapeError: If a T or Z adjacency has the wrong topology.
    """
    kind = StickKind(kind)
    if kind is StickKind.S:
        require_minimum("n", n, 4)
    elif kind in (StickKind.R, StickKind.E):
        require_minimum("n", n, 3)
    else:
        require_minimum("n", n, 1)
        return _custom(kind, n, extra)

    if kind is StickKind.R:
        edges = [(i, i + 1) for i in range(n - 1)]
    elif kind is StickKind.S:
        edges = [(0, i) for i in range(1, n)]
    else:
        edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return DualGraph(genera=(0,) * n, edges=tuple(edges))
