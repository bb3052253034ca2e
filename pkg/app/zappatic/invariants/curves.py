"""Invariants of nodal curves from their dual graphs.

For a connected nodal curve C whose components C_i have genera g_i,
the dual graph G_C has one vertex per component and one edge per node.
Then chi(O_C) = v - e - sum g_i and p_a(C) = h^1(G_C) + sum g_i.
"""

from collections.abc import Sequence
from typing import Optional

import networkx as nx
from pydantic import Field, model_validator

from zappatic.core.primitives import ImmutableRecord, NonNegativeInt
from zappatic.graph.schema import ZappaticGraph
from zappatic.invariants.exceptions import DisconnectedGraphError


class DualGraph(ImmutableRecord):
    """Dual graph of a nodal curve: component genera and nodes as vertex pairs."""
    genera: tuple[NonNegativeInt, ...] = Field(min_length=1)
    edges: tuple[tuple[NonNegativeInt, NonNegativeInt], ...] = ()

    @model_validator(mode="after")
    def _check_nodes(self) -> "DualGraph":
        n = len(self.genera)
        for index, (u, v) in enumerate(self.edges):
            if u == v:
                raise ValueError(f"node {index} joins component {u} to itself")
            if u >= n or v >= n:
                raise ValueError(f"node {index} references an unknown component")
        return self

    @classmethod
    def from_graph(
        cls, graph: ZappaticGraph, genera: Optional[Sequence[int]] = None
    ) -> "DualGraph":
        """Restrict a ZappaticGraph to its vertices and edges.

        Args:
            graph: Source graph; points are ignored.
            genera: Per-vertex genera; rational components when omitted.
        """
        if genera is None:
            genera = [0] * graph.vertex_count
        if len(genera) != graph.vertex_count:
            raise ValueError(
                f"expected {graph.vertex_count} genera, got {len(genera)}"
            )
        return cls(genera=tuple(genera), edges=tuple(e.endpoints for e in graph.edges))

    def to_networkx(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(range(len(self.genera)))
        g.add_edges_from(self.edges)
        return g

    def is_connected(self) -> bool:
        return nx.is_connected(self.to_networkx())


def curve_chi(dual: DualGraph) -> int:
    """chi(O_C) = v - e - sum g_i."""
    return len(dual.genera) - len(dual.edges) - sum(dual.genera)


def curve_pa(dual: DualGraph) -> int:
    """Arithmetic genus p_a(C) = e - v + 1 + sum g_i.

    Raises:
        DisconnectedGraphError: If the dual graph is not connected.
    """
    if not dual.is_connected():
        raise DisconnectedGraphError("arithmetic genus needs a connected curve")
    return 1 - curve_chi(dual)
