"""Multiple Point Formula bounds.

Along each double curve gamma the number d_gamma of double points of the
total space of a degeneration is bounded above by

    deg N_{gamma|X_u} + deg N_{gamma|X_v} + f_3(gamma) - r_3(gamma)
        - sum_{n>=4} (rho_n(gamma) + f_n(gamma)),

so a negative value obstructs smoothing. When only E_3 points occur the
bound is an equality (the Triple Point Formula).
"""

from typing import Optional, Union

from zappatic.core.primitives import Unavailable
from zappatic.graph.census import SingularityCensus, counts, edge_local_census
from zappatic.graph.schema import GraphMode, PointKind, ZappaticGraph
from zappatic.invariants.exceptions import MissingWeightsError


def _normal_degrees(graph: ZappaticGraph, edge: int) -> int:
    data = graph.edges[edge]
    missing = [
        f"edges.{edge}.{name}"
        for name in ("normal_deg_u", "normal_deg_v")
        if getattr(data, name) is None
    ]
    if missing:
        raise MissingWeightsError(missing)
    return data.normal_deg_u + data.normal_deg_v


def mpf_edge(graph: ZappaticGraph, edge: int) -> int:
    """Upper bound for d_gamma along ``edge`` (planar graphs: 2 + f_3 - r_3 - ...).

    Raises:
        UnknownEdgeError: If ``edge`` does not exist.
        MissingWeightsError: If a general-mode normal degree is unknown.
    """
    local = edge_local_census(graph, edge)
    bound = _normal_degrees(graph, edge) + local.f(3) - local.r(3)
    for n in local.orders():
        if n >= 4:
            bound -= local.rho(n) + local.f(n)
    return bound


def mpf_global(
    graph: ZappaticGraph, census: Optional[SingularityCensus] = None
) -> Union[int, Unavailable]:
    """Upper bound for the double points of the whole total space (planar only).

    2e + 3 f_3 - 2 r_3 - sum_{n>=4} n f_n - sum_{n>=4} (n-1) rho_n.
    """
    if graph.mode is not GraphMode.PLANAR:
        return Unavailable(unavailable="the global bound is stated for planar graphs only")
    if census is None:
        census = counts(graph)
    bound = 2 * census.e + 3 * census.f(3) - 2 * census.r(3)
    for n in census.orders():
        if n >= 4:
            bound -= n * census.f(n) + (n - 1) * census.rho(n)
    return bound


def tpf_predicted_double_points(
    graph: ZappaticGraph, edge: int, census: Optional[SingularityCensus] = None
) -> Union[int, Unavailable]:
    """Exact d_gamma = N_u + N_v + f_3(gamma) when every point is an E_3 point."""
    if census is None:
        census = counts(graph)
    if not census.has_only({(PointKind.E, 3)}):
        return Unavailable(unavailable="configuration has points other than E3")
    try:
        normal = _normal_degrees(graph, edge)
    except MissingWeightsError as exc:
        return Unavailable(unavailable=str(exc))
    return normal + edge_local_census(graph, edge).f(3)
