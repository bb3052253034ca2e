"""Smoothability verdict for one graph."""

from typing import Optional, Union

from zappatic.core.primitives import ImmutableRecord, NonNegativeInt, Unavailable
from zappatic.graph.census import SingularityCensus
from zappatic.graph.schema import GraphMode, ZappaticGraph
from zappatic.graph.validation import prepare
from zappatic.invariants.exceptions import MissingWeightsError
from zappatic.invariants.records import K2Interval
from zappatic.invariants.report import full_report
from zappatic.logging_config import get_logger
from zappatic.obstructions.bounds import MiyaokaYauRecord, ZappaRecord, miyaoka_yau, zappa_bound
from zappatic.obstructions.k3 import K3Profile, k3_profile
from zappatic.obstructions.mpf import mpf_edge, mpf_global, tpf_predicted_double_points
from zappatic.obstructions.verdicts import VerdictStatus

logger = get_logger(__name__)


class EdgeBound(ImmutableRecord):
    """Multiple Point Formula along one edge.

    Attributes:
        edge: Edge id.
        mpf_upper_bound: Upper bound for the double points along the edge.
        violated: True exactly when the bound is negative.
        triple_point: Exact double point count when only E_3 points occur.
    """
    edge: NonNegativeInt
    mpf_upper_bound: Union[int, Unavailable]
    violated: bool
    triple_point: Optional[int] = None


class Verdict(ImmutableRecord):
    status: VerdictStatus
    reasons: tuple[str, ...] = ()


class ObstructionReport(ImmutableRecord):
    mode: GraphMode
    per_edge: tuple[EdgeBound, ...]
    global_mpf_upper: Union[int, Unavailable]
    k2: K2Interval
    zappa: ZappaRecord
    miyaoka_yau: MiyaokaYauRecord
    k3_profile: Union[K3Profile, Unavailable]
    verdict: Verdict


def _edge_bound(graph: ZappaticGraph, edge: int, census: SingularityCensus) -> EdgeBound:
    try:
        bound: Union[int, Unavailable] = mpf_edge(graph, edge)
    except MissingWeightsError as exc:
        bound = Unavailable(unavailable=str(exc))
    predicted = tpf_predicted_double_points(graph, edge, census)
    return EdgeBound(
        edge=edge,
        mpf_upper_bound=bound,
        violated=isinstance(bound, int) and bound < 0,
        triple_point=predicted if isinstance(predicted, int) else None,
    )


def check(graph: ZappaticGraph) -> ObstructionReport:
    """Run every applicable smoothability test on ``graph``.

    Raises:
        InvalidGraphError: If the graph fails validation.
    """
    enriched = prepare(graph)
    invariants = full_report(enriched)
    census = invariants.census

    per_edge = tuple(_edge_bound(enriched, edge, census) for edge in range(enriched.edge_count))
    global_bound = mpf_global(enriched, census)
    zappa = zappa_bound(enriched, invariants)
    my = miyaoka_yau(enriched, invariants)

    reasons = [
        f"multiple point formula fails on edge {b.edge}: upper bound {b.mpf_upper_bound} < 0"
        for b in per_edge
        if b.violated
    ]
    if isinstance(global_bound, int) and global_bound < 0:
        reasons.append(f"global multiple point formula fails: upper bound {global_bound} < 0")
    if zappa.violated:
        reasons.append(f"K2 >= {invariants.k2.min} exceeds 8chi+1-g = {zappa.bound}")
    if my.violated:
        reasons.append(f"K2 >= {invariants.k2.min} exceeds 9chi = {my.bound}")

    status = VerdictStatus.OBSTRUCTED if reasons else VerdictStatus.NO_OBSTRUCTION_FOUND
    report = ObstructionReport(
        mode=enriched.mode,
        per_edge=per_edge,
        global_mpf_upper=global_bound,
        k2=invariants.k2,
        zappa=zappa,
        miyaoka_yau=my,
        k3_profile=k3_profile(enriched, census),
        verdict=Verdict(status=status, reasons=tuple(reasons)),
    )
    logger.debug("obstructions_checked", status=status.value, reasons=len(reasons))
    return report
