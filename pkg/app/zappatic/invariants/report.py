"""Aggregate invariant report."""

from collections.abc import Callable
from typing import Optional, Union

from zappatic.core.primitives import Unavailable
from zappatic.graph.census import counts
from zappatic.graph.schema import GraphMode, ZappaticGraph
from zappatic.graph.validation import prepare
from zappatic.homology.complex import betti
from zappatic.invariants.exceptions import MissingWeightsError
from zappatic.invariants.formulas import (
    chi_structure_sheaf,
    degree,
    delta_interval,
    irregularity,
    k2_interval,
    omega_genus,
    sectional_genus,
)
from zappatic.invariants.records import InvariantReport
from zappatic.logging_config import get_logger

logger = get_logger(__name__)


def _or_unavailable(compute: Callable[[], Union[int, Unavailable]]) -> Union[int, Unavailable]:
    try:
        return compute()
    except MissingWeightsError as exc:
        return Unavailable(unavailable=str(exc))


def full_report(
    graph: ZappaticGraph,
    supplied_coker: Optional[int] = None,
    supplied_ker: Optional[int] = None,
) -> InvariantReport:
    """Compute every invariant of ``graph``.

    The graph is prepared first (planar R_3 inference, then validation).
    Quantities that need missing weights or an undetermined Phi term are
    reported as unavailable with a reason.

    Raises:
        InvalidGraphError: If the graph fails validation.
        InvalidSuppliedValueError: If a supplied Phi dimension is impossible.
    """
    enriched = prepare(graph)
    census = counts(enriched)
    betti_vector = betti(enriched)

    chi = _or_unavailable(lambda: chi_structure_sheaf(enriched, census))
    degree_value = _or_unavailable(lambda: degree(enriched))
    genus = _or_unavailable(lambda: sectional_genus(enriched))
    k2 = k2_interval(enriched, census)
    report = InvariantReport(
        mode=enriched.mode,
        degree=degree_value,
        sectional_genus=genus,
        chi=chi,
        p_omega=_or_unavailable(lambda: omega_genus(enriched, supplied_coker, betti_vector)),
        irregularity_q=_or_unavailable(lambda: irregularity(enriched, supplied_ker, betti_vector)),
        k2=k2,
        delta_class=delta_interval(
            census, chi, k2, degree_value, genus, planar=enriched.mode is GraphMode.PLANAR
        ),
        census=census,
        betti=betti_vector,
        inferred_r3=len(enriched.points) - len(graph.points),
    )
    logger.debug("invariants_computed", mode=report.mode.value, inferred_r3=report.inferred_r3)
    return report
