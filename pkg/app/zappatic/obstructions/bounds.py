"""Global inequalities on K^2 of the smooth fibre.

Both checks take the `InvariantReport` of the graph and compare the K^2
interval endpoints against a bound in chi (and g). Each check is applied
only when the census satisfies the hypothesis it is proved under;
otherwise the record says why it does not apply.
"""

from typing import Optional

from zappatic.core.primitives import ImmutableRecord
from zappatic.graph.census import SingularityCensus
from zappatic.graph.schema import GraphMode, PointKind, ZappaticGraph
from zappatic.invariants.records import InvariantReport
from zappatic.logging_config import get_logger
from zappatic.obstructions.verdicts import EqualityClass

logger = get_logger(__name__)

ZAPPA_POINTS = {(PointKind.R, 3), (PointKind.E, 3), (PointKind.E, 4), (PointKind.E, 5)}
MIYAOKA_YAU_POINTS = {(PointKind.R, 3)} | {(PointKind.E, m) for m in range(3, 7)}

ELLIPTIC_CYCLE_MIN_LENGTH = 5


class ZappaRecord(ImmutableRecord):
    """K^2 <= 8 chi + 1 - g, evaluated at both ends of the K^2 interval.

    Attributes:
        applicable: Whether the census satisfies the hypothesis.
        reason: Why the bound does not apply.
        bound: 8 chi + 1 - g.
        slack_min: bound - K2.max (the worst case).
        slack_max: bound - K2.min.
        general_type_slack_min: 8 chi - g - K2.max, informational.
        general_type_slack_max: 8 chi - g - K2.min, informational.
        equality_class: Set when ``slack_max`` is 0.
        warning: Set when the equality case is not one of the known two.
    """
    applicable: bool
    reason: Optional[str] = None
    bound: Optional[int] = None
    slack_min: Optional[int] = None
    slack_max: Optional[int] = None
    general_type_slack_min: Optional[int] = None
    general_type_slack_max: Optional[int] = None
    equality_class: Optional[EqualityClass] = None
    warning: Optional[str] = None

    @property
    def violated(self) -> bool:
        return self.applicable and self.slack_max < 0


class MiyaokaYauRecord(ImmutableRecord):
    """K^2 <= 9 chi, evaluated at both ends of the K^2 interval."""
    applicable: bool
    reason: Optional[str] = None
    bound: Optional[int] = None
    satisfied_min: Optional[bool] = None
    satisfied_max: Optional[bool] = None
    slack_min: Optional[int] = None
    slack_max: Optional[int] = None

    @property
    def violated(self) -> bool:
        return self.applicable and not self.satisfied_min


def _not_applicable(graph: ZappaticGraph, report: InvariantReport, allowed: set, points: str) -> Optional[str]:
    if graph.mode is not GraphMode.PLANAR:
        return "stated for planar graphs only"
    if not report.census.has_only(allowed):
        return f"census has points other than {points}"
    if not report.k2.applicable:
        return f"K2 interval not applicable: {report.k2.reason}"
    return None


def classify_equality(census: SingularityCensus) -> EqualityClass:
    """Structural test for the two configurations with K^2 = 8 chi + 1 - g.

    The census comes from a validated (hence connected) graph, so a 2-regular
    graph with as many edges as vertices is a single cycle.
    """
    valences = sorted(census.valences)
    only_r3 = census.tau == census.r(3)
    if census.v == 4 and census.e == 3 and valences == [1, 1, 1, 3] and only_r3 and census.r(3) == 3:
        return EqualityClass.VERONESE_S4
    if (
        census.v >= ELLIPTIC_CYCLE_MIN_LENGTH
        and census.e == census.v
        and all(w == 2 for w in valences)
        and only_r3
        and census.r(3) == census.v
    ):
        return EqualityClass.ELLIPTIC_CYCLE
    return EqualityClass.OTHER


def zappa_bound(graph: ZappaticGraph, report: InvariantReport) -> ZappaRecord:
    """Zappa's inequality for configurations with only R_3, E_3, E_4 and E_5 points."""
    reason = _not_applicable(graph, report, ZAPPA_POINTS, "R3, E3, E4, E5")
    if reason is None and not isinstance(report.chi, int):
        reason = "chi unavailable"
    if reason is None and not isinstance(report.sectional_genus, int):
        reason = "sectional genus unavailable"
    if reason is not None:
        return ZappaRecord(applicable=False, reason=reason)

    chi, genus, k2 = report.chi, report.sectional_genus, report.k2
    bound = 8 * chi + 1 - genus
    slack_max = bound - k2.min
    equality_class = warning = None
    if slack_max == 0:
        equality_class = classify_equality(report.census)
        if equality_class is EqualityClass.OTHER:
            warning = "equality attained outside the Veronese and elliptic scroll cases"
            logger.info("zappa_equality_unclassified", v=report.census.v, e=report.census.e)
    return ZappaRecord(
        applicable=True,
        bound=bound,
        slack_min=bound - k2.max,
        slack_max=slack_max,
        general_type_slack_min=bound - 1 - k2.max,
        general_type_slack_max=bound - 1 - k2.min,
        equality_class=equality_class,
        warning=warning,
    )


def miyaoka_yau(graph: ZappaticGraph, report: InvariantReport) -> MiyaokaYauRecord:
    """K^2 <= 9 chi for configurations with only R_3 and E_m points, m <= 6."""
    reason = _not_applicable(graph, report, MIYAOKA_YAU_POINTS, "R3 and E3..E6")
    if reason is None and not isinstance(report.chi, int):
        reason = "chi unavailable"
    if reason is not None:
        return MiyaokaYauRecord(applicable=False, reason=reason)

    bound = 9 * report.chi
    return MiyaokaYauRecord(
        applicable=True,
        bound=bound,
        satisfied_min=report.k2.min <= bound,
        satisfied_max=report.k2.max <= bound,
        slack_min=bound - report.k2.max,
        slack_max=bound - report.k2.min,
    )
