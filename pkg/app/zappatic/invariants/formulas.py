"""Numerical invariants of a good Zappatic surface from its associated graph.

Every function takes a validated graph (planar graphs after R_3 inference).
General-mode formulas read the vertex and edge weights they need and
raise `MissingWeightsError` when one is absent. Planar graphs always
carry the plane and line weights, so the general formulas specialize to
the planar ones without a separate code path.
"""

from math import comb
from typing import Optional, Union

from zappatic.core.primitives import Unavailable
from zappatic.graph.census import SingularityCensus, counts
from zappatic.graph.schema import GraphMode, ZappaticGraph
from zappatic.homology.complex import BettiVector, betti
from zappatic.invariants.exceptions import InvalidSuppliedValueError, MissingWeightsError
from zappatic.invariants.records import DeltaInterval, InvariantReport, K2Interval

COKERNEL_UNKNOWN = "Φ cokernel not combinatorially determined"
KERNEL_UNKNOWN = "Φ kernel not combinatorially determined"


# =============================================================================
# WEIGHT ACCESS
# =============================================================================

def _vertex_values(graph: ZappaticGraph, name: str) -> list[int]:
    values = [getattr(v, name) for v in graph.vertices]
    missing = [f"vertices.{i}.{name}" for i, value in enumerate(values) if value is None]
    if missing:
        raise MissingWeightsError(missing)
    return values


def _edge_values(graph: ZappaticGraph, *names: str) -> list[tuple[int, ...]]:
    missing = [
        f"edges.{i}.{name}"
        for i, edge in enumerate(graph.edges)
        for name in names
        if getattr(edge, name) is None
    ]
    if missing:
        raise MissingWeightsError(missing)
    return [tuple(getattr(edge, name) for name in names) for edge in graph.edges]


# =============================================================================
# DEGREE, SECTIONAL GENUS, CHI
# =============================================================================

def degree(graph: ZappaticGraph) -> int:
    """deg X = sum of the component degrees."""
    return sum(_vertex_values(graph, "degree"))


def sectional_genus(graph: ZappaticGraph) -> int:
    """Arithmetic genus of a general hyperplane section.

    g = sum g_i + sum c_ij - v + 1, where c_ij sums the degrees of the
    parallel edges between i and j. For planes and lines this is e - v + 1.
    """
    genera = _vertex_values(graph, "sectional_genus")
    curve_degrees = [d for (d,) in _edge_values(graph, "degree")]
    return sum(genera) + sum(curve_degrees) - graph.vertex_count + 1


def chi_structure_sheaf(graph: ZappaticGraph, census: Optional[SingularityCensus] = None) -> int:
    """chi(O_X) = sum chi(O_Xi) - sum chi(O_Cij) + f, with chi(O_C) = 1 - genus per edge.

    For planar graphs this is the Euler characteristic v - e + f.
    """
    if census is None:
        census = counts(graph)
    chis = _vertex_values(graph, "chi")
    curve_chis = [1 - g for (g,) in _edge_values(graph, "genus")]
    return sum(chis) - sum(curve_chis) + census.f_total


def planar_chi(census: SingularityCensus) -> int:
    """v - e + f, for censuses of planar configurations."""
    return census.v - census.e + census.f_total


# =============================================================================
# OMEGA-GENUS AND IRREGULARITY
# =============================================================================

def phi_vanishes(graph: ZappaticGraph) -> bool:
    """True when both sides of Phi are zero: every q_i = 0 and every edge is rational."""
    return all(v.q == 0 for v in graph.vertices) and all(e.genus == 0 for e in graph.edges)


def _phi_term(graph: ZappaticGraph, supplied: Optional[int], unknown: str) -> Union[int, Unavailable]:
    if supplied is not None and supplied < 0:
        raise InvalidSuppliedValueError(f"a dimension cannot be negative (got {supplied})")
    if phi_vanishes(graph):
        if supplied not in (None, 0):
            raise InvalidSuppliedValueError(
                f"Phi is the zero map between zero spaces here; supplied value {supplied} must be 0"
            )
        return 0
    if supplied is None:
        return Unavailable(unavailable=unknown)
    return supplied


def omega_genus(
    graph: ZappaticGraph,
    supplied_coker: Optional[int] = None,
    betti_vector: Optional[BettiVector] = None,
) -> Union[int, Unavailable]:
    """p_omega = b2(G_X) + sum p_g(X_i) + dim coker Phi.

    The cokernel term is derived only when Phi provably vanishes;
    otherwise it must be supplied.

    Raises:
        InvalidSuppliedValueError: If ``supplied_coker`` is negative, or
            non-zero while Phi provably vanishes.
        MissingWeightsError: If some p_g is unknown.
    """
    term = _phi_term(graph, supplied_coker, COKERNEL_UNKNOWN)
    if isinstance(term, Unavailable):
        return term
    b = betti_vector if betti_vector is not None else betti(graph)
    return b.b2 + sum(_vertex_values(graph, "pg")) + term


def irregularity(
    graph: ZappaticGraph,
    supplied_ker: Optional[int] = None,
    betti_vector: Optional[BettiVector] = None,
) -> Union[int, Unavailable]:
    """q = b1(G_X) + dim ker Phi, under the same rules as `omega_genus`."""
    term = _phi_term(graph, supplied_ker, KERNEL_UNKNOWN)
    if isinstance(term, Unavailable):
        return term
    b = betti_vector if betti_vector is not None else betti(graph)
    return b.b1 + term


# =============================================================================
# K^2
# =============================================================================

def face_terms(census: SingularityCensus) -> int:
    """sum 2n f_n + r_3."""
    return sum(2 * n * f for n, f in census.faces.items()) + census.r(3)


def k2_corrections(census: SingularityCensus) -> tuple[int, int]:
    """Smallest and largest correction k contributed by R_n and S_n points, n >= 4."""
    low = high = 0
    for n in census.orders():
        if n < 4:
            continue
        r_n, s_n = census.r(n), census.s(n)
        low += (n - 2) * (r_n + s_n)
        high += (2 * n - 5) * r_n + comb(n - 1, 2) * s_n
    return low, high


def _interval(base: int, census: SingularityCensus) -> K2Interval:
    low, high = k2_corrections(census)
    return K2Interval(min=base + low, max=base + high, base=base)


def planar_k2_interval(census: SingularityCensus) -> K2Interval:
    """K^2 = 9v - 10e + sum 2n f_n + r_3 + k for a planar census."""
    return _interval(9 * census.v - 10 * census.e + face_terms(census), census)


def k2_interval(graph: ZappaticGraph, census: Optional[SingularityCensus] = None) -> K2Interval:
    """K^2 range of the smooth fibre.

    base = sum K2_i - 8e + sum over edges of (4g - C^2 on X_u) + (4g - C^2 on X_v)
           + sum 2n f_n + r_3.

    Returns an inapplicable interval when general-mode weights are missing.
    """
    if census is None:
        census = counts(graph)
    try:
        k2_sum = sum(_vertex_values(graph, "k2"))
        sides = _edge_values(graph, "genus", "self_int_u", "self_int_v")
    except MissingWeightsError as exc:
        return K2Interval.unavailable(str(exc))
    double_curves = sum((4 * g - c_u) + (4 * g - c_v) for g, c_u, c_v in sides)
    base = k2_sum - 8 * graph.edge_count + double_curves + face_terms(census)
    return _interval(base, census)


# =============================================================================
# CLASS
# =============================================================================

def class_lower_bound(census: SingularityCensus, k2: K2Interval) -> int:
    """3 f_3 + r_3 + sum (12 - n) f_n + sum (n - 1) rho_n - (K2.max - base), n >= 4."""
    bound = 3 * census.f(3) + census.r(3)
    for n in census.orders():
        if n < 4:
            continue
        bound += (12 - n) * census.f(n) + (n - 1) * census.rho(n)
    return bound - (k2.max - k2.base)


def delta_interval(
    census: SingularityCensus,
    chi: Union[int, Unavailable],
    k2: K2Interval,
    degree_value: Union[int, Unavailable],
    genus: Union[int, Unavailable],
    planar: bool = True,
) -> Union[DeltaInterval, Unavailable]:
    """Class range, delta = (12 chi - K^2) + deg + 4 (g - 1), K^2 endpoints used crosswise.

    For planar graphs this is (9 chi - K^2) + 3f + e. The combinatorial
    lower bound is only attached to planar graphs.
    """
    if not k2.applicable:
        return Unavailable(unavailable=f"K2 interval not applicable: {k2.reason}")
    for value in (chi, degree_value, genus):
        if isinstance(value, Unavailable):
            return value
    tail = 12 * chi + degree_value + 4 * (genus - 1)
    low, high = tail - k2.max, tail - k2.min
    if not planar:
        return DeltaInterval(min=low, max=high)
    bound = class_lower_bound(census, k2)
    return DeltaInterval(min=low, max=high, lower_bound=bound, violated=low < bound)


def class_delta(
    graph: ZappaticGraph, report: Optional[InvariantReport] = None
) -> Union[DeltaInterval, Unavailable]:
    """Class interval of the smooth fibre, with its lower bound on planar graphs.

    Uses the chi, K^2, degree and genus of ``report`` when given.
    """
    if report is not None:
        return delta_interval(
            report.census,
            report.chi,
            report.k2,
            report.degree,
            report.sectional_genus,
            planar=report.mode is GraphMode.PLANAR,
        )
    census = counts(graph)
    values = []
    computations = (
        lambda: chi_structure_sheaf(graph, census),
        lambda: degree(graph),
        lambda: sectional_genus(graph),
    )
    for compute in computations:
        try:
            values.append(compute())
        except MissingWeightsError as exc:
            values.append(Unavailable(unavailable=str(exc)))
    chi, degree_value, genus = values
    return delta_interval(
        census,
        chi,
        k2_interval(graph, census),
        degree_value,
        genus,
        planar=graph.mode is GraphMode.PLANAR,
    )
