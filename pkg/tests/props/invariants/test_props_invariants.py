"""Property-based tests for the invariant formulas on random planar configurations."""

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from tests.utils.relabel import relabel
from tests.utils.strategies import planar_configs, relabelled_pairs
from zappatic.families import quadrics_and_plane
from zappatic.invariants import full_report, k2_interval

PROPERTY_SETTINGS = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@PROPERTY_SETTINGS
@given(planar_configs())
def test_chi_matches_betti_numbers(graph) -> None:
    """Should satisfy chi = 1 - q + p_omega."""
    report = full_report(graph)
    assert report.chi == 1 - report.irregularity_q + report.p_omega


@PROPERTY_SETTINGS
@given(planar_configs())
def test_sectional_genus_counts_cycles(graph) -> None:
    """Should satisfy g + v - 1 = e."""
    report = full_report(graph)
    assert report.sectional_genus + report.census.v - 1 == report.census.e


@PROPERTY_SETTINGS
@given(planar_configs())
def test_k2_is_exact_without_higher_points(graph) -> None:
    """Should give a single K^2 value exactly when no R_n or S_n with n >= 4 exists."""
    report = full_report(graph)
    exact = report.k2.min == report.k2.max
    assert exact == (not report.census.has_higher_open_points())


@PROPERTY_SETTINGS
@given(planar_configs())
def test_class_interval_is_crosswise(graph) -> None:
    """Should have a class interval as wide as the K^2 interval."""
    report = full_report(graph)
    assert report.delta_class.max - report.delta_class.min == report.k2.max - report.k2.min


@PROPERTY_SETTINGS
@given(relabelled_pairs())
def test_report_ignores_numbering(pair) -> None:
    """Should compute the same invariants after relabelling."""
    graph, shuffled = pair
    before, after = full_report(graph), full_report(shuffled)
    assert (before.chi, before.degree, before.sectional_genus) == (after.chi, after.degree, after.sectional_genus)
    assert (before.k2, before.delta_class, before.betti) == (after.k2, after.delta_class, after.betti)


@settings(max_examples=12, deadline=None)
@given(st.permutations(range(3)))
def test_k2_side_symmetry(vertex_perm) -> None:
    """Should keep the general K^2 when endpoints swap and their side weights follow."""
    graph = quadrics_and_plane()
    assert k2_interval(relabel(graph, vertex_perm, range(3))) == k2_interval(graph)
