"""Test suite for the aggregate invariant report."""

import json

import pytest

from zappatic.core import Unavailable
from zappatic.families import pillow, veronese_mt
from zappatic.graph import GraphMode, InvalidGraphError
from zappatic.invariants import full_report


class TestFullReport:
    """Every invariant in one record."""

    def test_pillow(self) -> None:
        """Should report the invariants of a K3 surface of degree 16."""
        report = full_report(pillow(2, 2))
        assert (report.degree, report.sectional_genus, report.chi) == (16, 9, 2)
        assert (report.p_omega, report.irregularity_q) == (1, 0)
        assert (report.k2.min, report.k2.max) == (0, 0)

    def test_veronese(self) -> None:
        """Should report the invariants of the fourth Veronese surface."""
        report = full_report(veronese_mt(4))
        assert (report.degree, report.sectional_genus, report.chi) == (16, 3, 1)
        assert (report.p_omega, report.irregularity_q) == (0, 0)
        assert (report.k2.min, report.k2.max) == (9, 9)

    def test_single_plane(self, single_plane) -> None:
        """Should report the plane itself."""
        report = full_report(single_plane)
        assert (report.degree, report.sectional_genus, report.chi) == (1, 0, 1)
        assert (report.k2.min, report.k2.max) == (9, 9)

    def test_counts_inferred_points(self, s4_fork) -> None:
        """Should count the R3 points added before the census."""
        bare = s4_fork.model_copy(update={"points": ()})
        report = full_report(bare)
        assert report.inferred_r3 == 3
        assert report.census.r(3) == 3

    def test_planar_chi_matches_betti(self) -> None:
        """Should satisfy chi = 1 - q + p_omega on a connected planar graph."""
        report = full_report(pillow(3, 2))
        assert report.chi == 1 - report.irregularity_q + report.p_omega

    def test_general_mode_unavailable_fields(self, quadrics_plane) -> None:
        """Should leave p_omega and q unavailable and still compute the rest."""
        report = full_report(quadrics_plane)
        assert report.mode is GraphMode.GENERAL
        assert isinstance(report.p_omega, Unavailable)
        assert report.chi == 5

    def test_supplied_phi_terms(self, quadrics_plane) -> None:
        """Should use the supplied cokernel and kernel dimensions."""
        report = full_report(quadrics_plane, supplied_coker=1, supplied_ker=0)
        assert (report.p_omega, report.irregularity_q) == (4, 0)

    def test_invalid_graph(self, double_coverage) -> None:
        """Should refuse to report on a graph that fails validation."""
        with pytest.raises(InvalidGraphError):
            full_report(double_coverage)

    def test_serialized_shape(self, quadrics_plane) -> None:
        """Should serialize intervals as min/max objects and gaps as unavailable reasons."""
        document = json.loads(full_report(quadrics_plane).model_dump_json())
        assert list(document["k2"])[:2] == ["min", "max"]
        assert set(document["p_omega"]) == {"unavailable"}
