"""Test suite for the Veronese, pillow and abelian triangulations."""

import pytest

from zappatic.families import (
    ParameterRangeError,
    abelian_grid,
    pillow,
    pillow_census_report,
    veronese_mt,
)
from zappatic.graph import counts, validate
from zappatic.invariants import full_report
from zappatic.obstructions import miyaoka_yau

GRID = [(a, b) for a in range(2, 5) for b in range(2, 5)]


class TestVeronese:
    """Triangulated lattice triangle."""

    @pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
    def test_census(self, d) -> None:
        """Should give d^2 planes, 3(d-1) R3 points and (d-1)(d-2)/2 hexagons."""
        census = counts(veronese_mt(d))
        assert census.v == d * d
        assert census.e == 3 * d * (d - 1) // 2
        assert census.r(3) == 3 * (d - 1)
        assert census.f(6) == (d - 1) * (d - 2) // 2

    @pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
    def test_invariants(self, d) -> None:
        """Should give the invariants of the plane and the genus of a plane curve of degree d."""
        report = full_report(veronese_mt(d))
        assert (report.k2.min, report.k2.max) == (9, 9)
        assert (report.chi, report.p_omega, report.irregularity_q) == (1, 0, 0)
        assert report.sectional_genus == (d - 1) * (d - 2) // 2

    @pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
    def test_miyaoka_yau_is_tight(self, d) -> None:
        """Should meet K^2 = 9 chi exactly."""
        graph = veronese_mt(d)
        record = miyaoka_yau(graph, full_report(graph))
        assert record.applicable
        assert record.slack_min == record.slack_max == 0

    def test_minimum_degree(self) -> None:
        """Should reject degree 1."""
        with pytest.raises(ParameterRangeError):
            veronese_mt(1)


class TestPillow:
    """Two glued grids, a K3 degeneration."""

    @pytest.mark.parametrize("a, b", GRID)
    def test_census(self, a, b) -> None:
        """Should give 4ab planes, 6ab lines, four E3 corners and 2ab - 2 hexagons."""
        census = counts(pillow(a, b))
        assert (census.v, census.e) == (4 * a * b, 6 * a * b)
        assert census.faces == {3: 4, 6: 2 * a * b - 2}
        assert census.open_faces == {}

    @pytest.mark.parametrize("a, b", GRID)
    def test_k3_invariants(self, a, b) -> None:
        """Should give chi 2, K^2 0, p_omega 1, q 0 and genus 2ab + 1."""
        report = full_report(pillow(a, b))
        assert (report.chi, report.p_omega, report.irregularity_q) == (2, 1, 0)
        assert (report.k2.min, report.k2.max) == (0, 0)
        assert report.sectional_genus == 2 * a * b + 1

    def test_census_report(self) -> None:
        """Should list where the derived corners differ from the stated R3 points."""
        report = pillow_census_report(2, 2)
        assert report.discrepancies == ("r3: derived 0, stated 4", "f3: derived 4, stated 0")
        assert report.claimed_faces == {6: 6}

    def test_is_valid(self) -> None:
        """Should validate without violations."""
        assert validate(pillow(3, 3)).valid


class TestAbelianGrid:
    """Triangulated torus."""

    @pytest.mark.parametrize("n, m", GRID)
    def test_census(self, n, m) -> None:
        """Should give 2nm planes, 3nm lines and nm hexagons."""
        census = counts(abelian_grid(n, m))
        assert (census.v, census.e) == (2 * n * m, 3 * n * m)
        assert census.faces == {6: n * m}

    @pytest.mark.parametrize("n, m", GRID)
    def test_invariants(self, n, m) -> None:
        """Should give the invariants of an abelian surface and a torus as G_X."""
        report = full_report(abelian_grid(n, m))
        assert report.betti.model_dump() == {"b0": 1, "b1": 2, "b2": 1}
        assert (report.chi, report.irregularity_q, report.p_omega) == (0, 2, 1)
        assert (report.k2.min, report.k2.max) == (0, 0)
        assert report.sectional_genus == n * m + 1
