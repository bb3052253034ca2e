"""Test suite for the invariant formulas of good Zappatic surfaces."""

import pytest

from zappatic.core import Unavailable
from zappatic.families import abelian_grid, cycle_planes, pillow, quadric_chain, veronese_mt
from zappatic.graph import GraphMode, SingularityCensus, VertexWeights, ZappaticGraph, counts
from zappatic.invariants import (
    InvalidSuppliedValueError,
    chi_structure_sheaf,
    class_delta,
    class_lower_bound,
    degree,
    irregularity,
    k2_corrections,
    k2_interval,
    omega_genus,
    phi_vanishes,
    planar_chi,
    planar_k2_interval,
    sectional_genus,
)

# ═══════════════════════════════════════════════════════════════════════════
# DEGREE, GENUS, CHI
# ═══════════════════════════════════════════════════════════════════════════

class TestDegreeAndGenus:
    """Hyperplane section invariants."""

    def test_s4_fork(self, s4_fork) -> None:
        """Should give a rational quartic section."""
        assert (degree(s4_fork), sectional_genus(s4_fork)) == (4, 0)

    def test_pillow_genus(self) -> None:
        """Should give g = 2ab + 1."""
        assert sectional_genus(pillow(2, 3)) == 13

    def test_quadric_chain(self) -> None:
        """Should give a rational section of degree 2n."""
        graph = quadric_chain(4)
        assert (degree(graph), sectional_genus(graph)) == (8, 0)

    def test_parallel_curves_add_degrees(self, quadrics_plane) -> None:
        """Should sum the quartic and both conics into the joined pairs."""
        assert (degree(quadrics_plane), sectional_genus(quadrics_plane)) == (5, 6)


class TestChi:
    """chi(O_X)."""

    def test_quadrics_and_plane(self, quadrics_plane) -> None:
        """Should give the chi of a smooth quintic."""
        assert chi_structure_sheaf(quadrics_plane) == 5

    @pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
    def test_veronese(self, d) -> None:
        """Should give chi 1 for every Veronese degeneration."""
        assert chi_structure_sheaf(veronese_mt(d)) == 1

    def test_abelian(self) -> None:
        """Should give chi 0 on the torus grid."""
        graph = abelian_grid(3, 3)
        assert chi_structure_sheaf(graph) == planar_chi(counts(graph)) == 0


# ═══════════════════════════════════════════════════════════════════════════
# OMEGA-GENUS AND IRREGULARITY
# ═══════════════════════════════════════════════════════════════════════════

class TestPhiTerms:
    """Betti numbers plus the undetermined Phi term."""

    def test_pillow(self) -> None:
        """Should give p_omega 1 and q 0 on the sphere."""
        graph = pillow(2, 2)
        assert (omega_genus(graph), irregularity(graph)) == (1, 0)

    def test_abelian(self) -> None:
        """Should give q 2 on the torus."""
        assert irregularity(abelian_grid(2, 3)) == 2

    def test_elliptic_cycle(self, open_e5) -> None:
        """Should give q 1 on a cycle of planes."""
        assert irregularity(open_e5) == 1

    def test_quadric_chain_vanishes(self) -> None:
        """Should derive a zero Phi term for rational components and lines."""
        graph = quadric_chain(3)
        assert phi_vanishes(graph)
        assert omega_genus(graph) == 0

    def test_elliptic_double_curve_needs_input(self, quadrics_plane) -> None:
        """Should report the cokernel as undetermined when an edge has genus 1."""
        assert not phi_vanishes(quadrics_plane)
        result = omega_genus(quadrics_plane)
        assert isinstance(result, Unavailable)
        assert "cokernel" in result.unavailable
        assert isinstance(irregularity(quadrics_plane), Unavailable)

    def test_supplied_values(self, quadrics_plane) -> None:
        """Should add the supplied dimensions to the Betti numbers."""
        assert omega_genus(quadrics_plane, supplied_coker=1) == 4
        assert irregularity(quadrics_plane, supplied_ker=0) == 0

    def test_negative_supplied_value(self, quadrics_plane) -> None:
        """Should refuse a negative dimension."""
        with pytest.raises(InvalidSuppliedValueError):
            omega_genus(quadrics_plane, supplied_coker=-1)

    def test_nonzero_value_where_phi_vanishes(self, chain3) -> None:
        """Should refuse a non-zero dimension for a map between zero spaces."""
        with pytest.raises(InvalidSuppliedValueError):
            irregularity(chain3, supplied_ker=2)
        assert irregularity(chain3, supplied_ker=0) == 0


# ═══════════════════════════════════════════════════════════════════════════
# K^2
# ═══════════════════════════════════════════════════════════════════════════

class TestK2:
    """K^2 interval of the smooth fibre."""

    def test_nonsmooth_range(self, nonsmooth) -> None:
        """Should give [9, 10] from one R4 point."""
        interval = k2_interval(nonsmooth)
        assert (interval.min, interval.max, interval.base) == (9, 10, 7)

    def test_s4_fork(self, s4_fork) -> None:
        """Should give the K^2 of the Veronese surface."""
        interval = k2_interval(s4_fork)
        assert (interval.min, interval.max) == (9, 9)

    def test_elliptic_cycle(self) -> None:
        """Should give 0 on a cycle of nine planes."""
        interval = k2_interval(cycle_planes(9))
        assert (interval.min, interval.max) == (0, 0)

    def test_quadric_chain(self) -> None:
        """Should give the K^2 of a rational normal scroll."""
        interval = k2_interval(quadric_chain(5))
        assert (interval.min, interval.max) == (8, 8)

    def test_quadrics_and_plane(self, quadrics_plane) -> None:
        """Should give the K^2 of a smooth quintic."""
        interval = k2_interval(quadrics_plane)
        assert (interval.min, interval.max) == (5, 5)

    def test_corrections(self) -> None:
        """Should bound k by (n-2)(r_n+s_n) and (2n-5) r_n + C(n-1, 2) s_n."""
        census = SingularityCensus(v=1, e=0, e_tilde=0, open_faces={5: 1}, angles={4: 2})
        assert k2_corrections(census) == (3 + 4, 5 + 6)

    def test_planar_census_formula(self) -> None:
        """Should evaluate 9v - 10e + sum 2n f_n + r_3 on a bare census."""
        census = SingularityCensus(v=16, e=24, e_tilde=24, faces={3: 4, 6: 6})
        interval = planar_k2_interval(census)
        assert (interval.min, interval.max) == (0, 0)

    def test_missing_weights(self) -> None:
        """Should mark the interval inapplicable when a component K^2 is unknown."""
        graph = ZappaticGraph(mode=GraphMode.GENERAL, vertices=(VertexWeights(chi=1),))
        interval = k2_interval(graph)
        assert not interval.applicable
        assert "vertices.0.k2" in interval.reason


# ═══════════════════════════════════════════════════════════════════════════
# CLASS
# ═══════════════════════════════════════════════════════════════════════════

class TestClass:
    """Class of the smooth fibre and its lower bound."""

    def test_chain_of_six(self, chain6) -> None:
        """Should give delta 6 above the bound 4."""
        delta = class_delta(chain6)
        assert (delta.min, delta.max, delta.lower_bound) == (6, 6, 4)
        assert not delta.violated

    def test_s4_fork_is_tight(self, s4_fork) -> None:
        """Should meet the lower bound exactly."""
        delta = class_delta(s4_fork)
        assert (delta.min, delta.max, delta.lower_bound) == (3, 3, 3)

    def test_filled_face(self, filled_e5) -> None:
        """Should give delta 12."""
        delta = class_delta(filled_e5)
        assert (delta.min, delta.max) == (12, 12)

    def test_interval_is_crosswise(self, nonsmooth) -> None:
        """Should take the smallest class from the largest K^2."""
        delta = class_delta(nonsmooth)
        assert (delta.min, delta.max) == (3, 4)

    def test_lower_bound_discounts_k_range(self, nonsmooth) -> None:
        """Should subtract the K^2 correction range from the combinatorial bound."""
        census = counts(nonsmooth)
        assert class_lower_bound(census, k2_interval(nonsmooth, census)) == 2

    def test_general_mode_quintic(self, quadrics_plane) -> None:
        """Should give the class of a smooth quintic surface and no planar bound."""
        delta = class_delta(quadrics_plane)
        assert (delta.min, delta.max) == (80, 80)
        assert delta.lower_bound is None

    def test_unavailable_without_k2(self) -> None:
        """Should report the class unavailable when K^2 is."""
        graph = ZappaticGraph(mode=GraphMode.GENERAL, vertices=(VertexWeights(chi=1),))
        assert isinstance(class_delta(graph), Unavailable)
