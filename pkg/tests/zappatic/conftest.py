"""Graph fixtures shared by the zappatic test suites.

Each fixture returns a prepared graph (R_3 inference done, validated) of a
configuration whose invariants are known by hand.
"""

import pytest

from zappatic.families import (
    chain_planes,
    cycle_planes,
    fork_planes,
    nonsmoothable_example,
    quadrics_and_plane,
    star_obstruction,
)
from zappatic.graph import PointKind, ZappaticGraph

# ═══════════════════════════════════════════════════════════════════════════
# PLANAR CONFIGURATIONS
# ═══════════════════════════════════════════════════════════════════════════

@pytest.fixture
def s4_fork() -> ZappaticGraph:
    """Three planes glued to a central plane, three R_3 points (Veronese in P^5)."""
    return fork_planes(4, with_angle=False)


@pytest.fixture
def chain3() -> ZappaticGraph:
    return chain_planes(3)


@pytest.fixture
def chain6() -> ZappaticGraph:
    return chain_planes(6)


@pytest.fixture
def open_e5() -> ZappaticGraph:
    """Cycle of five planes with five R_3 points."""
    return cycle_planes(5)


@pytest.fixture
def filled_e5() -> ZappaticGraph:
    """Cycle of five planes with one E_5 point."""
    return cycle_planes(5, filled=True)


@pytest.fixture
def nonsmooth() -> ZappaticGraph:
    return nonsmoothable_example()


@pytest.fixture
def star() -> ZappaticGraph:
    return star_obstruction()


@pytest.fixture
def single_edge() -> ZappaticGraph:
    return ZappaticGraph.planar(2, [(0, 1)])


@pytest.fixture
def single_plane() -> ZappaticGraph:
    return ZappaticGraph.planar(1, [])


@pytest.fixture
def tetrahedron() -> ZappaticGraph:
    """Four planes in general position: six lines, four E_3 points (a quartic K3)."""
    return ZappaticGraph.planar(
        4,
        [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        [
            (PointKind.E, (0, 3, 1)),
            (PointKind.E, (0, 4, 2)),
            (PointKind.E, (1, 5, 2)),
            (PointKind.E, (3, 5, 4)),
        ],
    )


@pytest.fixture
def double_coverage() -> ZappaticGraph:
    """Centre 0 with edges to 1, 2, 3 and edge 1-2; corner (0, 0, 1) is in a face and an angle."""
    return ZappaticGraph.planar(
        4,
        [(0, 1), (0, 2), (0, 3), (1, 2)],
        [(PointKind.E, (0, 3, 1)), (PointKind.S, (0, 1, 2))],
    )

# ═══════════════════════════════════════════════════════════════════════════
# GENERAL CONFIGURATIONS
# ═══════════════════════════════════════════════════════════════════════════

@pytest.fixture
def quadrics_plane() -> ZappaticGraph:
    return quadrics_and_plane()
