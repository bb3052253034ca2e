"""Planar Zappatic surfaces from triangulations.

The Veronese degeneration triangulates the triangle of lattice points
(i, j) with i + j <= d. The pillow glues two triangulated a x b grids
along their boundary, a sphere degenerating a K3 surface. The abelian
grid triangulates an n x m torus. Singularity types are derived from the
incidence structures, never written down by hand.
"""

from typing import Callable

from zappatic.core.primitives import ImmutableRecord, NonNegativeInt
from zappatic.families.exceptions import require_minimum
from zappatic.families.incidence import IncidenceStructure, Plane, Side, derive_graph, structure
from zappatic.graph.census import SingularityCensus, counts
from zappatic.graph.schema import ZappaticGraph


def _label(i: int, j: int) -> str:
    return f"{i},{j}"


# =============================================================================
# VERONESE
# =============================================================================

def veronese_incidence(d: int) -> IncidenceStructure:
    require_minimum("d", d, 2)
    planes = []
    for i in range(d):
        for j in range(d - i):
            planes.append((f"up{i},{j}", [_label(i, j), _label(i + 1, j), _label(i, j + 1)]))
            if i + j <= d - 2:
                planes.append(
                    (f"down{i},{j}", [_label(i + 1, j), _label(i, j + 1), _label(i + 1, j + 1)])
                )
    return structure(planes)


def veronese_mt(d: int) -> ZappaticGraph:
    """d^2 planes with only R_3 and E_6 points, degenerating the d-th Veronese surface."""
    return derive_graph(veronese_incidence(d))


# =============================================================================
# PILLOW
# =============================================================================

def _pillow_boundary(a: int, b: int) -> dict[tuple[int, int], str]:
    """Boundary grid points labelled 1 .. 2a + 2b clockwise from (0, b)."""
    walk = (
        [(i, b) for i in range(a)]
        + [(a, j) for j in range(b, 0, -1)]
        + [(i, 0) for i in range(a, 0, -1)]
        + [(0, j) for j in range(b)]
    )
    return {point: str(index) for index, point in enumerate(walk, start=1)}


def pillow_incidence(a: int, b: int) -> IncidenceStructure:
    require_minimum("a", a, 2)
    require_minimum("b", b, 2)
    boundary = _pillow_boundary(a, b)

    def namer(side: str) -> Callable[[int, int], str]:
        return lambda i, j: boundary.get((i, j), f"{side}{i},{j}")

    top, bottom = namer("t"), namer("b")
    planes = []
    for i in range(a):
        for j in range(b):
            planes.append((f"tL{i},{j}", [top(i, j), top(i + 1, j), top(i + 1, j + 1)]))
            planes.append((f"tU{i},{j}", [top(i, j), top(i, j + 1), top(i + 1, j + 1)]))
    # the bottom grid is the mirror image, so its diagonals run the other way
    for i in range(a):
        for j in range(b):
            planes.append((f"bA{i},{j}", [bottom(i, j), bottom(i + 1, j), bottom(i, j + 1)]))
            planes.append((f"bB{i},{j}", [bottom(i + 1, j), bottom(i, j + 1), bottom(i + 1, j + 1)]))
    return structure(planes)


def pillow(a: int, b: int) -> ZappaticGraph:
    """Pillow of bidegree (a, b): 4ab planes, four E_3 corners and 2ab - 2 E_6 points."""
    return derive_graph(pillow_incidence(a, b))


class PillowCensusReport(ImmutableRecord):
    """Derived pillow census next to the census stated for the construction.

    The statement lists four R_3 points and 2ab - 2 E_6 points; the
    derivation finds the corners to be E_3 points, which is what
    K^2 = 0 and chi = 2 require.
    """
    a: NonNegativeInt
    b: NonNegativeInt
    derived: SingularityCensus
    claimed_open_faces: dict[int, NonNegativeInt]
    claimed_faces: dict[int, NonNegativeInt]
    discrepancies: tuple[str, ...]


def pillow_census_report(a: int, b: int) -> PillowCensusReport:
    derived = counts(pillow(a, b))
    claimed_open = {3: 4}
    claimed_faces = {6: 2 * a * b - 2}
    discrepancies = []
    for name, found, stated in (
        ("r", derived.open_faces, claimed_open),
        ("f", derived.faces, claimed_faces),
        ("s", derived.angles, {}),
    ):
        for n in sorted(set(found) | set(stated)):
            if found.get(n, 0) != stated.get(n, 0):
                discrepancies.append(
                    f"{name}{n}: derived {found.get(n, 0)}, stated {stated.get(n, 0)}"
                )
    return PillowCensusReport(
        a=a,
        b=b,
        derived=derived,
        claimed_open_faces=claimed_open,
        claimed_faces=claimed_faces,
        discrepancies=tuple(discrepancies),
    )


# =============================================================================
# ABELIAN GRID
# =============================================================================

def abelian_incidence(n: int, m: int) -> IncidenceStructure:
    """n x m torus grid, each cell cut by its main diagonal.

    Sides carry explicit keys: on small tori two lines may join the same
    pair of points.
    """
    require_minimum("n", n, 2)
    require_minimum("m", m, 2)

    def p(i: int, j: int) -> str:
        return _label(i % n, j % m)

    def h(i: int, j: int) -> Side:
        return Side(key=f"h{i % n},{j % m}", ends=(p(i, j), p(i + 1, j)))

    def v(i: int, j: int) -> Side:
        return Side(key=f"v{i % n},{j % m}", ends=(p(i, j), p(i, j + 1)))

    def diagonal(i: int, j: int) -> Side:
        return Side(key=f"d{i},{j}", ends=(p(i, j), p(i + 1, j + 1)))

    planes = []
    for i in range(n):
        for j in range(m):
            planes.append(
                Plane(
                    label=f"L{i},{j}",
                    points=(p(i, j), p(i + 1, j), p(i + 1, j + 1)),
                    sides=(h(i, j), v(i + 1, j), diagonal(i, j)),
                )
            )
            planes.append(
                Plane(
                    label=f"U{i},{j}",
                    points=(p(i, j), p(i, j + 1), p(i + 1, j + 1)),
                    sides=(v(i, j), h(i, j + 1), diagonal(i, j)),
                )
            )
    points = tuple(_label(i, j) for i in range(n) for j in range(m))
    return IncidenceStructure(points=points, planes=tuple(planes))


def abelian_grid(n: int, m: int) -> ZappaticGraph:
    """2nm planes with only E_6 points, degenerating an abelian surface."""
    return derive_graph(abelian_incidence(n, m))
