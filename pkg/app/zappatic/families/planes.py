"""Small configurations built directly as graphs.

Chains, cycles and forks of planes, chains of quadrics, the two quadrics
with a plane, and the two hand-made obstruction examples.
"""

from zappatic.families.exceptions import require_minimum
from zappatic.graph.schema import EdgeData, GraphMode, PointKind, SingularPoint, VertexWeights, ZappaticGraph
from zappatic.graph.validation import prepare

QUADRIC = VertexWeights(chi=1, k2=8, pg=0, q=0, sectional_genus=0, degree=2)


def chain_planes(n: int) -> ZappaticGraph:
    """Path of ``n`` planes with an R_3 point at every inner plane."""
    require_minimum("n", n, 2)
    edges = [(i, i + 1) for i in range(n - 1)]
    points = [(PointKind.R, (i - 1, i)) for i in range(1, n - 1)]
    return prepare(ZappaticGraph.planar(n, edges, points))


def cycle_planes(n: int, filled: bool = False) -> ZappaticGraph:
    """Cycle of ``n`` planes: one E_n point when ``filled``, else n R_3 points."""
    require_minimum("n", n, 3)
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    if filled:
        points = [(PointKind.E, tuple(range(n)))]
    else:
        points = [(PointKind.R, (i - 1, i)) for i in range(1, n)] + [(PointKind.R, (n - 1, 0))]
    return prepare(ZappaticGraph.planar(n, edges, points))


def fork_planes(n: int, with_angle: bool = True) -> ZappaticGraph:
    """Fork of ``n`` planes: ``n - 1`` planes glued to plane 0.

    With ``with_angle`` the teeth form one S_n point; without it every pair
    of teeth meets in an inferred R_3 point (for n = 4 this is the Veronese
    surface degenerated to four planes).
    """
    require_minimum("n", n, 4)
    edges = [(0, i) for i in range(1, n)]
    points = [(PointKind.S, tuple(range(n - 1)))] if with_angle else []
    return prepare(ZappaticGraph.planar(n, edges, points))


def quadric_chain(n: int) -> ZappaticGraph:
    """Chain of ``n`` smooth quadrics glued along lines of the same ruling.

    The two double lines on an inner quadric are disjoint, so there are no
    triple points.
    """
    require_minimum("n", n, 2)
    ruling = dict(genus=0, degree=1, self_int_u=0, self_int_v=0, normal_deg_u=0, normal_deg_v=0)
    return prepare(
        ZappaticGraph(
            mode=GraphMode.GENERAL,
            vertices=(QUADRIC,) * n,
            edges=tuple(EdgeData(u=i, v=i + 1, **ruling) for i in range(n - 1)),
        )
    )


def quadrics_and_plane() -> ZappaticGraph:
    """Two general quadrics and a plane in P^3.

    The quadrics meet in an elliptic quartic and cut the plane in two
    conics, which meet in four E_3 points.
    """
    quartic = EdgeData(
        u=0, v=1, genus=1, degree=4, self_int_u=8, self_int_v=8, normal_deg_u=8, normal_deg_v=8
    )
    conic = dict(genus=0, degree=2, self_int_u=2, self_int_v=4, normal_deg_u=2, normal_deg_v=4)
    triangle = SingularPoint(kind=PointKind.E, edges=(0, 2, 1))
    return prepare(
        ZappaticGraph(
            mode=GraphMode.GENERAL,
            vertices=(QUADRIC, QUADRIC, VertexWeights.plane()),
            edges=(quartic, EdgeData(u=0, v=2, **conic), EdgeData(u=1, v=2, **conic)),
            points=(triangle,) * 4,
        )
    )


def nonsmoothable_example() -> ZappaticGraph:
    """Five planes: an R_4 point over a path of three lines and a pendant plane at its third plane.

    Every local test passes and K^2 lies in [9, 10], yet no smooth surface
    degenerates to it.
    """
    edges = [(0, 1), (1, 2), (2, 3), (2, 4)]
    return prepare(ZappaticGraph.planar(5, edges, [(PointKind.R, (0, 1, 2))]))


def star_obstruction() -> ZappaticGraph:
    """Plane 0 meeting four planes; an S_4 angle on three lines, R_3 points on the fourth.

    The Multiple Point Formula along the fourth line is -1.
    """
    edges = [(0, 1), (0, 2), (0, 3), (0, 4)]
    points = [(PointKind.S, (1, 2, 3))] + [(PointKind.R, (0, i)) for i in (1, 2, 3)]
    return prepare(ZappaticGraph.planar(5, edges, points))
