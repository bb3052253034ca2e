"""Census profiles of planar degenerations of scrolls.

A scroll of degree d over a curve of genus g degenerates to d planes with
d - 2g + 2 R_3 points and 2g - 2 S_4 points. No explicit graph is built;
the profile checks that such a census is combinatorially consistent.
"""

from math import comb

from zappatic.core.primitives import ImmutableRecord, NonNegativeInt
from zappatic.families.exceptions import ParameterRangeError, require_minimum
from zappatic.graph.census import SingularityCensus
from zappatic.invariants.formulas import planar_chi, planar_k2_interval
from zappatic.invariants.records import K2Interval


class ScrollProfile(ImmutableRecord):
    """Counts of a scroll degeneration and the relations they must satisfy.

    Attributes:
        census: Profile census with a valence witness (2g - 2 vertices of
            valence 3, the others of valence 2).
        pair_identity: Adjacent edge pairs at the vertices equal the pairs
            covered by the R_3 and S_4 points.
        handshake: Valences sum to 2e.
        chi_matches: chi = 1 - g.
        k2_matches: 8(1 - g) lies in the K^2 interval.
    """
    degree: NonNegativeInt
    genus: NonNegativeInt
    census: SingularityCensus
    chi: int
    k2: K2Interval
    pair_identity: bool
    handshake: bool
    chi_matches: bool
    k2_matches: bool

    @property
    def consistent(self) -> bool:
        return self.pair_identity and self.handshake and self.chi_matches and self.k2_matches


def scroll_profile(degree: int, genus: int) -> ScrollProfile:
    """Profile of the scroll family for ``degree`` and ``genus``.

    Raises:
        ParameterRangeError: If genus < 1 or degree < max(3, 2g - 2).
    """
    require_minimum("genus", genus, 1)
    minimum = max(3, 2 * genus - 2)
    if degree < minimum:
        raise ParameterRangeError("degree", degree, minimum)

    r3 = degree - 2 * genus + 2
    s4 = 2 * genus - 2
    e = degree + genus - 1
    valences = (3,) * s4 + (2,) * r3
    census = SingularityCensus(
        v=degree,
        e=e,
        e_tilde=e,
        open_faces={3: r3} if r3 else {},
        angles={4: s4} if s4 else {},
        valences=valences,
    )
    chi = planar_chi(census)
    k2 = planar_k2_interval(census)
    covered = census.r(3) + comb(3, 2) * census.s(4)
    return ScrollProfile(
        degree=degree,
        genus=genus,
        census=census,
        chi=chi,
        k2=k2,
        pair_identity=sum(comb(w, 2) for w in valences) == covered,
        handshake=sum(valences) == 2 * e,
        chi_matches=chi == 1 - genus,
        k2_matches=k2.contains(8 * (1 - genus)),
    )
