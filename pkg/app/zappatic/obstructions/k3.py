"""Counting relations of planar graphs degenerating a K3 surface.

A 3-valent planar graph with g = e - v + 1 which is the graph of a
degenerate K3 surface satisfies v = 2g - 2, e = 3g - 3, f = g + 1 and
sum (6 - n) f_n = 12; when no face has order six or more, g <= 11.
"""

from collections.abc import Mapping, Sequence
from typing import Optional, Union

from zappatic.core.primitives import ImmutableRecord, Unavailable
from zappatic.graph.census import SingularityCensus, counts
from zappatic.graph.schema import GraphMode, ZappaticGraph

K3_FACE_SUM = 12
K3_GENUS_CAP = 11


class K3Profile(ImmutableRecord):
    """Pass/fail of each K3 relation for one census profile."""
    genus: int
    v: int
    e: int
    f: int
    three_valent: bool
    vertex_relation: bool
    edge_relation: bool
    face_relation: bool
    face_sum: int
    face_sum_relation: bool
    genus_cap_applies: bool
    genus_cap: Optional[bool] = None

    @property
    def passed(self) -> bool:
        checks = [
            self.three_valent,
            self.vertex_relation,
            self.edge_relation,
            self.face_relation,
            self.face_sum_relation,
        ]
        if self.genus_cap_applies:
            checks.append(self.genus_cap)
        return all(checks)


def k3_profile_from_counts(
    v: int,
    e: int,
    faces: Mapping[int, int],
    valences: Optional[Sequence[int]] = None,
) -> K3Profile:
    """Evaluate the K3 relations on raw counts.

    Without ``valences`` the 3-valence check falls back to the handshake
    condition 2e = 3v.
    """
    genus = e - v + 1
    f = sum(faces.values())
    face_sum = sum((6 - n) * count for n, count in faces.items())
    three_valent = all(w == 3 for w in valences) if valences is not None else 2 * e == 3 * v
    cap_applies = all(count == 0 for n, count in faces.items() if n >= 6)
    return K3Profile(
        genus=genus,
        v=v,
        e=e,
        f=f,
        three_valent=three_valent,
        vertex_relation=v == 2 * genus - 2,
        edge_relation=e == 3 * genus - 3,
        face_relation=f == genus + 1,
        face_sum=face_sum,
        face_sum_relation=face_sum == K3_FACE_SUM,
        genus_cap_applies=cap_applies,
        genus_cap=genus <= K3_GENUS_CAP if cap_applies else None,
    )


def k3_profile(
    graph: ZappaticGraph, census: Optional[SingularityCensus] = None
) -> Union[K3Profile, Unavailable]:
    """K3 relations for a planar graph."""
    if graph.mode is not GraphMode.PLANAR:
        return Unavailable(unavailable="K3 relations are stated for planar graphs only")
    if census is None:
        census = counts(graph)
    return k3_profile_from_counts(census.v, census.e, census.faces, census.valences)
