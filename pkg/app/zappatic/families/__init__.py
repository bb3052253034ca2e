"""Generators of concrete Zappatic configurations and stick curves."""

from .curves import StickKind, stick_curve_graph
from .exceptions import InvalidConfigurationError, ParameterRangeError, StickCurveShapeError
from .incidence import IncidenceStructure, Plane, Side, classify_point, derive_graph
from .planes import (
    chain_planes,
    cycle_planes,
    fork_planes,
    nonsmoothable_example,
    quadric_chain,
    quadrics_and_plane,
    star_obstruction,
)
from .random_config import random_planar_config
from .scrolls import ScrollProfile, scroll_profile
from .triangulations import (
    PillowCensusReport,
    abelian_grid,
    abelian_incidence,
    pillow,
    pillow_census_report,
    pillow_incidence,
    veronese_incidence,
    veronese_mt,
)

__all__ = [
    "IncidenceStructure",
    "Plane",
    "Side",
    "derive_graph",
    "classify_point",
    "chain_planes",
    "cycle_planes",
    "fork_planes",
    "quadric_chain",
    "quadrics_and_plane",
    "nonsmoothable_example",
    "star_obstruction",
    "veronese_incidence",
    "veronese_mt",
    "pillow_incidence",
    "pillow",
    "pillow_census_report",
    "PillowCensusReport",
    "abelian_incidence",
    "abelian_grid",
    "StickKind",
    "stick_curve_graph",
    "ScrollProfile",
    "scroll_profile",
    "random_planar_config",
    "ParameterRangeError",
    "InvalidConfigurationError",
    "StickCurveShapeError",
]
