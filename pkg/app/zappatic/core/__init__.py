"""Core primitives shared by every zappatic subpackage."""

from .exceptions import ZappaticError
from .primitives import (
    MIN_ANGLE_ORDER,
    MIN_POINT_ORDER,
    ImmutableRecord,
    NonNegativeInt,
    PositiveInt,
    Unavailable,
    UnitFraction,
)

__all__ = [
    "ZappaticError",
    "ImmutableRecord",
    "Unavailable",
    "UnitFraction",
    "NonNegativeInt",
    "PositiveInt",
    "MIN_POINT_ORDER",
    "MIN_ANGLE_ORDER",
]
