"""
Defines the foundational primitives for strict, immutable data modeling.

Every domain value of the package (graphs, censuses, reports, incidence
structures) derives from `ImmutableRecord`. Once loaded and enriched, a
configuration never changes, so all downstream computations are pure
functions over frozen records.

It focuses on two core concerns:

1. Data Integrity
The `ImmutableRecord` base class enforces immutability (frozen instances)
and strict schema validation (no unknown fields).

2. Semantic Integer Typing
Annotated integer aliases (`NonNegativeInt`, `PositiveInt`)
carry the range constraints of the combinatorial quantities they hold.
"""

import math
from typing import Annotated

from pydantic import AfterValidator, BaseModel, ConfigDict, Field


# =============================================================================
# CONFIGURATION CONSTANTS
# =============================================================================

MIN_POINT_ORDER = 3
"""Smallest order n of an E_n, R_n or S_n point."""

MIN_ANGLE_ORDER = 4
"""Smallest order n of an S_n point (an S_3 fork is an R_3 chain)."""


# =============================================================================
# BASE CONFIGURATION
# =============================================================================

class ImmutableRecord(BaseModel):
    """A base record providing shared configuration for all canonical data structures.

    Configuration Behaviors:
        - **Immutability (frozen=True):** Instances cannot be modified after creation.
        - **Strictness (extra='forbid'):** Unknown fields raise a validation error,
          which is also how unknown keys in input documents are rejected.

    Example:
        >>> class Cell(ImmutableRecord):
        ...     dim: int
        ...
        >>> cell = Cell(dim=2)
        >>> cell.dim = 1  # Raises ValidationError (Frozen)
        >>> Cell(dim=2, name="x")  # Raises ValidationError (Extra)
    """
    model_config = ConfigDict(
        frozen=True,
        extra='forbid',
        use_enum_values=False
    )


class Unavailable(ImmutableRecord):
    """Placeholder for a quantity the graph data does not determine.

    Serializes as ``{"unavailable": "<reason>"}``.
    """
    unavailable: str


# =============================================================================
# RATIO VALIDATION
# =============================================================================

def _validate_unit_interval(value: float) -> float:
    """Accept a finite ratio in [0, 1].

    Raises:
        ValueError: If the value is NaN, infinite or outside [0, 1].
    """
    if not math.isfinite(value):
        raise ValueError(f"Ratio must be a finite number (got {value}).")
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"Ratio must lie in [0, 1] (got {value}).")
    return value


# =============================================================================
# SEMANTIC PRIMITIVES
# =============================================================================

UnitFraction = Annotated[
    float,
    AfterValidator(_validate_unit_interval),
    Field(description="Finite floating point value in [0, 1].")
]

NonNegativeInt = Annotated[
    int,
    Field(ge=0, description="Count, genus or index (>= 0).")
]

PositiveInt = Annotated[
    int,
    Field(ge=1, description="Degree or size (>= 1).")
]
