"""Report records of the invariants package.

Intervals serialize as objects whose first two keys are ``min`` and
``max``; quantities the data does not determine serialize as
``{"unavailable": "<reason>"}``.
"""

from typing import Optional, Union

from pydantic import model_validator

from zappatic.core.primitives import ImmutableRecord, NonNegativeInt, Unavailable
from zappatic.graph.census import SingularityCensus
from zappatic.graph.schema import GraphMode
from zappatic.homology.complex import BettiVector

MaybeInt = Union[int, Unavailable]


class K2Interval(ImmutableRecord):
    """Admissible range of K^2 of the smooth fibre.

    Attributes:
        min: Lower end (base plus the smallest correction).
        max: Upper end (base plus the largest correction).
        base: The part independent of the R_n/S_n corrections.
        applicable: False when general-mode weights are missing.
        reason: Why the interval is not applicable.
    """
    min: Optional[int] = None
    max: Optional[int] = None
    base: Optional[int] = None
    applicable: bool = True
    reason: Optional[str] = None

    @model_validator(mode="after")
    def _check_bounds(self) -> "K2Interval":
        if not self.applicable:
            if self.reason is None:
                raise ValueError("an inapplicable K2 interval needs a reason")
            return self
        if self.min is None or self.max is None or self.base is None:
            raise ValueError("an applicable K2 interval needs min, max and base")
        if self.min > self.max:
            raise ValueError(f"K2 interval is empty: min {self.min} > max {self.max}")
        return self

    @classmethod
    def unavailable(cls, reason: str) -> "K2Interval":
        return cls(applicable=False, reason=reason)

    def contains(self, value: int) -> bool:
        return self.applicable and self.min <= value <= self.max


class DeltaInterval(ImmutableRecord):
    """Range of the class (degree of the dual variety) of the smooth fibre.

    Attributes:
        min: 12 chi - K2.max + deg + 4 (g - 1).
        max: 12 chi - K2.min + deg + 4 (g - 1).
        lower_bound: Combinatorial lower bound on the class (planar graphs only).
        violated: True when ``min`` falls below ``lower_bound``.
    """
    min: int
    max: int
    lower_bound: Optional[int] = None
    violated: bool = False


class InvariantReport(ImmutableRecord):
    """Every numerical invariant of one validated graph."""
    mode: GraphMode
    degree: MaybeInt
    sectional_genus: MaybeInt
    chi: MaybeInt
    p_omega: MaybeInt
    irregularity_q: MaybeInt
    k2: K2Interval
    delta_class: Union[DeltaInterval, Unavailable]
    census: SingularityCensus
    betti: BettiVector
    inferred_r3: NonNegativeInt = 0
