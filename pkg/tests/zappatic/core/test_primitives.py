"""Test suite for the immutable record base and the semantic integer types."""

import pytest
from pydantic import ValidationError

from zappatic.core import (
    ImmutableRecord,
    NonNegativeInt,
    PositiveInt,
    Unavailable,
    UnitFraction,
)


class _Sample(ImmutableRecord):
    count: NonNegativeInt = 0
    size: PositiveInt = 1
    share: UnitFraction = 0.0


# ═══════════════════════════════════════════════════════════════════════════
# IMMUTABLE RECORD BASE CLASS
# ═══════════════════════════════════════════════════════════════════════════

class TestImmutability:
    """Frozen state validation."""

    def test_cannot_modify_attribute(self) -> None:
        """Should raise error when attempting to reassign an attribute."""
        record = _Sample(count=2)
        with pytest.raises(ValidationError):
            record.count = 3  # type: ignore

    def test_identical_instances_have_same_hash(self) -> None:
        """Should hash equal records equally, so they can be dictionary keys."""
        assert hash(_Sample(count=2)) == hash(_Sample(count=2))
        assert {_Sample(count=2): "x"}[_Sample(count=2)] == "x"


class TestSchemaStrictness:
    """Schema strictness (extra='forbid')."""

    def test_rejects_unknown_fields(self) -> None:
        """Should raise ValidationError if unknown fields are provided."""
        with pytest.raises(ValidationError) as exc_info:
            _Sample(colour="red")
        assert any(e["type"] == "extra_forbidden" for e in exc_info.value.errors())


# ═══════════════════════════════════════════════════════════════════════════
# SEMANTIC PRIMITIVES
# ═══════════════════════════════════════════════════════════════════════════

class TestSemanticIntegers:
    """Range constraints of counts and sizes."""

    def test_negative_count_rejected(self) -> None:
        """Should reject a negative count."""
        with pytest.raises(ValidationError):
            _Sample(count=-1)

    def test_size_starts_at_one(self) -> None:
        """Should reject a size of zero."""
        with pytest.raises(ValidationError):
            _Sample(size=0)

    @pytest.mark.parametrize("value", [float("inf"), float("nan"), -0.5, 1.01])
    def test_unit_fraction_bounds(self, value) -> None:
        """Should reject values outside [0, 1] and non-finite values."""
        with pytest.raises(ValidationError):
            _Sample(share=value)


class TestUnavailable:
    """Placeholder for undetermined quantities."""

    def test_serializes_reason(self) -> None:
        """Should serialize as a single unavailable key."""
        marker = Unavailable(unavailable="missing weights: vertices.0.k2")
        assert marker.model_dump() == {"unavailable": "missing weights: vertices.0.k2"}
