"""Domain exceptions for family generators."""

from typing import Optional

from zappatic.core.exceptions import ZappaticError


class ParameterRangeError(ZappaticError, ValueError):
    """Raised when a family parameter is below its minimum.

    Attributes:
        name: Parameter name.
        value: Rejected value.
        minimum: Smallest accepted value.
    """

    def __init__(self, name: str, value: int, minimum: int):
        self.name = name
        self.value = value
        self.minimum = minimum
        super().__init__(f"{name} must be >= {minimum} (got {value})")


def require_minimum(name: str, value: int, minimum: int) -> None:
    if value < minimum:
        raise ParameterRangeError(name, value, minimum)


class InvalidConfigurationError(ZappaticError, ValueError):
    """Raised when an incidence structure does not describe a good Zappatic configuration.

    Attributes:
        point: Label of the offending point, when one is to blame.
    """

    def __init__(self, reason: str, point: Optional[str] = None):
        self.point = point
        super().__init__(f"{reason} at point {point!r}" if point is not None else reason)


class StickCurveShapeError(ZappaticError, ValueError):
    """Raised when a custom stick curve adjacency has the wrong topology."""
    pass
