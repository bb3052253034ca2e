"""Root of the zappatic exception hierarchy."""


class ZappaticError(Exception):
    """Base class for all errors raised by the zappatic package."""
    pass
