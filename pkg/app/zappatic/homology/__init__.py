"""Cellular homology of the associated graph over the rationals."""

from .complex import (
    BettiVector,
    ChainComplex,
    HomologyReport,
    betti,
    chain_complex,
    homology_report,
)
from .linalg import integer_rank, matmul

__all__ = [
    "ChainComplex",
    "BettiVector",
    "HomologyReport",
    "chain_complex",
    "betti",
    "homology_report",
    "integer_rank",
    "matmul",
]
