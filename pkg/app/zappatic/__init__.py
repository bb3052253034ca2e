# app/zappatic/__init__.py

"""
Zappatic
Exact combinatorial invariants and smoothability obstructions for
Zappatic surface degenerations, computed from their associated graphs.
"""

from zappatic.graph import ZappaticGraph, load, serialize, prepare, validate
from zappatic.homology import betti, chain_complex
from zappatic.invariants import full_report
from zappatic.obstructions import check

__version__ = "0.1.0"

__all__ = [
    "ZappaticGraph",
    "load",
    "serialize",
    "prepare",
    "validate",
    "betti",
    "chain_complex",
    "full_report",
    "check",
    "__version__",
]
