"""Smoothability obstructions: Multiple Point Formula, Zappa and Miyaoka-Yau bounds, K3 profiles."""

from .bounds import MiyaokaYauRecord, ZappaRecord, classify_equality, miyaoka_yau, zappa_bound
from .k3 import K3Profile, k3_profile, k3_profile_from_counts
from .mpf import mpf_edge, mpf_global, tpf_predicted_double_points
from .report import EdgeBound, ObstructionReport, Verdict, check
from .verdicts import EqualityClass, VerdictStatus

__all__ = [
    "mpf_edge",
    "mpf_global",
    "tpf_predicted_double_points",
    "zappa_bound",
    "miyaoka_yau",
    "classify_equality",
    "k3_profile",
    "k3_profile_from_counts",
    "check",
    "ZappaRecord",
    "MiyaokaYauRecord",
    "K3Profile",
    "EdgeBound",
    "Verdict",
    "ObstructionReport",
    "VerdictStatus",
    "EqualityClass",
]
