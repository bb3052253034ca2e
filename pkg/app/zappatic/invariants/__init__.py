"""Numerical invariants of Zappatic surfaces and of nodal curves."""

from .curves import DualGraph, curve_chi, curve_pa
from .exceptions import DisconnectedGraphError, InvalidSuppliedValueError, MissingWeightsError
from .formulas import (
    chi_structure_sheaf,
    class_delta,
    class_lower_bound,
    degree,
    delta_interval,
    irregularity,
    k2_corrections,
    k2_interval,
    omega_genus,
    phi_vanishes,
    planar_chi,
    planar_k2_interval,
    sectional_genus,
)
from .records import DeltaInterval, InvariantReport, K2Interval
from .report import full_report

__all__ = [
    "DualGraph",
    "curve_chi",
    "curve_pa",
    "degree",
    "sectional_genus",
    "chi_structure_sheaf",
    "planar_chi",
    "phi_vanishes",
    "omega_genus",
    "irregularity",
    "k2_interval",
    "k2_corrections",
    "planar_k2_interval",
    "class_delta",
    "class_lower_bound",
    "delta_interval",
    "full_report",
    "K2Interval",
    "DeltaInterval",
    "InvariantReport",
    "MissingWeightsError",
    "DisconnectedGraphError",
    "InvalidSuppliedValueError",
]
