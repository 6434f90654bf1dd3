"""Curve data, local expansions, the logarithm lattice and residue-disk scans."""

from .expansions import (
    expand_at_infinity,
    expand_at_P0,
    infinity_expansion,
    p0_expansion,
    reparametrize_at_infinity,
)
from .lattice import DEFAULT_PREC, LogLattice, VectorSeries, log_lattice
from .scan import DiskScanResult, brute_force_rho, disk_scan, dominance_threshold, rho
from .spec import CurveSpec, new_curve, structural_checks

__all__ = [
    "CurveSpec", "DEFAULT_PREC", "DiskScanResult", "LogLattice", "VectorSeries",
    "brute_force_rho", "disk_scan", "dominance_threshold", "expand_at_P0",
    "expand_at_infinity", "infinity_expansion", "log_lattice", "new_curve",
    "p0_expansion", "reparametrize_at_infinity", "rho", "structural_checks",
]
