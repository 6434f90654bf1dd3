"""Selmer input handling, the three-regime check and verification reports."""

from .report import EXIT_CODES, VerificationReport
from .selmer import SelmerInput, selmer_to_F2g, selmer_to_H2
from .verify import VerifyOptions, unit_disk_check, verify_curve

__all__ = [
    "EXIT_CODES", "SelmerInput", "VerificationReport", "VerifyOptions", "selmer_to_F2g",
    "selmer_to_H2", "unit_disk_check", "verify_curve",
]
