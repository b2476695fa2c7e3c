"""Decomposition into summands of length at most one over principal ideal domains."""

from .decompose import (
    DecompositionReport,
    RefinementLevel,
    Summand,
    audit_width,
    decompose,
    planted_report,
    primary_refine,
    report_to_complex,
)

__all__ = [
    "DecompositionReport",
    "RefinementLevel",
    "Summand",
    "audit_width",
    "decompose",
    "planted_report",
    "primary_refine",
    "report_to_complex",
]
