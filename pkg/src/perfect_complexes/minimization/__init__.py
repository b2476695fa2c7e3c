"""Minimal models of complexes over local rings."""

from .minimize import (
    MinimizationStep,
    MinimizationTranscript,
    ScanOrder,
    is_minimal,
    minimize,
    residue_betti_numbers,
    width,
)

__all__ = [
    "MinimizationStep",
    "MinimizationTranscript",
    "ScanOrder",
    "is_minimal",
    "minimize",
    "residue_betti_numbers",
    "width",
]
