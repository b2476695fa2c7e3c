"""Irreducibility certificates over localized polynomial rings."""

from .certificate import (
    DifferentialCheck,
    IrreducibilityCertificate,
    Verdict,
    explain,
    find_certificate,
    induced_matrix,
    verify_certificate,
)

__all__ = [
    "DifferentialCheck",
    "IrreducibilityCertificate",
    "Verdict",
    "explain",
    "find_certificate",
    "induced_matrix",
    "verify_certificate",
]
