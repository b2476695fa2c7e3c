"""Exact arithmetic for the supported coefficient rings."""

from .descriptor import RingDescriptor, RingKind
from .elements import INFINITY, RingElement, arithmetic
from .filtration import MaximalIdealFiltration, leading_form
from .linalg import matrix_rank, row_echelon
from .matrix import Matrix
from .smith import SmithForm, smith_normal_form

__all__ = [
    "INFINITY",
    "MaximalIdealFiltration",
    "Matrix",
    "RingDescriptor",
    "RingElement",
    "RingKind",
    "SmithForm",
    "arithmetic",
    "leading_form",
    "matrix_rank",
    "row_echelon",
    "smith_normal_form",
]
