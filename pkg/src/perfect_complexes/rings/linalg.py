"""Exact linear algebra over fields."""

from __future__ import annotations

from typing import List

from ..errors import UnsupportedRingError
from .elements import RingElement
from .matrix import Matrix


def row_echelon(m: Matrix) -> List[List[RingElement]]:
    """Reduced row echelon form by Gauss–Jordan elimination (first nonzero pivot)."""

    if not m.ring.is_field:
        raise UnsupportedRingError("row_echelon", "a field", m.ring)
    rows = m.to_lists()
    pivot_row = 0
    for col in range(m.ncols):
        found = next((r for r in range(pivot_row, m.nrows) if not rows[r][col].is_zero), None)
        if found is None:
            continue
        rows[pivot_row], rows[found] = rows[found], rows[pivot_row]
        inv = rows[pivot_row][col].inverse()
        rows[pivot_row] = [entry * inv for entry in rows[pivot_row]]
        for r in range(m.nrows):
            factor = rows[r][col]
            if r != pivot_row and not factor.is_zero:
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
        if pivot_row == m.nrows:
            break
    return rows


def matrix_rank(m: Matrix) -> int:
    """Rank of a matrix over a field."""

    return sum(1 for row in row_echelon(m) if any(not entry.is_zero for entry in row))
