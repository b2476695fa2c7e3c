"""Smith normal form over the Euclidean rings of the toolkit."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..errors import UnsupportedRingError
from .elements import RingElement
from .matrix import Matrix

LOGGER = logging.getLogger(__name__)

Grid = List[List[RingElement]]


@dataclass(frozen=True)
class SmithForm:
    """``left @ source @ right == diagonal`` with ``d₁ | d₂ | ...`` canonical.

    The inverses of both transforms are returned as well; they certify
    invertibility and give kernel coordinates in cohomology computations.
    """

    source: Matrix
    left: Matrix
    diagonal: Matrix
    right: Matrix
    left_inverse: Matrix
    right_inverse: Matrix
    rank: int

    @property
    def diagonal_entries(self) -> Tuple[RingElement, ...]:
        return tuple(self.diagonal[i, i] for i in range(self.rank))

    @property
    def invariant_factors(self) -> Tuple[RingElement, ...]:
        """Nonzero, non-unit diagonal entries."""

        return tuple(d for d in self.diagonal_entries if not d.is_unit())


class _Tracker:
    """Elimination state: the working grid plus the four transforms."""

    def __init__(self, m: Matrix) -> None:
        ring = m.ring
        self.ring = ring
        self.a: Grid = m.to_lists()
        self.u: Grid = Matrix.identity(ring, m.nrows).to_lists()
        self.u_inv: Grid = Matrix.identity(ring, m.nrows).to_lists()
        self.v: Grid = Matrix.identity(ring, m.ncols).to_lists()
        self.v_inv: Grid = Matrix.identity(ring, m.ncols).to_lists()
        self.nrows = m.nrows
        self.ncols = m.ncols

    # Row operations act on ``a`` and ``u`` from the left; ``u_inv`` from the right.

    def swap_rows(self, i: int, j: int) -> None:
        if i == j:
            return
        for grid in (self.a, self.u):
            grid[i], grid[j] = grid[j], grid[i]
        for row in self.u_inv:
            row[i], row[j] = row[j], row[i]

    def add_row(self, target: int, source: int, factor: RingElement) -> None:
        """row_target += factor * row_source."""

        if factor.is_zero:
            return
        for grid in (self.a, self.u):
            grid[target] = [t + factor * s for t, s in zip(grid[target], grid[source])]
        for row in self.u_inv:
            row[source] = row[source] - row[target] * factor

    def scale_row(self, i: int, unit: RingElement) -> None:
        inv = unit.inverse()
        for grid in (self.a, self.u):
            grid[i] = [entry * unit for entry in grid[i]]
        for row in self.u_inv:
            row[i] = row[i] * inv

    # Column operations act on ``a`` and ``v`` from the right; ``v_inv`` from the left.

    def swap_cols(self, i: int, j: int) -> None:
        if i == j:
            return
        for grid in (self.a, self.v):
            for row in grid:
                row[i], row[j] = row[j], row[i]
        self.v_inv[i], self.v_inv[j] = self.v_inv[j], self.v_inv[i]

    def add_col(self, target: int, source: int, factor: RingElement) -> None:
        """col_target += factor * col_source."""

        if factor.is_zero:
            return
        for grid in (self.a, self.v):
            for row in grid:
                row[target] = row[target] + factor * row[source]
        self.v_inv[source] = [
            s - factor * t for s, t in zip(self.v_inv[source], self.v_inv[target])
        ]

    def smallest_entry(self, start: int) -> Optional[Tuple[int, int]]:
        best: Optional[Tuple[int, int, int]] = None
        for r in range(start, self.nrows):
            for c in range(start, self.ncols):
                entry = self.a[r][c]
                if entry.is_zero:
                    continue
                norm = entry.euclid_norm()
                if best is None or norm < best[0]:
                    best = (norm, r, c)
        return None if best is None else (best[1], best[2])


def smith_normal_form(m: Matrix) -> SmithForm:
    """Diagonalise ``m`` by invertible row and column operations.

    Pivots are the entries of smallest Euclidean norm (absolute value,
    degree, or valuation), ties broken by row-major position.
    """

    if not m.ring.supports_smith_form:
        raise UnsupportedRingError("smith_normal_form", "a principal ideal domain", m.ring)

    state = _Tracker(m)
    t = 0
    while t < min(m.nrows, m.ncols):
        position = state.smallest_entry(t)
        if position is None:
            break
        state.swap_rows(t, position[0])
        state.swap_cols(t, position[1])
        _clear_cross(state, t)
        pivot = state.a[t][t]
        state.scale_row(t, pivot.normal_unit())
        t += 1

    LOGGER.debug("Smith form of a %s×%s matrix over %s has rank %s", m.nrows, m.ncols, m.ring, t)
    ring = m.ring
    return SmithForm(
        source=m,
        left=Matrix.from_lists(ring, state.u, m.nrows),
        diagonal=Matrix.from_lists(ring, state.a, m.ncols),
        right=Matrix.from_lists(ring, state.v, m.ncols),
        left_inverse=Matrix.from_lists(ring, state.u_inv, m.nrows),
        right_inverse=Matrix.from_lists(ring, state.v_inv, m.ncols),
        rank=t,
    )


def _clear_cross(state: _Tracker, t: int) -> None:
    """Zero row ``t`` and column ``t`` outside the pivot and make it divide the rest."""

    while True:
        if _reduce_column(state, t) or _reduce_row(state, t):
            continue
        pivot = state.a[t][t]
        offender = next(
            (
                r
                for r in range(t + 1, state.nrows)
                for c in range(t + 1, state.ncols)
                if not pivot.divides(state.a[r][c])
            ),
            None,
        )
        if offender is None:
            return
        state.add_row(t, offender, RingElement.one(state.ring))


def _reduce_column(state: _Tracker, t: int) -> bool:
    """Clear column ``t`` below the pivot; True if the pivot had to change."""

    for r in range(t + 1, state.nrows):
        entry = state.a[r][t]
        if entry.is_zero:
            continue
        q, rem = entry.divmod(state.a[t][t])
        state.add_row(r, t, -q)
        if not rem.is_zero:
            state.swap_rows(t, r)
            return True
    return False


def _reduce_row(state: _Tracker, t: int) -> bool:
    """Clear row ``t`` right of the pivot; True if the pivot had to change."""

    for c in range(t + 1, state.ncols):
        entry = state.a[t][c]
        if entry.is_zero:
            continue
        q, rem = entry.divmod(state.a[t][t])
        state.add_col(c, t, -q)
        if not rem.is_zero:
            state.swap_cols(t, c)
            return True
    return False
