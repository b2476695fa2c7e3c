"""Minimal models over local rings by splitting off acyclic two-term pieces.

A unit entry ``u`` of ``d_i`` at ``(r, c)`` spans a direct summand
``0 → R --u--> R → 0`` once its row and column are cleared. Clearing the
column of ``d_i`` by row operations on ``F^{i+1}`` is compensated on the
columns of ``d_{i+1}``; clearing the row by column operations on ``F^i`` is
compensated on the rows of ``d_{i−1}``. The pivot row and column, the
matching column of ``d_{i+1}`` and row of ``d_{i−1}`` (all zero by then)
are deleted.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from ..complexes import (
    ChainComplex,
    field_dimensions,
    reduce_mod_maximal,
    validate,
)
from ..errors import InvalidComplexError, UnsupportedRingError
from ..rings import Matrix, RingDescriptor, RingElement

LOGGER = logging.getLogger(__name__)

Grid = List[List[RingElement]]


class ScanOrder(str, Enum):
    ROW = "row"
    COLUMN = "column"


@dataclass(frozen=True)
class MinimizationStep:
    degree: int
    position: Tuple[int, int]
    pivot: RingElement


@dataclass(frozen=True)
class MinimizationTranscript:
    """Split-off pieces in the order they were removed."""

    steps: Tuple[MinimizationStep, ...]
    initial_ranks: Mapping[int, int]
    final_ranks: Mapping[int, int]
    scan: ScanOrder = ScanOrder.ROW

    @property
    def is_empty(self) -> bool:
        return not self.steps


def _require_local(ring: RingDescriptor, operation: str) -> None:
    if not ring.is_local:
        raise UnsupportedRingError(operation, "a local ring", ring)


def is_minimal(c: ChainComplex) -> bool:
    """True iff no differential has a unit entry."""

    _require_local(c.ring, "is_minimal")
    return not any(
        entry.is_unit() for _, d in c.iter_differentials() for _, _, entry in d.iter_entries()
    )


class _Workspace:
    """Mutable copy of a complex's differentials indexed by degree offset."""

    def __init__(self, c: ChainComplex) -> None:
        self.ring = c.ring
        self.min_deg = c.min_deg
        self.ranks = list(c.ranks)
        self.diffs: List[Grid] = [d.to_lists() for d in c.diffs]

    def positions(self, k: int, scan: ScanOrder) -> Iterator[Tuple[int, int]]:
        rows, cols = self.ranks[k + 1], self.ranks[k]
        if scan is ScanOrder.ROW:
            return ((r, col) for r in range(rows) for col in range(cols))
        return ((r, col) for col in range(cols) for r in range(rows))

    def find_pivot(self, scan: ScanOrder) -> Optional[Tuple[int, int, int]]:
        for k, grid in enumerate(self.diffs):
            for r, col in self.positions(k, scan):
                if grid[r][col].is_unit():
                    return k, r, col
        return None

    def split_off(self, k: int, r: int, col: int) -> RingElement:
        grid = self.diffs[k]
        pivot = grid[r][col]
        inverse = pivot.inverse()
        after = self.diffs[k + 1] if k + 1 < len(self.diffs) else None
        before = self.diffs[k - 1] if k > 0 else None

        for j in range(self.ranks[k + 1]):
            if j == r or grid[j][col].is_zero:
                continue
            a = grid[j][col] * inverse
            grid[j] = [x - a * y for x, y in zip(grid[j], grid[r])]
            if after is not None:
                for row in after:
                    if not row[j].is_zero:
                        row[r] = row[r] + a * row[j]

        for t in range(self.ranks[k]):
            if t == col or grid[r][t].is_zero:
                continue
            b = grid[r][t] * inverse
            for row in grid:
                if not row[col].is_zero:
                    row[t] = row[t] - b * row[col]
            if before is not None:
                before[col] = [x + b * y for x, y in zip(before[col], before[t])]

        del grid[r]
        for row in grid:
            del row[col]
        if after is not None:
            for row in after:
                del row[r]
        if before is not None:
            del before[col]
        self.ranks[k] -= 1
        self.ranks[k + 1] -= 1
        return pivot

    def complex(self) -> ChainComplex:
        diffs = tuple(
            Matrix.from_lists(self.ring, grid, self.ranks[k]) for k, grid in enumerate(self.diffs)
        )
        return ChainComplex(self.ring, self.min_deg, tuple(self.ranks), diffs)


def minimize(
    c: ChainComplex, scan: ScanOrder = ScanOrder.ROW
) -> Tuple[ChainComplex, MinimizationTranscript]:
    """Split off every unit pivot, lowest degree first, in the given scan order.

    The result is trimmed to its nonzero degrees; an acyclic input yields the
    empty complex.
    """

    _require_local(c.ring, "minimize")
    verdict = validate(c)
    if not verdict:
        raise InvalidComplexError(verdict)
    scan = ScanOrder(scan)

    work = _Workspace(c)
    steps: List[MinimizationStep] = []
    while True:
        found = work.find_pivot(scan)
        if found is None:
            break
        k, r, col = found
        pivot = work.split_off(k, r, col)
        step = MinimizationStep(work.min_deg + k, (r, col), pivot)
        LOGGER.debug("Split off pivot %s of d_%d at %s", pivot, step.degree, step.position)
        steps.append(step)

    result = work.complex()
    transcript = MinimizationTranscript(
        tuple(steps),
        {d: c.rank(d) for d in c.degrees()},
        {d: result.rank(d) for d in c.degrees()},
        scan,
    )
    result = result.trimmed()
    LOGGER.info(
        "Minimized complex over %s: ranks %s -> %s in %d steps",
        c.ring,
        c.rank_vector(),
        result.rank_vector(),
        len(steps),
    )
    return result, transcript


def width(c: ChainComplex) -> Optional[int]:
    """Length of the minimal model; None when ``c`` is acyclic."""

    return minimize(c)[0].length


def residue_betti_numbers(c: ChainComplex) -> Dict[int, int]:
    """``dim Hⁱ(c ⊗ k)`` over the residue field, for every degree of ``c``."""

    _require_local(c.ring, "residue_betti_numbers")
    return field_dimensions(reduce_mod_maximal(c))
