"""Immutable matrices over the supported rings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Iterable, List, Optional, Sequence, Tuple

from ..errors import RingMismatchError, ShapeMismatchError
from .descriptor import RingDescriptor
from .elements import RingElement

Rows = Tuple[Tuple[RingElement, ...], ...]


@dataclass(frozen=True)
class Matrix:
    """A ``nrows × ncols`` matrix with entries in ``ring``.

    Shapes with zero rows or zero columns are legal; ``entries`` is then empty
    (or a tuple of empty rows) and the shape fields carry the dimensions.
    """

    ring: RingDescriptor
    nrows: int
    ncols: int
    entries: Rows

    def __post_init__(self) -> None:
        if len(self.entries) != self.nrows or any(len(row) != self.ncols for row in self.entries):
            raise ShapeMismatchError(
                f"entries do not form a {self.nrows}×{self.ncols} matrix"
            )
        for row in self.entries:
            for entry in row:
                if entry.ring != self.ring:
                    raise RingMismatchError(f"entry {entry} is not in {self.ring}")

    # Construction -----------------------------------------------------------------

    @classmethod
    def from_rows(
        cls,
        ring: RingDescriptor,
        rows: Sequence[Sequence[Any]],
        ncols: Optional[int] = None,
    ) -> "Matrix":
        """Build from nested sequences of ints or :class:`RingElement`."""

        entries = tuple(tuple(RingElement.of(ring, value) for value in row) for row in rows)
        if ncols is None:
            ncols = len(entries[0]) if entries else 0
        return cls(ring, len(entries), ncols, entries)

    @classmethod
    def zero(cls, ring: RingDescriptor, nrows: int, ncols: int) -> "Matrix":
        z = RingElement.zero(ring)
        return cls(ring, nrows, ncols, tuple(tuple(z for _ in range(ncols)) for _ in range(nrows)))

    @classmethod
    def identity(cls, ring: RingDescriptor, size: int) -> "Matrix":
        z, o = RingElement.zero(ring), RingElement.one(ring)
        return cls(
            ring,
            size,
            size,
            tuple(tuple(o if r == c else z for c in range(size)) for r in range(size)),
        )

    @classmethod
    def block_diagonal(cls, first: "Matrix", second: "Matrix") -> "Matrix":
        if first.ring != second.ring:
            raise RingMismatchError(f"cannot combine matrices over {first.ring} and {second.ring}")
        z = RingElement.zero(first.ring)
        rows: List[Tuple[RingElement, ...]] = []
        for row in first.entries:
            rows.append(row + tuple(z for _ in range(second.ncols)))
        for row in second.entries:
            rows.append(tuple(z for _ in range(first.ncols)) + row)
        return cls(first.ring, first.nrows + second.nrows, first.ncols + second.ncols, tuple(rows))

    @classmethod
    def from_blocks(cls, blocks: Sequence[Sequence["Matrix"]]) -> "Matrix":
        """Assemble a block matrix; blocks in one block-row share ``nrows``."""

        ring = blocks[0][0].ring
        ncols = sum(block.ncols for block in blocks[0])
        rows: List[Tuple[RingElement, ...]] = []
        for block_row in blocks:
            if sum(block.ncols for block in block_row) != ncols:
                raise ShapeMismatchError("block rows have different widths")
            height = block_row[0].nrows
            for block in block_row:
                if block.nrows != height:
                    raise ShapeMismatchError("blocks in one row have different heights")
                if block.ring != ring:
                    raise RingMismatchError("blocks live over different rings")
            for r in range(height):
                rows.append(tuple(entry for block in block_row for entry in block.entries[r]))
        return cls(ring, len(rows), ncols, tuple(rows))

    # Access -----------------------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, position: Tuple[int, int]) -> RingElement:
        r, c = position
        return self.entries[r][c]

    def column(self, c: int) -> Tuple[RingElement, ...]:
        return tuple(row[c] for row in self.entries)

    def iter_entries(self) -> Iterable[Tuple[int, int, RingElement]]:
        for r, row in enumerate(self.entries):
            for c, entry in enumerate(row):
                yield r, c, entry

    def is_zero(self) -> bool:
        return all(entry.is_zero for _, _, entry in self.iter_entries())

    def to_lists(self) -> List[List[RingElement]]:
        """Mutable copy of the entries, for elimination algorithms."""

        return [list(row) for row in self.entries]

    @classmethod
    def from_lists(cls, ring: RingDescriptor, rows: List[List[RingElement]], ncols: int) -> "Matrix":
        return cls(ring, len(rows), ncols, tuple(tuple(row) for row in rows))

    # Algebra ----------------------------------------------------------------------

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ring != other.ring:
            raise RingMismatchError(f"cannot multiply matrices over {self.ring} and {other.ring}")
        if self.ncols != other.nrows:
            raise ShapeMismatchError(f"cannot multiply {self.shape} by {other.shape}")
        z = RingElement.zero(self.ring)
        columns = [other.column(c) for c in range(other.ncols)]
        rows = []
        for row in self.entries:
            out = []
            for column in columns:
                total = z
                for a, b in zip(row, column):
                    if not a.is_zero and not b.is_zero:
                        total = total + a * b
                out.append(total)
            rows.append(tuple(out))
        return Matrix(self.ring, self.nrows, other.ncols, tuple(rows))

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ShapeMismatchError(f"cannot add {self.shape} and {other.shape}")
        return Matrix(
            self.ring,
            self.nrows,
            self.ncols,
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)),
        )

    def __neg__(self) -> "Matrix":
        return self.scaled(-1)

    def scaled(self, factor: Any) -> "Matrix":
        return Matrix(
            self.ring,
            self.nrows,
            self.ncols,
            tuple(tuple(entry * factor for entry in row) for row in self.entries),
        )

    def transpose(self) -> "Matrix":
        return Matrix(
            self.ring,
            self.ncols,
            self.nrows,
            tuple(self.column(c) for c in range(self.ncols)),
        )

    def map(self, ring: RingDescriptor, func: Callable[[RingElement], RingElement]) -> "Matrix":
        """Apply ``func`` entrywise, landing in ``ring``."""

        return Matrix(
            ring,
            self.nrows,
            self.ncols,
            tuple(tuple(func(entry) for entry in row) for row in self.entries),
        )

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix(
            self.ring,
            len(rows),
            len(cols),
            tuple(tuple(self.entries[r][c] for c in cols) for r in rows),
        )

    def without(self, row: Optional[int] = None, col: Optional[int] = None) -> "Matrix":
        """Drop one row and/or one column."""

        rows = [r for r in range(self.nrows) if r != row]
        cols = [c for c in range(self.ncols) if c != col]
        return self.submatrix(rows, cols)

    def to_json(self) -> List[List[Any]]:
        return [[entry.to_json() for entry in row] for row in self.entries]

    def __str__(self) -> str:
        if not self.nrows or not self.ncols:
            return f"<{self.nrows}×{self.ncols}>"
        return "[" + "; ".join(", ".join(str(e) for e in row) for row in self.entries) + "]"
