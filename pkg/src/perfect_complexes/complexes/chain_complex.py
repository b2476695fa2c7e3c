"""Bounded complexes of finite free modules.

Convention: the differential ``d_i : F^i → F^{i+1}`` raises the degree and
acts on column vectors by left multiplication, so ``diffs[i]`` has shape
``rank(i+1) × rank(i)`` and composition is the ordinary matrix product.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, Mapping, Optional, Sequence, Tuple

from ..errors import ChainMapError, RingMismatchError, UnsupportedRingError
from ..rings import Matrix, RingDescriptor, RingElement

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class ValidationResult:
    """Verdict of :func:`validate`; falsy when a violation was found."""

    ok: bool
    degree: Optional[int] = None
    position: Optional[Tuple[int, int]] = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        where = f" at degree {self.degree}" if self.degree is not None else ""
        if self.position is not None:
            where += f", entry {self.position}"
        return f"violation{where}: {self.message}"


@dataclass(frozen=True)
class ChainComplex:
    """``ranks[k]`` is the rank in degree ``min_deg + k``; ``diffs[k]`` leaves that degree."""

    ring: RingDescriptor
    min_deg: int
    ranks: Tuple[int, ...]
    diffs: Tuple[Matrix, ...] = field(default=())

    def __post_init__(self) -> None:
        if not self.ranks:
            raise ValueError("a complex needs at least one degree; use ChainComplex.empty()")
        if any(r < 0 for r in self.ranks):
            raise ValueError(f"ranks must be nonnegative, got {self.ranks}")
        if len(self.diffs) != len(self.ranks) - 1:
            raise ValueError(
                f"{len(self.ranks)} degrees need {len(self.ranks) - 1} differentials, "
                f"got {len(self.diffs)}"
            )

    # Construction -----------------------------------------------------------------

    @classmethod
    def empty(cls, ring: RingDescriptor) -> "ChainComplex":
        return cls(ring, 0, (0,), ())

    @classmethod
    def single(cls, ring: RingDescriptor, degree: int, rank: int) -> "ChainComplex":
        return cls(ring, degree, (rank,), ())

    @classmethod
    def from_differentials(
        cls, ring: RingDescriptor, min_deg: int, diffs: Sequence[Matrix]
    ) -> "ChainComplex":
        """Infer ranks from the shapes of consecutive differentials."""

        if not diffs:
            raise ValueError("at least one differential is required")
        ranks = [diffs[0].ncols] + [d.nrows for d in diffs]
        return cls(ring, min_deg, tuple(ranks), tuple(diffs))

    # Shape ------------------------------------------------------------------------

    @property
    def max_deg(self) -> int:
        return self.min_deg + len(self.ranks) - 1

    def degrees(self) -> range:
        return range(self.min_deg, self.max_deg + 1)

    def rank(self, degree: int) -> int:
        if self.min_deg <= degree <= self.max_deg:
            return self.ranks[degree - self.min_deg]
        return 0

    def differential(self, degree: int) -> Matrix:
        """``d_degree``; a zero matrix of the right shape outside the stored range."""

        if self.min_deg <= degree < self.max_deg:
            return self.diffs[degree - self.min_deg]
        return Matrix.zero(self.ring, self.rank(degree + 1), self.rank(degree))

    def support(self) -> Optional[Tuple[int, int]]:
        """Lowest and highest degrees with nonzero rank, or None when empty."""

        nonzero = [d for d in self.degrees() if self.rank(d)]
        if not nonzero:
            return None
        return nonzero[0], nonzero[-1]

    @property
    def is_empty(self) -> bool:
        return self.support() is None

    @property
    def length(self) -> Optional[int]:
        """``b − a`` over the nonzero degrees; None for the empty complex."""

        support = self.support()
        return None if support is None else support[1] - support[0]

    def rank_vector(self) -> Tuple[int, ...]:
        support = self.support()
        if support is None:
            return ()
        return tuple(self.rank(d) for d in range(support[0], support[1] + 1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** (d % 2) * self.rank(d) for d in self.degrees())

    def iter_differentials(self) -> Iterator[Tuple[int, Matrix]]:
        for offset, matrix in enumerate(self.diffs):
            yield self.min_deg + offset, matrix

    def trimmed(self) -> "ChainComplex":
        """Drop zero-rank degrees at both ends."""

        support = self.support()
        if support is None:
            return ChainComplex.empty(self.ring)
        lo, hi = support
        return ChainComplex(
            self.ring,
            lo,
            tuple(self.rank(d) for d in range(lo, hi + 1)),
            tuple(self.differential(d) for d in range(lo, hi)),
        )

    def __str__(self) -> str:
        support = self.support()
        if support is None:
            return f"0 (empty complex over {self.ring})"
        parts = [f"{self.rank(d)}@{d}" for d in range(support[0], support[1] + 1)]
        return f"complex over {self.ring}: " + " → ".join(parts)


@dataclass(frozen=True)
class ChainMap:
    """Degreewise matrices ``component(i) : source^i → target^i``."""

    source: ChainComplex
    target: ChainComplex
    components: Mapping[int, Matrix]

    def component(self, degree: int) -> Matrix:
        if degree in self.components:
            return self.components[degree]
        return Matrix.zero(self.source.ring, self.target.rank(degree), self.source.rank(degree))


# Validation -------------------------------------------------------------------------


def validate(c: ChainComplex) -> ValidationResult:
    """Check shapes, rings and ``d_{i+1} · d_i = 0``; report the first violation."""

    for degree, d in c.iter_differentials():
        expected = (c.rank(degree + 1), c.rank(degree))
        if d.shape != expected:
            return ValidationResult(
                False, degree, None, f"differential has shape {d.shape}, expected {expected}"
            )
        if d.ring != c.ring:
            return ValidationResult(False, degree, None, f"differential lives over {d.ring}")
    for degree in range(c.min_deg, c.max_deg - 1):
        product = c.differential(degree + 1) @ c.differential(degree)
        for r, col, entry in product.iter_entries():
            if not entry.is_zero:
                return ValidationResult(
                    False,
                    degree,
                    (r, col),
                    f"d_{degree + 1}·d_{degree} has nonzero entry {entry}",
                )
    return ValidationResult(True)


def is_chain_map(f: ChainMap) -> ValidationResult:
    lo = min(f.source.min_deg, f.target.min_deg)
    hi = max(f.source.max_deg, f.target.max_deg)
    for degree in range(lo, hi + 1):
        component = f.component(degree)
        expected = (f.target.rank(degree), f.source.rank(degree))
        if component.shape != expected:
            return ValidationResult(
                False, degree, None, f"component has shape {component.shape}, expected {expected}"
            )
    for degree in range(lo - 1, hi + 1):
        left = f.component(degree + 1) @ f.source.differential(degree)
        right = f.target.differential(degree) @ f.component(degree)
        for r, col, entry in left.iter_entries():
            if entry != right[r, col]:
                return ValidationResult(
                    False, degree, (r, col), "f∘d differs from d∘f"
                )
    return ValidationResult(True)


# Closed operations ------------------------------------------------------------------


def shift(c: ChainComplex, k: int) -> ChainComplex:
    """``c[k]``: degrees move by ``−k`` and differentials are scaled by ``(−1)^k``."""

    sign = -1 if k % 2 else 1
    return ChainComplex(
        c.ring,
        c.min_deg - k,
        c.ranks,
        tuple(d.scaled(sign) if sign < 0 else d for d in c.diffs),
    )


def direct_sum(a: ChainComplex, b: ChainComplex) -> ChainComplex:
    """Block-diagonal sum with ``a``'s block first."""

    if a.ring != b.ring:
        raise RingMismatchError(f"cannot add complexes over {a.ring} and {b.ring}")
    if a.is_empty:
        return b
    if b.is_empty:
        return a
    lo = min(a.min_deg, b.min_deg)
    hi = max(a.max_deg, b.max_deg)
    return ChainComplex(
        a.ring,
        lo,
        tuple(a.rank(d) + b.rank(d) for d in range(lo, hi + 1)),
        tuple(
            Matrix.block_diagonal(a.differential(d), b.differential(d)) for d in range(lo, hi)
        ),
    )


def cone(f: ChainMap) -> ChainComplex:
    """Mapping cone ``C^k = a^{k+1} ⊕ b^k`` with ``d = [[−d_a, 0], [f, d_b]]``."""

    a, b = f.source, f.target
    if a.ring != b.ring:
        raise RingMismatchError(f"cannot form a cone between {a.ring} and {b.ring}")
    verdict = is_chain_map(f)
    if not verdict:
        raise ChainMapError(verdict.degree if verdict.degree is not None else a.min_deg, verdict.message)

    lo = min(a.min_deg - 1, b.min_deg)
    hi = max(a.max_deg - 1, b.max_deg)
    diffs = []
    for k in range(lo, hi):
        top = [
            -a.differential(k + 1),
            Matrix.zero(a.ring, a.rank(k + 2), b.rank(k)),
        ]
        bottom = [f.component(k + 1), b.differential(k)]
        diffs.append(Matrix.from_blocks([top, bottom]))
    ranks = tuple(a.rank(k + 1) + b.rank(k) for k in range(lo, hi + 1))
    return ChainComplex(a.ring, lo, ranks, tuple(diffs))


def cone_inclusion(f: ChainMap) -> ChainMap:
    """The canonical chain map ``b → cone(f)``."""

    c = cone(f)
    components: Dict[int, Matrix] = {}
    for k in c.degrees():
        components[k] = Matrix.from_blocks(
            [
                [Matrix.zero(c.ring, f.source.rank(k + 1), f.target.rank(k))],
                [Matrix.identity(c.ring, f.target.rank(k))],
            ]
        )
    return ChainMap(f.target, c, components)


def cone_projection(f: ChainMap) -> ChainMap:
    """The canonical chain map ``cone(f) → a[1]``."""

    c = cone(f)
    shifted = shift(f.source, 1)
    components: Dict[int, Matrix] = {}
    for k in c.degrees():
        components[k] = Matrix.from_blocks(
            [
                [
                    Matrix.identity(c.ring, f.source.rank(k + 1)),
                    Matrix.zero(c.ring, f.source.rank(k + 1), f.target.rank(k)),
                ]
            ]
        )
    return ChainMap(c, shifted, components)


def truncate(c: ChainComplex, a: int) -> ChainComplex:
    """Brutal truncation keeping the degrees ``≥ a``."""

    if not c.min_deg <= a <= c.max_deg:
        raise ValueError(f"truncation degree {a} outside [{c.min_deg}, {c.max_deg}]")
    offset = a - c.min_deg
    return ChainComplex(c.ring, a, c.ranks[offset:], c.diffs[offset:])


def reduce_mod_maximal(c: ChainComplex) -> ChainComplex:
    """``c ⊗ A/𝔪`` over the residue field; ranks are unchanged."""

    if not c.ring.is_local:
        raise UnsupportedRingError("reduce_mod_maximal", "a local ring", c.ring)
    field_ring = c.ring.residue_field
    return ChainComplex(
        field_ring,
        c.min_deg,
        c.ranks,
        tuple(d.map(field_ring, RingElement.residue) for d in c.diffs),
    )


def conjugate(c: ChainComplex, changes: Mapping[int, Tuple[Matrix, Matrix]]) -> ChainComplex:
    """Change basis degreewise: ``d'_i = P_{i+1} · d_i · P_i⁻¹``.

    ``changes`` maps a degree to ``(P, P⁻¹)``; missing degrees keep their basis.
    """

    def forward(degree: int) -> Matrix:
        if degree in changes:
            return changes[degree][0]
        return Matrix.identity(c.ring, c.rank(degree))

    def backward(degree: int) -> Matrix:
        if degree in changes:
            return changes[degree][1]
        return Matrix.identity(c.ring, c.rank(degree))

    diffs = tuple(forward(d + 1) @ m @ backward(d) for d, m in c.iter_differentials())
    return ChainComplex(c.ring, c.min_deg, c.ranks, diffs)
