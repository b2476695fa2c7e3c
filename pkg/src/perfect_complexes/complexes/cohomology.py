"""Cohomology of complexes over fields and principal ideal domains."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from ..errors import UnsupportedRingError
from ..rings import RingDescriptor, RingElement, matrix_rank, smith_normal_form
from .chain_complex import ChainComplex

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class DegreeCohomology:
    degree: int
    free_rank: int
    invariant_factors: Tuple[RingElement, ...] = ()

    @property
    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("R" if self.free_rank == 1 else f"R^{self.free_rank}")
        parts.extend(f"R/({d})" for d in self.invariant_factors)
        return " ⊕ ".join(parts) if parts else "0"


@dataclass(frozen=True)
class CohomologyReport:
    """Per-degree free rank and invariant factors ``d₁ | d₂ | ...``."""

    ring: RingDescriptor
    degrees: Tuple[DegreeCohomology, ...]

    def at(self, degree: int) -> DegreeCohomology:
        for item in self.degrees:
            if item.degree == degree:
                return item
        return DegreeCohomology(degree, 0)

    def nonzero(self) -> Dict[int, DegreeCohomology]:
        return {item.degree: item for item in self.degrees if not item.is_zero}

    def shifted(self, k: int) -> "CohomologyReport":
        """Cohomology of ``c[k]`` given that of ``c``."""

        return CohomologyReport(
            self.ring,
            tuple(
                DegreeCohomology(item.degree - k, item.free_rank, item.invariant_factors)
                for item in self.degrees
            ),
        )

    def same_as(self, other: "CohomologyReport") -> bool:
        """Equal in every degree, ignoring degrees where both vanish."""

        return self.ring == other.ring and self.nonzero() == other.nonzero()

    def dimensions(self) -> Dict[int, int]:
        """Over a field: degree → dimension."""

        return {item.degree: item.free_rank for item in self.degrees}

    def __str__(self) -> str:
        lines = [f"H^{item.degree} = {item}" for item in self.degrees]
        return "\n".join(lines) if lines else "0"


def cohomology(c: ChainComplex) -> CohomologyReport:
    """``ker d_i / im d_{i−1}`` in every degree.

    The kernel of ``d_i`` is spanned by the trailing columns of ``V`` in its
    Smith form; the image of ``d_{i−1}`` is rewritten in that basis through
    ``V⁻¹`` and a second Smith form yields free rank and torsion.
    """

    if not c.ring.supports_smith_form:
        raise UnsupportedRingError("cohomology", "a field or principal ideal domain", c.ring)

    degrees = []
    for degree in c.degrees():
        degrees.append(_degree_cohomology(c, degree))
    report = CohomologyReport(c.ring, tuple(degrees))
    LOGGER.debug("Cohomology over %s: %s", c.ring, {d: str(h) for d, h in report.nonzero().items()})
    return report


def _degree_cohomology(c: ChainComplex, degree: int) -> DegreeCohomology:
    n = c.rank(degree)
    if n == 0:
        return DegreeCohomology(degree, 0)
    outgoing = smith_normal_form(c.differential(degree))
    kernel_dim = n - outgoing.rank
    incoming = c.differential(degree - 1)
    if kernel_dim == 0 or incoming.ncols == 0:
        return DegreeCohomology(degree, kernel_dim)
    coordinates = outgoing.right_inverse @ incoming
    in_kernel = coordinates.submatrix(
        range(outgoing.rank, n), range(incoming.ncols)
    )
    image = smith_normal_form(in_kernel)
    return DegreeCohomology(
        degree,
        kernel_dim - image.rank,
        image.invariant_factors,
    )


def field_dimensions(c: ChainComplex) -> Dict[int, int]:
    """Over a field: degree → dim Hⁱ (rank–nullity)."""

    if not c.ring.is_field:
        raise UnsupportedRingError("field_dimensions", "a field", c.ring)
    ranks: Dict[int, int] = {}
    for degree in range(c.min_deg - 1, c.max_deg + 1):
        ranks[degree] = matrix_rank(c.differential(degree))
    return {
        degree: c.rank(degree) - ranks[degree] - ranks[degree - 1] for degree in c.degrees()
    }


def is_acyclic(c: ChainComplex, report: Optional[CohomologyReport] = None) -> bool:
    report = report or cohomology(c)
    return not report.nonzero()
