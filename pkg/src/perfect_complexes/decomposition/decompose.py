"""Decomposition of complexes over principal ideal domains.

Over a hereditary ring every complex is quasi-isomorphic to its cohomology,
so the summands are read off degreewise: ``H^i ≅ R^f ⊕ ⨁ R/(d)`` gives a
free summand of rank ``f`` at degree ``i`` and one two-term piece
``R --d--> R`` ending at ``i`` for every invariant factor ``d``.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, replace
from enum import Enum
from typing import Dict, Iterable, List, Optional, Tuple

from sympy import factorint

from ..complexes import ChainComplex, cohomology, direct_sum, validate
from ..errors import FactorizationUnsupportedError, InvalidComplexError, UnsupportedRingError
from ..generators import PlantedDecomposition, SummandKind, two_term
from ..rings import RingDescriptor, RingElement, RingKind

LOGGER = logging.getLogger(__name__)


class RefinementLevel(str, Enum):
    INVARIANT_FACTOR = "invariant_factor"
    PRIMARY = "primary"


@dataclass(frozen=True)
class Summand:
    """``R^rank`` at ``end_degree`` (free) or ``R --d--> R`` ending there (cyclic)."""

    end_degree: int
    kind: SummandKind
    rank: int = 1
    d: Optional[RingElement] = None

    @classmethod
    def free(cls, end_degree: int, rank: int = 1) -> "Summand":
        if rank < 1:
            raise ValueError(f"free summands need a positive rank, got {rank}")
        return cls(end_degree, SummandKind.FREE, rank)

    @classmethod
    def cyclic(cls, end_degree: int, d: RingElement) -> "Summand":
        if d.is_zero or d.is_unit():
            raise ValueError(f"cyclic summands need a nonzero non-unit, got {d}")
        return cls(end_degree, SummandKind.CYCLIC, 1, d.canonical())

    @property
    def length(self) -> int:
        return 0 if self.kind is SummandKind.FREE else 1

    def to_complex(self, ring: RingDescriptor) -> ChainComplex:
        if self.kind is SummandKind.FREE:
            return ChainComplex.single(ring, self.end_degree, self.rank)
        assert self.d is not None
        return two_term(ring, self.end_degree, self.d)

    def sort_key(self) -> Tuple[int, str, int, str]:
        return (self.end_degree, self.kind.value, self.rank, str(self.d))

    def __str__(self) -> str:
        if self.kind is SummandKind.FREE:
            return f"({self.end_degree}, free {self.rank})"
        return f"({self.end_degree}, cyclic {self.d})"


@dataclass(frozen=True)
class DecompositionReport:
    ring: RingDescriptor
    summands: Tuple[Summand, ...]
    refinement_level: RefinementLevel = RefinementLevel.INVARIANT_FACTOR

    @classmethod
    def of(
        cls,
        ring: RingDescriptor,
        summands: Iterable[Summand],
        refinement_level: RefinementLevel = RefinementLevel.INVARIANT_FACTOR,
    ) -> "DecompositionReport":
        """Build a report with summands in canonical order."""

        return cls(ring, tuple(sorted(summands, key=Summand.sort_key)), refinement_level)

    @property
    def is_empty(self) -> bool:
        return not self.summands

    def multiset(self) -> Counter:
        return Counter(self.summands)

    def same_summands(self, other: "DecompositionReport") -> bool:
        return self.ring == other.ring and self.multiset() == other.multiset()

    def shifted(self, k: int) -> "DecompositionReport":
        """The report of ``c[k]`` given the report of ``c``."""

        return DecompositionReport.of(
            self.ring,
            (replace(s, end_degree=s.end_degree - k) for s in self.summands),
            self.refinement_level,
        )

    def __str__(self) -> str:
        if not self.summands:
            return f"no summands ({self.refinement_level.value})"
        body = ", ".join(str(s) for s in self.summands)
        return f"{body} ({self.refinement_level.value})"


def decompose(c: ChainComplex) -> DecompositionReport:
    """Summands of length ≤ 1 whose direct sum is quasi-isomorphic to ``c``."""

    if not c.ring.supports_smith_form:
        raise UnsupportedRingError("decompose", "a principal ideal domain", c.ring)
    verdict = validate(c)
    if not verdict:
        raise InvalidComplexError(verdict)

    summands: List[Summand] = []
    for item in cohomology(c).degrees:
        if item.free_rank:
            summands.append(Summand.free(item.degree, item.free_rank))
        summands.extend(Summand.cyclic(item.degree, d) for d in item.invariant_factors)
    report = DecompositionReport.of(c.ring, summands)
    LOGGER.info("Decomposed complex over %s into %d summands", c.ring, len(report.summands))
    return report


def _prime_power_parts(ring: RingDescriptor, d: RingElement) -> List[RingElement]:
    if ring.kind is RingKind.INTEGERS:
        return [RingElement.of(ring, p**e) for p, e in sorted(factorint(abs(d.value)).items())]
    if ring.kind is RingKind.UNIVARIATE_POLY:
        assert ring.base is not None
        if ring.base.kind is not RingKind.PRIME_FIELD:
            raise FactorizationUnsupportedError(
                f"primary refinement over {ring} needs factorization over {ring.base}, "
                "which is not supported; the report stays at the invariant-factor level"
            )
        _, factors = d.value.factor_list()
        return [RingElement(ring, f**e).canonical() for f, e in factors]
    if ring.is_dvr or ring.is_field:
        # the canonical associate is already a power of the uniformizer
        return [d]
    raise UnsupportedRingError("primary_refine", "a principal ideal domain", ring)


def primary_refine(report: DecompositionReport) -> DecompositionReport:
    """Split every cyclic ``R/(d)`` into its primary parts ``R/(pᵉ)``."""

    if report.refinement_level is RefinementLevel.PRIMARY:
        return report
    summands: List[Summand] = []
    for summand in report.summands:
        if summand.kind is SummandKind.FREE:
            summands.append(summand)
            continue
        assert summand.d is not None
        parts = _prime_power_parts(report.ring, summand.d)
        summands.extend(Summand.cyclic(summand.end_degree, q) for q in parts)
    LOGGER.debug(
        "Primary refinement over %s: %d -> %d summands",
        report.ring,
        len(report.summands),
        len(summands),
    )
    return DecompositionReport.of(report.ring, summands, RefinementLevel.PRIMARY)


def audit_width(report: DecompositionReport) -> Optional[int]:
    """Largest summand length: 0 all free, 1 with torsion, None for no summands."""

    if report.is_empty:
        return None
    return max(summand.length for summand in report.summands)


def report_to_complex(report: DecompositionReport) -> ChainComplex:
    """Direct sum of the summand complexes (the formal model of the input)."""

    total = ChainComplex.empty(report.ring)
    for summand in report.summands:
        total = direct_sum(total, summand.to_complex(report.ring))
    return total


def planted_report(planted: PlantedDecomposition, refine: bool = True) -> DecompositionReport:
    """The report the planted summands describe, free ranks merged per degree."""

    free: Dict[int, int] = {}
    summands: List[Summand] = []
    for piece in planted.summands:
        if piece.kind is SummandKind.FREE:
            free[piece.end_degree] = free.get(piece.end_degree, 0) + 1
        else:
            assert piece.d is not None
            summands.append(Summand.cyclic(piece.end_degree, piece.d))
    summands.extend(Summand.free(degree, rank) for degree, rank in free.items())
    report = DecompositionReport.of(planted.ring, summands)
    return primary_refine(report) if refine else report
