"""Seeded scrambling of direct sums with a known decomposition.

All randomness flows through an explicit :class:`random.Random` built from
the caller's seed, so a ``(plan, seed, ops)`` triple always reproduces the
same complex.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from ..complexes import ChainComplex, conjugate, direct_sum, validate
from ..errors import InvalidComplexError, UnsupportedRingError
from ..rings import Matrix, RingDescriptor, RingElement, RingKind
from .families import two_term

LOGGER = logging.getLogger(__name__)

DEFAULT_OPS = 8
DEFAULT_COEFFICIENT_BOUND = 2


class SummandKind(str, Enum):
    FREE = "free"
    CYCLIC = "cyclic"


@dataclass(frozen=True)
class PlannedSummand:
    """One planted piece: ``R`` at ``end_degree`` or ``R --d--> R`` ending there."""

    end_degree: int
    kind: SummandKind
    d: Optional[RingElement] = None

    def __post_init__(self) -> None:
        if self.kind is SummandKind.FREE and self.d is not None:
            raise ValueError("free summands do not carry a differential")
        if self.kind is SummandKind.CYCLIC:
            if self.d is None:
                raise ValueError("cyclic summands need a differential, e.g. (0, c6)")
            if self.d.is_zero or self.d.is_unit():
                raise ValueError(
                    f"cyclic summands need a nonzero non-unit d, got {self.d} over {self.d.ring}"
                )

    @classmethod
    def free(cls, end_degree: int) -> "PlannedSummand":
        return cls(end_degree, SummandKind.FREE)

    @classmethod
    def cyclic(cls, end_degree: int, d: RingElement) -> "PlannedSummand":
        return cls(end_degree, SummandKind.CYCLIC, d)

    def to_complex(self, ring: RingDescriptor) -> ChainComplex:
        if self.kind is SummandKind.FREE:
            return ChainComplex.single(ring, self.end_degree, 1)
        assert self.d is not None
        return two_term(ring, self.end_degree, self.d)

    def __str__(self) -> str:
        if self.kind is SummandKind.FREE:
            return f"({self.end_degree}, free)"
        return f"({self.end_degree}, cyclic {self.d})"


@dataclass(frozen=True)
class PlantedDecomposition:
    ring: RingDescriptor
    summands: Tuple[PlannedSummand, ...]
    scramble_seed: int
    ops: int
    complex: ChainComplex

    def unscrambled(self) -> ChainComplex:
        return planned_sum(self.ring, self.summands)


def planned_sum(ring: RingDescriptor, summands: Sequence[PlannedSummand]) -> ChainComplex:
    """Block-diagonal direct sum of the planted pieces, in plan order."""

    total = ChainComplex.empty(ring)
    for summand in summands:
        total = direct_sum(total, summand.to_complex(ring))
    return total


# Random elements and unimodular matrices --------------------------------------------


def random_coefficient(ring: RingDescriptor, rng: random.Random, bound: int) -> RingElement:
    """Nonzero element with small integer coefficients (constant plus linear terms)."""

    if bound < 1:
        raise ValueError(f"coefficient bound must be a positive integer, got {bound}")
    while True:
        value = RingElement.of(ring, rng.randint(-bound, bound))
        if ring.is_polynomial:
            for index in range(ring.num_vars or 1):
                value = value + RingElement.variable(ring, index) * rng.randint(-bound, bound)
        if not value.is_zero:
            return value


def random_unimodular(
    ring: RingDescriptor, size: int, rng: random.Random, ops: int, bound: int
) -> Tuple[Matrix, Matrix]:
    """Product of ``ops`` elementary matrices, returned with its inverse.

    Each step is a transvection, a swap or a sign flip; the inverse is updated
    with the inverse operation on columns.
    """

    forward = Matrix.identity(ring, size).to_lists()
    backward = Matrix.identity(ring, size).to_lists()
    for _ in range(ops):
        if size == 0:
            break
        op = rng.choice(("add", "add", "swap", "negate")) if size > 1 else "negate"
        if op == "negate":
            i = rng.randrange(size)
            forward[i] = [-entry for entry in forward[i]]
            for row in backward:
                row[i] = -row[i]
            continue
        i, j = rng.sample(range(size), 2)
        if op == "swap":
            forward[i], forward[j] = forward[j], forward[i]
            for row in backward:
                row[i], row[j] = row[j], row[i]
            continue
        c = random_coefficient(ring, rng, bound)
        forward[i] = [a + c * b for a, b in zip(forward[i], forward[j])]
        for row in backward:
            row[j] = row[j] - c * row[i]
    return Matrix.from_lists(ring, forward, size), Matrix.from_lists(ring, backward, size)


def scramble(
    c: ChainComplex,
    seed: int,
    *,
    ops: int = DEFAULT_OPS,
    coefficient_bound: int = DEFAULT_COEFFICIENT_BOUND,
) -> ChainComplex:
    """Conjugate every degree of ``c`` by a seeded random invertible matrix."""

    rng = random.Random(seed)
    changes: Dict[int, Tuple[Matrix, Matrix]] = {}
    for degree in c.degrees():
        changes[degree] = random_unimodular(c.ring, c.rank(degree), rng, ops, coefficient_bound)
    return conjugate(c, changes)


def scrambled_sum(
    ring: RingDescriptor,
    plan: Sequence[PlannedSummand],
    seed: int,
    *,
    ops: int = DEFAULT_OPS,
    coefficient_bound: int = DEFAULT_COEFFICIENT_BOUND,
) -> PlantedDecomposition:
    """Direct sum of the planned pieces, scrambled degreewise from ``seed``."""

    if not ring.supports_smith_form:
        raise UnsupportedRingError("scrambled_sum", "a principal ideal domain", ring)
    if not plan:
        raise ValueError("plan must name at least one summand, e.g. (0,c2)")
    for summand in plan:
        if summand.d is not None and summand.d.ring != ring:
            raise ValueError(f"planned d = {summand.d} belongs to {summand.d.ring}, not {ring}")

    scrambled = scramble(
        planned_sum(ring, plan), seed, ops=ops, coefficient_bound=coefficient_bound
    )
    verdict = validate(scrambled)
    if not verdict:
        raise InvalidComplexError(verdict)
    LOGGER.debug(
        "Scrambled %d summands over %s with seed %s: ranks %s",
        len(plan),
        ring,
        seed,
        scrambled.rank_vector(),
    )
    return PlantedDecomposition(ring, tuple(plan), seed, ops, scrambled)


# Random plans for the Dedekind harness ----------------------------------------------


def random_torsion_element(
    ring: RingDescriptor, rng: random.Random, max_abs_d: int, max_poly_degree: int
) -> RingElement:
    """A nonzero non-unit: ``2..max_abs_d`` up to sign over ℤ, a monic polynomial over k[x]."""

    if ring.kind is RingKind.INTEGERS:
        if max_abs_d < 2:
            raise ValueError(f"max_abs_d must be at least 2, got {max_abs_d}")
        return RingElement.of(ring, rng.randint(2, max_abs_d) * rng.choice((1, -1)))
    if ring.kind is RingKind.UNIVARIATE_POLY:
        assert ring.base is not None
        if max_poly_degree < 1:
            raise ValueError(f"max_poly_degree must be at least 1, got {max_poly_degree}")
        x = RingElement.variable(ring)
        degree = rng.randint(1, max_poly_degree)
        value = x**degree
        span = ring.base.prime if ring.base.prime is not None else max_abs_d
        for power in range(degree):
            value = value + x**power * rng.randrange(span)
        return value
    raise UnsupportedRingError("random plans", "integers or a univariate polynomial ring", ring)


def random_plan(
    ring: RingDescriptor,
    rng: random.Random,
    *,
    max_rank: int,
    degree_span: int,
    max_abs_d: int,
    max_poly_degree: int,
) -> List[PlannedSummand]:
    """Up to ``max_rank`` pieces ending in degrees ``0..degree_span − 1``.

    Each piece adds at most 1 to the rank of any degree, so ranks stay within
    ``max_rank``.
    """

    plan: List[PlannedSummand] = []
    for _ in range(rng.randint(1, max_rank)):
        end_degree = rng.randrange(degree_span)
        if rng.random() < 1 / 3:
            plan.append(PlannedSummand.free(end_degree))
        else:
            d = random_torsion_element(ring, rng, max_abs_d, max_poly_degree)
            plan.append(PlannedSummand.cyclic(end_degree, d))
    return plan
