"""The truncated family ``𝔽ₙ`` and small acyclic building blocks."""

from __future__ import annotations

from typing import Union

from ..complexes import ChainComplex
from ..errors import UnsupportedRingError
from ..rings import Matrix, RingDescriptor, RingElement, RingKind


def f_n(ring: RingDescriptor, n: int) -> ChainComplex:
    """Length-``n`` complex ``A² → A² → … → A² → A`` in degrees ``−n..0``.

    Interior differentials are ``D = [[xy, y²], [−x², −xy]]`` and the last one
    is ``[x, y]``. Both ``D·D`` and ``[x, y]·D`` vanish, and every entry lies in
    the maximal ideal, so the complex is minimal.
    """

    if ring.kind is not RingKind.LOCALIZED_POLY or (ring.num_vars or 0) < 2:
        raise UnsupportedRingError("f_n", "a localized polynomial ring in 2 variables", ring)
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    x = RingElement.variable(ring, 0)
    y = RingElement.variable(ring, 1)
    interior = Matrix.from_rows(ring, [[x * y, y * y], [-(x * x), -(x * y)]])
    final = Matrix.from_rows(ring, [[x, y]])
    return ChainComplex.from_differentials(ring, -n, [interior] * (n - 1) + [final])


def two_term(
    ring: RingDescriptor, end_degree: int, d: Union[RingElement, int]
) -> ChainComplex:
    """``0 → R --d--> R → 0`` in degrees ``end_degree − 1`` and ``end_degree``."""

    return ChainComplex.from_differentials(ring, end_degree - 1, [Matrix.from_rows(ring, [[d]])])


def acyclic_pair(
    ring: RingDescriptor, degree: int, unit: Union[RingElement, int] = 1
) -> ChainComplex:
    """Two-term complex with a unit differential ending at ``degree``; it is acyclic."""

    value = RingElement.of(ring, unit)
    if not value.is_unit():
        raise ValueError(f"acyclic_pair needs a unit differential, got {value}")
    return two_term(ring, degree, value)
