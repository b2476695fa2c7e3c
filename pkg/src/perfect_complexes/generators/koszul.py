"""Koszul complexes and their iterated variants over polynomial rings.

The designated regular sequence is the list of variables ``x₁..xₙ``. The
basis of ``K^{-p} = ⋀ᵖ Aⁿ`` is the wedge monomials ``e_{i₁}∧…∧e_{i_p}``
with ``i₁ < … < i_p`` in lexicographic order.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from itertools import combinations, product
from typing import Dict, List, Tuple

from ..complexes import ChainComplex, ChainMap, shift
from ..errors import UnsupportedRingError
from ..rings import Matrix, RingDescriptor, RingElement, RingKind

LOGGER = logging.getLogger(__name__)

Subset = Tuple[int, ...]


def _require_localized(ring: RingDescriptor, operation: str, min_vars: int = 1) -> int:
    if ring.kind is not RingKind.LOCALIZED_POLY:
        raise UnsupportedRingError(operation, "a localized polynomial ring", ring)
    assert ring.num_vars is not None
    if ring.num_vars < min_vars:
        raise UnsupportedRingError(operation, f"at least {min_vars} variables", ring)
    return ring.num_vars


def _require_polynomial(ring: RingDescriptor, operation: str) -> int:
    if not ring.is_polynomial:
        raise UnsupportedRingError(operation, "a polynomial ring", ring)
    assert ring.num_vars is not None
    return ring.num_vars


def _variables(ring: RingDescriptor) -> List[RingElement]:
    assert ring.num_vars is not None
    return [RingElement.variable(ring, i) for i in range(ring.num_vars)]


def _wedge_basis(n: int, p: int) -> List[Subset]:
    return list(combinations(range(n), p))


def koszul_differential(ring: RingDescriptor, p: int) -> Matrix:
    """``K^{-p} → K^{-p+1}``: contraction against ``(x₁..xₙ)`` with alternating signs."""

    n = _require_polynomial(ring, "koszul")
    xs = _variables(ring)
    source = _wedge_basis(n, p)
    target = _wedge_basis(n, p - 1)
    index: Dict[Subset, int] = {subset: i for i, subset in enumerate(target)}
    zero = RingElement.zero(ring)
    rows = [[zero] * len(source) for _ in target]
    for col, subset in enumerate(source):
        for k, i in enumerate(subset):
            rest = subset[:k] + subset[k + 1 :]
            term = xs[i] if k % 2 == 0 else -xs[i]
            rows[index[rest]][col] = rows[index[rest]][col] + term
    return Matrix.from_lists(ring, rows, len(source))


def koszul(ring: RingDescriptor) -> ChainComplex:
    """``K•(x₁..xₙ)`` in degrees ``−n..0``."""

    n = _require_polynomial(ring, "koszul")
    diffs = [koszul_differential(ring, p) for p in range(n, 0, -1)]
    return ChainComplex.from_differentials(ring, -n, diffs)


def glue_matrix(ring: RingDescriptor, signs: Tuple[int, ...]) -> Matrix:
    """``K^{-1} → K^{-n+1}``: ``e_i ↦ Σ_j σ_j x_i x_j · e₁∧…∧ê_j∧…∧eₙ``."""

    n = _require_localized(ring, "glue_matrix", min_vars=2)
    xs = _variables(ring)
    target = _wedge_basis(n, n - 1)
    index = {subset: i for i, subset in enumerate(target)}
    zero = RingElement.zero(ring)
    rows = [[zero] * n for _ in target]
    for i in range(n):
        for j in range(n):
            missing_j = tuple(k for k in range(n) if k != j)
            rows[index[missing_j]][i] = xs[i] * xs[j] * signs[j]
    return Matrix.from_lists(ring, rows, n)


@lru_cache(maxsize=None)
def glue_signs(ring: RingDescriptor) -> Tuple[int, ...]:
    """First sign vector (in ``product((1, -1))`` order) making both compositions vanish."""

    n = _require_localized(ring, "glue_signs", min_vars=2)
    before = koszul_differential(ring, 2)
    after = koszul_differential(ring, n - 1)
    for signs in product((1, -1), repeat=n):
        glue = glue_matrix(ring, signs)
        if (glue @ before).is_zero() and (after @ glue).is_zero():
            LOGGER.debug("Glue signs for %s: %s", ring, signs)
            return signs
    raise RuntimeError(f"no sign vector makes the iterated Koszul complex over {ring} a complex")


def multi_iterated_koszul(ring: RingDescriptor, m: int) -> ChainComplex:
    """``m`` glue junctions joining ``m + 1`` truncated Koszul segments.

    The leftmost segment is ``K^{-n} → … → K^{-1}``, middle segments are
    ``K^{-n+1} → … → K^{-1}`` and the rightmost is ``K^{-n+1} → … → K^0``;
    consecutive segments are joined by :func:`glue_matrix`. The total length
    is ``2n − 1 + (m − 1)(n − 1)``.
    """

    n = _require_localized(ring, "multi_iterated_koszul", min_vars=2)
    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")
    glue = glue_matrix(ring, glue_signs(ring))
    diffs: List[Matrix] = [koszul_differential(ring, p) for p in range(n, 1, -1)]
    diffs.append(glue)
    for _ in range(m - 1):
        diffs.extend(koszul_differential(ring, p) for p in range(n - 1, 1, -1))
        diffs.append(glue)
    diffs.extend(koszul_differential(ring, p) for p in range(n - 1, 0, -1))
    return ChainComplex.from_differentials(ring, -len(diffs), diffs)


def iterated_koszul(ring: RingDescriptor) -> ChainComplex:
    """The cone of ``K[−n] → K`` with its acyclic two-term piece divided out."""

    return multi_iterated_koszul(ring, 1)


def koszul_cone_map(ring: RingDescriptor) -> ChainMap:
    """``h : K[−n] → K`` through ``K^{-n} ≅ A ≅ K^0``."""

    n = _require_polynomial(ring, "koszul_cone_map")
    k = koszul(ring)
    source = shift(k, -n)
    return ChainMap(source, k, {0: Matrix.identity(ring, 1)})
