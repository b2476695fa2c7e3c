"""Graded pieces 𝔪ˢ/𝔪ˢ⁺¹ of a localized polynomial ring."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Tuple

from ..errors import UnsupportedRingError, ValuationError
from .descriptor import RingDescriptor, RingKind
from .elements import LocalizedPolyArithmetic, RingElement, arithmetic

Monomial = Tuple[int, ...]


@lru_cache(maxsize=None)
def _degree_monomials(num_vars: int, s: int) -> Tuple[Monomial, ...]:
    monomials = set()
    for picks in combinations_with_replacement(range(num_vars), s):
        exponents = [0] * num_vars
        for index in picks:
            exponents[index] += 1
        monomials.add(tuple(exponents))
    # x² > xy > y² : descending exponent vectors are the lexicographic order on words.
    return tuple(sorted(monomials, reverse=True))


@dataclass(frozen=True)
class MaximalIdealFiltration:
    """Residue basis of 𝔪ˢ/𝔪ˢ⁺¹: the degree-``s`` monomials in lexicographic order."""

    ring: RingDescriptor
    s: int
    basis: Tuple[Monomial, ...]

    @classmethod
    def build(cls, ring: RingDescriptor, s: int) -> "MaximalIdealFiltration":
        if ring.kind is not RingKind.LOCALIZED_POLY:
            raise UnsupportedRingError("the 𝔪-adic filtration", "a localized polynomial ring", ring)
        if s < 1:
            raise ValueError(f"s must be a positive integer, got {s}")
        assert ring.num_vars is not None
        basis = _degree_monomials(ring.num_vars, s)
        assert len(basis) == comb(s + ring.num_vars - 1, ring.num_vars - 1)
        return cls(ring=ring, s=s, basis=basis)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def leading_form(self, a: RingElement) -> Tuple[RingElement, ...]:
        return leading_form(a, self.s, self)


def leading_form(
    a: RingElement, s: int, filt: MaximalIdealFiltration
) -> Tuple[RingElement, ...]:
    """Class of ``a`` in 𝔪ˢ/𝔪ˢ⁺¹ as residue-field coordinates in ``filt.basis``.

    The stored denominator has constant term 1, so the class is the
    degree-``s`` part of the numerator.
    """

    if a.ring != filt.ring or filt.s != s:
        raise ValueError(f"filtration is for s={filt.s} over {filt.ring}, not s={s} over {a.ring}")
    if a.valuation() < s:
        raise ValuationError(f"{a} has valuation {a.valuation()} < {s}")
    ops = arithmetic(a.ring)
    assert isinstance(ops, LocalizedPolyArithmetic)
    part = ops.homogeneous_part(a.value, s)
    field = a.ring.residue_field
    return tuple(RingElement.of(field, part.get(monom, 0)) for monom in filt.basis)
