"""Descriptors for the supported coefficient rings."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional

from sympy import isprime


class RingKind(str, Enum):
    RATIONALS = "rationals"
    PRIME_FIELD = "prime_field"
    INTEGERS = "integers"
    UNIVARIATE_POLY = "univariate_poly"
    LOCALIZED_POLY = "localized_poly"
    LOCALIZED_INTEGERS = "localized_integers"


_FIELDS = {RingKind.RATIONALS, RingKind.PRIME_FIELD}
_PIDS = _FIELDS | {RingKind.INTEGERS, RingKind.UNIVARIATE_POLY, RingKind.LOCALIZED_INTEGERS}
_LOCAL = _FIELDS | {RingKind.LOCALIZED_POLY, RingKind.LOCALIZED_INTEGERS}


@dataclass(frozen=True)
class RingDescriptor:
    """Tagged record naming one of the supported rings.

    ``prime`` is set for prime fields and for ℤ localized at (p); ``base`` is
    the coefficient field of the polynomial kinds; ``num_vars`` is the number
    of variables of a localized polynomial ring (always 1 for ``UNIVARIATE_POLY``).
    """

    kind: RingKind
    prime: Optional[int] = None
    base: Optional["RingDescriptor"] = None
    num_vars: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind in {RingKind.PRIME_FIELD, RingKind.LOCALIZED_INTEGERS}:
            if self.prime is None or not isprime(self.prime):
                raise ValueError(f"{self.kind.value} needs a prime, got {self.prime!r}")
        elif self.prime is not None:
            raise ValueError(f"{self.kind.value} does not take a prime")

        if self.kind in {RingKind.UNIVARIATE_POLY, RingKind.LOCALIZED_POLY}:
            if self.base is None or not self.base.is_field:
                raise ValueError("polynomial rings need a base of Rationals or PrimeField")
        elif self.base is not None:
            raise ValueError(f"{self.kind.value} does not take a base ring")

        if self.kind is RingKind.LOCALIZED_POLY:
            if self.num_vars is None or self.num_vars < 1:
                raise ValueError("num_vars must be a positive integer for LocalizedPoly")
        elif self.kind is RingKind.UNIVARIATE_POLY:
            if self.num_vars not in (None, 1):
                raise ValueError("UnivariatePoly has exactly one variable")
            object.__setattr__(self, "num_vars", 1)
        elif self.num_vars is not None:
            raise ValueError(f"{self.kind.value} does not take num_vars")

    # Constructors -----------------------------------------------------------------

    @classmethod
    def rationals(cls) -> "RingDescriptor":
        return cls(RingKind.RATIONALS)

    @classmethod
    def prime_field(cls, p: int) -> "RingDescriptor":
        return cls(RingKind.PRIME_FIELD, prime=p)

    @classmethod
    def integers(cls) -> "RingDescriptor":
        return cls(RingKind.INTEGERS)

    @classmethod
    def univariate_poly(cls, base: "RingDescriptor") -> "RingDescriptor":
        return cls(RingKind.UNIVARIATE_POLY, base=base)

    @classmethod
    def localized_poly(cls, base: "RingDescriptor", num_vars: int) -> "RingDescriptor":
        return cls(RingKind.LOCALIZED_POLY, base=base, num_vars=num_vars)

    @classmethod
    def localized_integers(cls, p: int) -> "RingDescriptor":
        return cls(RingKind.LOCALIZED_INTEGERS, prime=p)

    # Classification ---------------------------------------------------------------

    @property
    def is_field(self) -> bool:
        return self.kind in _FIELDS

    @property
    def is_pid(self) -> bool:
        return self.kind in _PIDS

    @property
    def is_local(self) -> bool:
        return self.kind in _LOCAL

    @property
    def is_dvr(self) -> bool:
        """ℤ_(p) and k[x]_(x): local PIDs with a single nonzero prime."""

        return self.kind is RingKind.LOCALIZED_INTEGERS or (
            self.kind is RingKind.LOCALIZED_POLY and self.num_vars == 1
        )

    @property
    def supports_smith_form(self) -> bool:
        return self.is_pid or self.is_dvr

    @property
    def is_polynomial(self) -> bool:
        return self.kind in {RingKind.UNIVARIATE_POLY, RingKind.LOCALIZED_POLY}

    @property
    def residue_field(self) -> "RingDescriptor":
        if self.is_field:
            return self
        if self.kind is RingKind.LOCALIZED_POLY:
            assert self.base is not None
            return self.base
        if self.kind is RingKind.LOCALIZED_INTEGERS:
            assert self.prime is not None
            return RingDescriptor.prime_field(self.prime)
        raise ValueError(f"{self} is not local and has no residue field")

    @property
    def variable_names(self) -> tuple[str, ...]:
        if not self.is_polynomial:
            return ()
        n = self.num_vars or 1
        if n <= 3:
            return ("x", "y", "z")[:n]
        return tuple(f"x{i}" for i in range(1, n + 1))

    # Encoding ---------------------------------------------------------------------

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"kind": self.kind.value}
        if self.prime is not None:
            data["p"] = self.prime
        if self.base is not None:
            data["base"] = self.base.to_dict()
        if self.kind is RingKind.LOCALIZED_POLY:
            data["num_vars"] = self.num_vars
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RingDescriptor":
        kind = RingKind(data["kind"])
        base = cls.from_dict(data["base"]) if "base" in data else None
        num_vars = data.get("num_vars") if kind is RingKind.LOCALIZED_POLY else None
        return cls(kind, prime=data.get("p"), base=base, num_vars=num_vars)

    def __str__(self) -> str:
        if self.kind is RingKind.RATIONALS:
            return "q"
        if self.kind is RingKind.PRIME_FIELD:
            return f"gf:{self.prime}"
        if self.kind is RingKind.INTEGERS:
            return "int"
        if self.kind is RingKind.UNIVARIATE_POLY:
            return f"{self.base}[x]"
        if self.kind is RingKind.LOCALIZED_POLY:
            return f"{self.base}-local:{self.num_vars}"
        return f"int-local:{self.prime}"
