"""Exact elements of the supported rings.

Every ring kind has an arithmetic backend that works on raw canonical values
(``int``, ``Fraction``, sympy ``PolyElement`` or a ``(num, den)`` pair of
them). :class:`RingElement` wraps a raw value together with its ring and
exposes ordinary Python operators.
"""

from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, List, Tuple, Union

from sympy import SympifyError, fraction, sympify, together
from sympy.polys.domains import GF, QQ
from sympy.polys.polyerrors import CoercionFailed
from sympy.polys.rings import PolyElement, PolyRing

from ..errors import (
    NotAUnitError,
    ParseError,
    RingMismatchError,
    UnsupportedRingError,
)
from .descriptor import RingDescriptor, RingKind

Valuation = Union[int, float]
INFINITY = math.inf


class Arithmetic(ABC):
    """Raw-value arithmetic for one ring."""

    def __init__(self, ring: RingDescriptor) -> None:
        self.ring = ring

    zero: Any
    one: Any

    @abstractmethod
    def from_int(self, n: int) -> Any: ...

    @abstractmethod
    def add(self, a: Any, b: Any) -> Any: ...

    @abstractmethod
    def mul(self, a: Any, b: Any) -> Any: ...

    @abstractmethod
    def neg(self, a: Any) -> Any: ...

    def sub(self, a: Any, b: Any) -> Any:
        return self.add(a, self.neg(b))

    def is_zero(self, a: Any) -> bool:
        return a == self.zero

    @abstractmethod
    def is_unit(self, a: Any) -> bool: ...

    @abstractmethod
    def inverse(self, a: Any) -> Any:
        """Inverse of a unit; callers check :meth:`is_unit` first."""

    def valuation(self, a: Any) -> Valuation:
        raise UnsupportedRingError("valuation", "a local ring", self.ring)

    def residue(self, a: Any) -> Any:
        raise UnsupportedRingError("residue", "a local ring", self.ring)

    def euclid_norm(self, a: Any) -> int:
        raise UnsupportedRingError("Euclidean division", "a principal ideal domain", self.ring)

    def divmod(self, a: Any, b: Any) -> Tuple[Any, Any]:
        raise UnsupportedRingError("Euclidean division", "a principal ideal domain", self.ring)

    def normal_unit(self, a: Any) -> Any:
        """A unit ``u`` such that ``u * a`` is the canonical associate of ``a``."""

        raise UnsupportedRingError("canonical associates", "a principal ideal domain", self.ring)

    @abstractmethod
    def to_json(self, a: Any) -> Any: ...

    @abstractmethod
    def from_json(self, data: Any) -> Any: ...

    @abstractmethod
    def format(self, a: Any) -> str: ...

    @abstractmethod
    def parse(self, text: str) -> Any: ...


# Scalar rings -----------------------------------------------------------------------


class IntegerArithmetic(Arithmetic):
    zero = 0
    one = 1

    def from_int(self, n: int) -> int:
        return int(n)

    def add(self, a: int, b: int) -> int:
        return a + b

    def mul(self, a: int, b: int) -> int:
        return a * b

    def neg(self, a: int) -> int:
        return -a

    def is_unit(self, a: int) -> bool:
        return a in (1, -1)

    def inverse(self, a: int) -> int:
        return a

    def euclid_norm(self, a: int) -> int:
        return abs(a)

    def divmod(self, a: int, b: int) -> Tuple[int, int]:
        return divmod(a, b)

    def normal_unit(self, a: int) -> int:
        return -1 if a < 0 else 1

    def to_json(self, a: int) -> str:
        return str(a)

    def from_json(self, data: Any) -> int:
        if isinstance(data, bool) or not isinstance(data, (int, str)):
            raise ParseError(f"integer entries are decimal strings, got {data!r}")
        try:
            return int(data)
        except ValueError as exc:
            raise ParseError(f"not an integer: {data!r}") from exc

    def format(self, a: int) -> str:
        return str(a)

    def parse(self, text: str) -> int:
        return self.from_json(text.strip())


class RationalArithmetic(Arithmetic):
    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def add(self, a: Fraction, b: Fraction) -> Fraction:
        return a + b

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def neg(self, a: Fraction) -> Fraction:
        return -a

    def is_unit(self, a: Fraction) -> bool:
        return a != 0

    def inverse(self, a: Fraction) -> Fraction:
        return 1 / a

    def residue(self, a: Fraction) -> Fraction:
        return a

    def euclid_norm(self, a: Fraction) -> int:
        return 0

    def divmod(self, a: Fraction, b: Fraction) -> Tuple[Fraction, Fraction]:
        return a / b, self.zero

    def normal_unit(self, a: Fraction) -> Fraction:
        return 1 / a if a else self.one

    def to_domain(self, a: Fraction) -> Any:
        return QQ(a.numerator, a.denominator)

    def from_domain(self, c: Any) -> Fraction:
        return Fraction(int(c.numerator), int(c.denominator))

    @property
    def domain(self) -> Any:
        return QQ

    def to_json(self, a: Fraction) -> str:
        return str(a)

    def from_json(self, data: Any) -> Fraction:
        if isinstance(data, bool) or not isinstance(data, (int, str)):
            raise ParseError(f"rational entries are strings 'a/b', got {data!r}")
        try:
            return Fraction(data)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational number: {data!r}") from exc

    def format(self, a: Fraction) -> str:
        return str(a)

    def parse(self, text: str) -> Fraction:
        return self.from_json(text.strip())


class PrimeFieldArithmetic(Arithmetic):
    zero = 0
    one = 1

    def __init__(self, ring: RingDescriptor) -> None:
        super().__init__(ring)
        assert ring.prime is not None
        self.p = ring.prime
        self._domain = GF(self.p)

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def is_unit(self, a: int) -> bool:
        return a != 0

    def inverse(self, a: int) -> int:
        return pow(a, -1, self.p)

    def residue(self, a: int) -> int:
        return a

    def euclid_norm(self, a: int) -> int:
        return 0

    def divmod(self, a: int, b: int) -> Tuple[int, int]:
        return self.mul(a, self.inverse(b)), 0

    def normal_unit(self, a: int) -> int:
        return self.inverse(a) if a else 1

    def to_domain(self, a: int) -> Any:
        return self._domain(a)

    def from_domain(self, c: Any) -> int:
        return int(c) % self.p

    @property
    def domain(self) -> Any:
        return self._domain

    def to_json(self, a: int) -> str:
        return str(a)

    def from_json(self, data: Any) -> int:
        if isinstance(data, bool) or not isinstance(data, (int, str)):
            raise ParseError(f"residues are decimal strings, got {data!r}")
        try:
            value = Fraction(data)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a residue mod {self.p}: {data!r}") from exc
        if value.denominator % self.p == 0:
            raise ParseError(f"{data!r} has no residue mod {self.p}")
        return self.mul(value.numerator % self.p, self.inverse(value.denominator % self.p))

    def format(self, a: int) -> str:
        return str(a)

    def parse(self, text: str) -> int:
        return self.from_json(text.strip())


def _p_adic_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


class LocalizedIntegerArithmetic(Arithmetic):
    """ℤ localized at (p): fractions whose reduced denominator is coprime to p."""

    zero = Fraction(0)
    one = Fraction(1)

    def __init__(self, ring: RingDescriptor) -> None:
        super().__init__(ring)
        assert ring.prime is not None
        self.p = ring.prime

    def _checked(self, a: Fraction) -> Fraction:
        if a.denominator % self.p == 0:
            raise ValueError(f"{a} is not in ℤ localized at ({self.p})")
        return a

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def add(self, a: Fraction, b: Fraction) -> Fraction:
        return a + b

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def neg(self, a: Fraction) -> Fraction:
        return -a

    def is_unit(self, a: Fraction) -> bool:
        return a.numerator % self.p != 0

    def inverse(self, a: Fraction) -> Fraction:
        return 1 / a

    def valuation(self, a: Fraction) -> Valuation:
        if not a:
            return INFINITY
        return _p_adic_valuation(a.numerator, self.p)

    def residue(self, a: Fraction) -> int:
        return (a.numerator * pow(a.denominator, -1, self.p)) % self.p

    def euclid_norm(self, a: Fraction) -> int:
        return int(self.valuation(a))

    def divmod(self, a: Fraction, b: Fraction) -> Tuple[Fraction, Fraction]:
        if self.valuation(b) <= self.valuation(a):
            return a / b, self.zero
        return self.zero, a

    def normal_unit(self, a: Fraction) -> Fraction:
        if not a:
            return self.one
        return Fraction(self.p ** int(self.valuation(a))) / a

    def to_json(self, a: Fraction) -> str:
        return str(a)

    def from_json(self, data: Any) -> Fraction:
        if isinstance(data, bool) or not isinstance(data, (int, str)):
            raise ParseError(f"localized integers are strings 'a/b', got {data!r}")
        try:
            return self._checked(Fraction(data))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(str(exc)) from exc

    def format(self, a: Fraction) -> str:
        return str(a)

    def parse(self, text: str) -> Fraction:
        return self.from_json(text.strip())


# Polynomial rings -------------------------------------------------------------------


class _PolynomialSupport(Arithmetic):
    """Shared plumbing for rings built on a sympy sparse polynomial ring."""

    def __init__(self, ring: RingDescriptor) -> None:
        super().__init__(ring)
        assert ring.base is not None
        base = arithmetic(ring.base)
        assert isinstance(base, (RationalArithmetic, PrimeFieldArithmetic))
        self.base = base
        self.names = ring.variable_names
        self.poly_ring = PolyRing(",".join(self.names), base.domain)

    def const(self, p: PolyElement) -> Any:
        """Constant term as a base-field value."""

        return self.base.from_domain(p.const())

    def poly_to_json(self, p: PolyElement) -> List[List[Any]]:
        return [
            [list(monom), self.base.to_json(self.base.from_domain(coeff))]
            for monom, coeff in sorted(p.items())
        ]

    def poly_from_json(self, data: Any) -> PolyElement:
        if not isinstance(data, list):
            raise ParseError(f"polynomials are lists of [exponents, coefficient], got {data!r}")
        terms = {}
        for item in data:
            if not isinstance(item, list) or len(item) != 2:
                raise ParseError(f"malformed polynomial term {item!r}")
            exponents, coefficient = item
            if not isinstance(exponents, list) or len(exponents) != len(self.names):
                raise ParseError(f"exponent vector {exponents!r} must have {len(self.names)} entries")
            if any(not isinstance(e, int) or isinstance(e, bool) or e < 0 for e in exponents):
                raise ParseError(f"exponents must be nonnegative integers, got {exponents!r}")
            monom = tuple(exponents)
            if monom in terms:
                raise ParseError(f"repeated monomial {exponents!r}")
            value = self.base.from_json(coefficient)
            if value == self.base.zero:
                raise ParseError(f"zero coefficient stored for monomial {exponents!r}")
            terms[monom] = self.base.to_domain(value)
        return self.poly_ring.from_dict(terms)

    def format_poly(self, p: PolyElement) -> str:
        if not p:
            return "0"
        text = ""
        for index, (monom, coeff) in enumerate(p.terms()):
            value = self.base.from_domain(coeff)
            negative = value < 0
            magnitude = -value if negative else value
            mono = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in zip(self.names, monom) if e
            )
            if mono and magnitude == 1:
                body = mono
            elif mono:
                body = f"{magnitude}*{mono}"
            else:
                body = str(magnitude)
            if index == 0:
                text = f"-{body}" if negative else body
            else:
                text += f" - {body}" if negative else f" + {body}"
        return text

    def sympify_text(self, text: str) -> Any:
        try:
            return sympify(text.replace("^", "**"))
        except (SympifyError, SyntaxError, TypeError) as exc:
            raise ParseError(f"cannot read {text!r} as an element of {self.ring}") from exc

    def poly_from_expr(self, expr: Any) -> PolyElement:
        try:
            return self.poly_ring.from_expr(expr)
        except (ValueError, CoercionFailed) as exc:
            raise ParseError(f"{expr} is not a polynomial over {self.ring.base}") from exc


class UnivariatePolyArithmetic(_PolynomialSupport):
    """k[x] for k = ℚ or GF(p)."""

    def __init__(self, ring: RingDescriptor) -> None:
        super().__init__(ring)
        self.zero = self.poly_ring.zero
        self.one = self.poly_ring.one

    def from_int(self, n: int) -> PolyElement:
        return self.poly_ring(n)

    def add(self, a: PolyElement, b: PolyElement) -> PolyElement:
        return a + b

    def mul(self, a: PolyElement, b: PolyElement) -> PolyElement:
        return a * b

    def neg(self, a: PolyElement) -> PolyElement:
        return -a

    def is_zero(self, a: PolyElement) -> bool:
        return not a

    def is_unit(self, a: PolyElement) -> bool:
        return bool(a) and a.degree() == 0

    def inverse(self, a: PolyElement) -> PolyElement:
        domain = self.poly_ring.domain
        return self.poly_ring.ground_new(domain.quo(domain.one, a.LC))

    def euclid_norm(self, a: PolyElement) -> int:
        return int(a.degree())

    def divmod(self, a: PolyElement, b: PolyElement) -> Tuple[PolyElement, PolyElement]:
        return a.div(b)

    def normal_unit(self, a: PolyElement) -> PolyElement:
        if not a:
            return self.one
        return self.inverse(self.poly_ring.ground_new(a.LC))

    def to_json(self, a: PolyElement) -> List[List[Any]]:
        return self.poly_to_json(a)

    def from_json(self, data: Any) -> PolyElement:
        return self.poly_from_json(data)

    def format(self, a: PolyElement) -> str:
        return self.format_poly(a)

    def parse(self, text: str) -> PolyElement:
        return self.poly_from_expr(self.sympify_text(text))


LocalFraction = Tuple[PolyElement, PolyElement]


class LocalizedPolyArithmetic(_PolynomialSupport):
    """k[x₁..xₙ] localized at (x₁..xₙ).

    Elements are reduced fractions ``(num, den)`` whose denominator has
    constant term exactly 1.
    """

    def __init__(self, ring: RingDescriptor) -> None:
        super().__init__(ring)
        self.zero = (self.poly_ring.zero, self.poly_ring.one)
        self.one = (self.poly_ring.one, self.poly_ring.one)

    def normalize(self, num: PolyElement, den: PolyElement) -> LocalFraction:
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return self.zero
        if den.is_ground:
            return num.quo_ground(den.const()), self.poly_ring.one
        _, num, den = num.cofactors(den)
        c = den.const()
        if not c:
            raise ValueError(f"denominator {self.format_poly(den)} is not a unit in {self.ring}")
        return num.quo_ground(c), den.quo_ground(c)

    def from_poly(self, p: PolyElement) -> LocalFraction:
        return p, self.poly_ring.one

    def from_int(self, n: int) -> LocalFraction:
        return self.normalize(self.poly_ring(n), self.poly_ring.one)

    def add(self, a: LocalFraction, b: LocalFraction) -> LocalFraction:
        (n1, d1), (n2, d2) = a, b
        if d1 == d2:
            return self.normalize(n1 + n2, d1)
        return self.normalize(n1 * d2 + n2 * d1, d1 * d2)

    def mul(self, a: LocalFraction, b: LocalFraction) -> LocalFraction:
        (n1, d1), (n2, d2) = a, b
        if not n1 or not n2:
            return self.zero
        return self.normalize(n1 * n2, d1 * d2)

    def neg(self, a: LocalFraction) -> LocalFraction:
        return -a[0], a[1]

    def is_zero(self, a: LocalFraction) -> bool:
        return not a[0]

    def is_unit(self, a: LocalFraction) -> bool:
        return bool(a[0].const())

    def inverse(self, a: LocalFraction) -> LocalFraction:
        return self.normalize(a[1], a[0])

    def valuation(self, a: LocalFraction) -> Valuation:
        if not a[0]:
            return INFINITY
        return min(sum(monom) for monom in a[0].itermonoms())

    def residue(self, a: LocalFraction) -> Any:
        return self.const(a[0])

    def homogeneous_part(self, a: LocalFraction, s: int) -> dict:
        """Degree-``s`` part of the numerator, ``monomial -> base value``."""

        return {
            monom: self.base.from_domain(coeff)
            for monom, coeff in a[0].items()
            if sum(monom) == s
        }

    def _require_dvr(self, operation: str) -> None:
        if self.ring.num_vars != 1:
            raise UnsupportedRingError(
                operation, "a principal ideal domain (one-variable localization)", self.ring
            )

    def euclid_norm(self, a: LocalFraction) -> int:
        self._require_dvr("Euclidean division")
        return int(self.valuation(a))

    def divmod(self, a: LocalFraction, b: LocalFraction) -> Tuple[LocalFraction, LocalFraction]:
        self._require_dvr("Euclidean division")
        if self.valuation(b) <= self.valuation(a):
            return self.normalize(a[0] * b[1], a[1] * b[0]), self.zero
        return self.zero, a

    def normal_unit(self, a: LocalFraction) -> LocalFraction:
        self._require_dvr("canonical associates")
        if not a[0]:
            return self.one
        x = self.poly_ring.gens[0]
        return self.normalize(x ** int(self.valuation(a)) * a[1], a[0])

    def to_json(self, a: LocalFraction) -> dict:
        return {"num": self.poly_to_json(a[0]), "den": self.poly_to_json(a[1])}

    def from_json(self, data: Any) -> LocalFraction:
        if not isinstance(data, dict) or set(data) != {"num", "den"}:
            raise ParseError(f"localized elements are {{num, den}} records, got {data!r}")
        num = self.poly_from_json(data["num"])
        den = self.poly_from_json(data["den"])
        try:
            value = self.normalize(num, den)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(str(exc)) from exc
        if value != (num, den):
            raise ParseError(f"{data!r} is not in canonical reduced form")
        return value

    def format(self, a: LocalFraction) -> str:
        num, den = a
        if den == self.poly_ring.one:
            return self.format_poly(num)
        return f"({self.format_poly(num)})/({self.format_poly(den)})"

    def parse(self, text: str) -> LocalFraction:
        num_expr, den_expr = fraction(together(self.sympify_text(text)))
        try:
            return self.normalize(self.poly_from_expr(num_expr), self.poly_from_expr(den_expr))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(str(exc)) from exc


_BACKENDS = {
    RingKind.INTEGERS: IntegerArithmetic,
    RingKind.RATIONALS: RationalArithmetic,
    RingKind.PRIME_FIELD: PrimeFieldArithmetic,
    RingKind.LOCALIZED_INTEGERS: LocalizedIntegerArithmetic,
    RingKind.UNIVARIATE_POLY: UnivariatePolyArithmetic,
    RingKind.LOCALIZED_POLY: LocalizedPolyArithmetic,
}


@lru_cache(maxsize=None)
def arithmetic(ring: RingDescriptor) -> Arithmetic:
    """Return the (shared, stateless) arithmetic backend for ``ring``."""

    return _BACKENDS[ring.kind](ring)


# Wrapped elements -------------------------------------------------------------------


Coercible = Union["RingElement", int]


@dataclass(frozen=True, eq=False)
class RingElement:
    """An exact element of ``ring`` in canonical form."""

    ring: RingDescriptor
    value: Any

    # Construction -----------------------------------------------------------------

    @classmethod
    def of(cls, ring: RingDescriptor, value: Any) -> "RingElement":
        """Wrap ``value``: an int, a ``Fraction`` for ℚ/ℤ_(p), or a raw canonical value."""

        ops = arithmetic(ring)
        if isinstance(value, RingElement):
            if value.ring != ring:
                raise RingMismatchError(f"{value} belongs to {value.ring}, not {ring}")
            return value
        if isinstance(value, bool):
            raise TypeError("booleans are not ring elements")
        if isinstance(value, int):
            return cls(ring, ops.from_int(value))
        if isinstance(value, Fraction):
            if ring.kind in {RingKind.RATIONALS}:
                return cls(ring, value)
            if isinstance(ops, LocalizedIntegerArithmetic):
                return cls(ring, ops._checked(value))
            if isinstance(ops, PrimeFieldArithmetic):
                return cls(ring, ops.from_json(str(value)))
            raise TypeError(f"cannot read a fraction as an element of {ring}")
        if isinstance(value, PolyElement) and isinstance(ops, LocalizedPolyArithmetic):
            return cls(ring, ops.from_poly(value))
        return cls(ring, value)

    @classmethod
    def zero(cls, ring: RingDescriptor) -> "RingElement":
        return cls(ring, arithmetic(ring).zero)

    @classmethod
    def one(cls, ring: RingDescriptor) -> "RingElement":
        return cls(ring, arithmetic(ring).one)

    @classmethod
    def variable(cls, ring: RingDescriptor, index: int = 0) -> "RingElement":
        ops = arithmetic(ring)
        if not isinstance(ops, _PolynomialSupport):
            raise UnsupportedRingError("variables", "a polynomial ring", ring)
        return cls.of(ring, ops.poly_ring.gens[index])

    @classmethod
    def parse(cls, ring: RingDescriptor, text: str) -> "RingElement":
        """Read the human-readable syntax, e.g. ``x^2*y - 3/2`` or ``(1+x)/(1-y)``."""

        return cls(ring, arithmetic(ring).parse(text))

    @classmethod
    def from_json(cls, ring: RingDescriptor, data: Any) -> "RingElement":
        return cls(ring, arithmetic(ring).from_json(data))

    # Arithmetic -------------------------------------------------------------------

    @property
    def _ops(self) -> Arithmetic:
        return arithmetic(self.ring)

    def _coerce(self, other: Any) -> "RingElement":
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise RingMismatchError(f"cannot combine elements of {self.ring} and {other.ring}")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return RingElement(self.ring, self._ops.from_int(other))
        raise TypeError(f"cannot combine {type(other).__name__} with an element of {self.ring}")

    def __add__(self, other: Coercible) -> "RingElement":
        other = self._coerce(other)
        return RingElement(self.ring, self._ops.add(self.value, other.value))

    __radd__ = __add__

    def __sub__(self, other: Coercible) -> "RingElement":
        other = self._coerce(other)
        return RingElement(self.ring, self._ops.sub(self.value, other.value))

    def __rsub__(self, other: Coercible) -> "RingElement":
        return self._coerce(other) - self

    def __mul__(self, other: Coercible) -> "RingElement":
        other = self._coerce(other)
        return RingElement(self.ring, self._ops.mul(self.value, other.value))

    __rmul__ = __mul__

    def __neg__(self) -> "RingElement":
        return RingElement(self.ring, self._ops.neg(self.value))

    def __pow__(self, exponent: int) -> "RingElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = RingElement.one(self.ring)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RingElement):
            return self.ring == other.ring and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == self._ops.from_int(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring, self.value))

    # Predicates -------------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self._ops.is_zero(self.value)

    def is_unit(self) -> bool:
        return self._ops.is_unit(self.value)

    def inverse(self) -> "RingElement":
        if not self._ops.is_unit(self.value):
            raise NotAUnitError(f"{self} is not a unit in {self.ring}")
        return RingElement(self.ring, self._ops.inverse(self.value))

    def valuation(self) -> Valuation:
        """Order in the maximal ideal; ``math.inf`` for zero. Localized rings only."""

        if self.ring.kind not in (RingKind.LOCALIZED_POLY, RingKind.LOCALIZED_INTEGERS):
            raise UnsupportedRingError(
                "valuation", "a localized ring such as q-local:2 or int-local:3", self.ring
            )
        return self._ops.valuation(self.value)

    def residue(self) -> "RingElement":
        """Image in the residue field of a local ring."""

        if not self.ring.is_local:
            raise UnsupportedRingError("residue", "a local ring", self.ring)
        return RingElement(self.ring.residue_field, self._ops.residue(self.value))

    # Euclidean structure ----------------------------------------------------------

    def euclid_norm(self) -> int:
        return self._ops.euclid_norm(self.value)

    def divmod(self, other: "RingElement") -> Tuple["RingElement", "RingElement"]:
        other = self._coerce(other)
        q, r = self._ops.divmod(self.value, other.value)
        return RingElement(self.ring, q), RingElement(self.ring, r)

    def divides(self, other: "RingElement") -> bool:
        if self.is_zero:
            return other.is_zero
        return other.divmod(self)[1].is_zero

    def normal_unit(self) -> "RingElement":
        return RingElement(self.ring, self._ops.normal_unit(self.value))

    def canonical(self) -> "RingElement":
        """Canonical associate: nonnegative, monic, or a power of the uniformizer."""

        return self * self.normal_unit()

    # Encoding ---------------------------------------------------------------------

    def to_json(self) -> Any:
        return self._ops.to_json(self.value)

    def __str__(self) -> str:
        return self._ops.format(self.value)

    def __repr__(self) -> str:
        return f"RingElement({self.ring}, {self})"
