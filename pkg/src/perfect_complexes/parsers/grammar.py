"""Command-line grammars for ring descriptors and planted summands.

Rings::

    int | q | gf:P | q[x] | gf:P[x] | q-local:N | gf:P-local:N | int-local:P

Plans are comma-separated groups ``(end_degree,kind)`` where ``kind`` is
``f`` (a free rank-1 piece) or ``c`` followed by an element in the human
syntax, e.g. ``(0,c2),(0,c3)`` or ``(-1,cx^2+x),(1,f)``.
"""

from __future__ import annotations

import re
from typing import List, Optional

from ..errors import ParseError
from ..generators import PlannedSummand
from ..rings import RingDescriptor, RingElement

_FIELD = r"(?:q|gf:(?P<p>\d+))"
_RING_PATTERNS = (
    (re.compile(r"^int$"), "integers"),
    (re.compile(r"^q$"), "rationals"),
    (re.compile(r"^gf:(?P<p>\d+)$"), "prime_field"),
    (re.compile(rf"^{_FIELD}\[x\]$"), "univariate_poly"),
    (re.compile(rf"^{_FIELD}-local:(?P<n>\d+)$"), "localized_poly"),
    (re.compile(r"^int-local:(?P<p>\d+)$"), "localized_integers"),
)

RING_GRAMMAR_HELP = (
    "Ring: int, q, gf:P, q[x], gf:P[x], q-local:N, gf:P-local:N or int-local:P "
    "(P prime, N variables)."
)


def _field(p: Optional[str]) -> RingDescriptor:
    return RingDescriptor.prime_field(int(p)) if p else RingDescriptor.rationals()


def parse_ring(text: str) -> RingDescriptor:
    """Read a ring descriptor, e.g. ``gf:5[x]`` or ``q-local:2``."""

    normalized = text.strip().lower().replace(" ", "")
    for pattern, kind in _RING_PATTERNS:
        match = pattern.match(normalized)
        if not match:
            continue
        groups = match.groupdict()
        try:
            if kind == "integers":
                return RingDescriptor.integers()
            if kind == "rationals":
                return RingDescriptor.rationals()
            if kind == "prime_field":
                return RingDescriptor.prime_field(int(groups["p"]))
            if kind == "univariate_poly":
                return RingDescriptor.univariate_poly(_field(groups.get("p")))
            if kind == "localized_poly":
                return RingDescriptor.localized_poly(_field(groups.get("p")), int(groups["n"]))
            return RingDescriptor.localized_integers(int(groups["p"]))
        except ValueError as exc:
            raise ParseError(f"invalid ring {text!r}: {exc}") from exc
    raise ParseError(f"unknown ring {text!r}. {RING_GRAMMAR_HELP}")


def _split_groups(text: str) -> List[str]:
    groups: List[str] = []
    depth = 0
    start = -1
    for index, char in enumerate(text):
        if char == "(":
            if depth == 0:
                start = index + 1
            depth += 1
        elif char == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced ')' at position {index} in plan {text!r}")
            if depth == 0:
                groups.append(text[start:index])
        elif depth == 0 and not (char == "," or char.isspace()):
            raise ParseError(
                f"unexpected {char!r} at position {index} in plan {text!r}; "
                "use groups like (0,c2),(1,f)"
            )
    if depth:
        raise ParseError(f"unbalanced '(' in plan {text!r}")
    return groups


def parse_plan(text: str, ring: RingDescriptor) -> List[PlannedSummand]:
    """Read a plan such as ``(0,c2),(0,c3)`` over ``ring``."""

    groups = _split_groups(text)
    if not groups:
        raise ParseError("plan must name at least one summand, e.g. (0,c2),(1,f)")
    plan: List[PlannedSummand] = []
    for group in groups:
        degree_text, sep, kind_text = group.partition(",")
        if not sep:
            raise ParseError(f"plan entry ({group}) must be (end_degree,kind), e.g. (0,c2)")
        try:
            end_degree = int(degree_text.strip())
        except ValueError as exc:
            raise ParseError(f"end degree {degree_text.strip()!r} is not an integer") from exc
        kind_text = kind_text.strip()
        if kind_text in ("f", "free"):
            plan.append(PlannedSummand.free(end_degree))
        elif kind_text.startswith("c"):
            d = RingElement.parse(ring, kind_text[1:])
            try:
                plan.append(PlannedSummand.cyclic(end_degree, d))
            except ValueError as exc:
                raise ParseError(str(exc)) from exc
        else:
            raise ParseError(f"plan kind {kind_text!r} must be f or c<element>, e.g. c6")
    return plan
