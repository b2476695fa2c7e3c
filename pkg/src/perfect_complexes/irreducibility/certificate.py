"""Irreducibility certificates for minimal complexes over ``k[x₁..xₙ]_(x₁..xₙ)``.

A complex with rank 1 in its top degree is certified when every differential
``d_i`` has all entries in ``𝔪^{s_i}`` and the induced map

    F^i/𝔪F^i → (𝔪^{s_i}/𝔪^{s_i+1}) ⊗ F^{i+1}

is injective over the residue field. A certified complex is not
quasi-isomorphic to a direct sum of two nonzero perfect complexes. A refusal
only means the test does not apply with the ideal 𝔪; it never proves
decomposability.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

from ..complexes import ChainComplex, validate
from ..errors import InvalidComplexError, ShapeMismatchError, UnsupportedRingError
from ..rings import (
    INFINITY,
    Matrix,
    MaximalIdealFiltration,
    RingDescriptor,
    RingElement,
    RingKind,
    leading_form,
    matrix_rank,
)

LOGGER = logging.getLogger(__name__)


class Verdict(str, Enum):
    CERTIFIED = "certified"
    REFUSED = "refused"


@dataclass(frozen=True)
class DifferentialCheck:
    """Outcome for ``d_degree : F^degree → F^{degree+1}``."""

    degree: int
    s: int
    injectivity_rank: int
    induced_shape: Tuple[int, int]

    @property
    def passed(self) -> bool:
        return self.injectivity_rank == self.induced_shape[1]


@dataclass(frozen=True)
class IrreducibilityCertificate:
    ring: RingDescriptor
    min_deg: int
    ranks: Tuple[int, ...]
    top_degree: int
    checks: Tuple[DifferentialCheck, ...]
    verdict: Verdict
    refusal_degree: Optional[int] = None
    reason: str = field(default="")

    @property
    def certified(self) -> bool:
        return self.verdict is Verdict.CERTIFIED

    def s_values(self) -> Tuple[int, ...]:
        return tuple(check.s for check in self.checks)


def _require_localized_poly(ring: RingDescriptor, operation: str) -> None:
    if ring.kind is not RingKind.LOCALIZED_POLY:
        raise UnsupportedRingError(operation, "a localized polynomial ring", ring)


def induced_matrix(d: Matrix, s: int) -> Matrix:
    """Residue-field matrix of leading forms.

    Row ``t·dim + b`` holds the coordinate on basis monomial ``b`` of the
    entries in row ``t`` of ``d``.
    """

    filt = MaximalIdealFiltration.build(d.ring, s)
    field_ring = d.ring.residue_field
    rows: List[List[RingElement]] = [
        [RingElement.zero(field_ring)] * d.ncols for _ in range(d.nrows * filt.dimension)
    ]
    for t, col, entry in d.iter_entries():
        if entry.is_zero:
            continue
        for b, coordinate in enumerate(leading_form(entry, s, filt)):
            rows[t * filt.dimension + b][col] = coordinate
    return Matrix.from_lists(field_ring, rows, d.ncols)


def _check(degree: int, d: Matrix, s: int) -> DifferentialCheck:
    induced = induced_matrix(d, s)
    return DifferentialCheck(degree, s, matrix_rank(induced), induced.shape)


def _min_valuation(d: Matrix) -> float:
    return min((entry.valuation() for _, _, entry in d.iter_entries()), default=INFINITY)


def find_certificate(c: ChainComplex) -> IrreducibilityCertificate:
    """Test the irreducibility criterion with ``𝔞 = 𝔪`` and ``s_i`` the least entry valuation."""

    _require_localized_poly(c.ring, "find_certificate")
    verdict = validate(c)
    if not verdict:
        raise InvalidComplexError(verdict)
    if c.is_empty:
        raise ValueError("cannot certify the empty complex; it has no top degree")

    t = c.trimmed()
    top = t.max_deg

    def refuse(
        checks: List[DifferentialCheck], degree: int, reason: str
    ) -> IrreducibilityCertificate:
        LOGGER.warning("Not certified at degree %d: %s", degree, reason)
        return IrreducibilityCertificate(
            t.ring, t.min_deg, t.ranks, top, tuple(checks), Verdict.REFUSED, degree, reason
        )

    checks: List[DifferentialCheck] = []
    if t.rank(top) != 1:
        return refuse(checks, top, f"rank at the top degree {top} is {t.rank(top)}, not 1")

    for degree, d in t.iter_differentials():
        if d.ncols == 0:
            checks.append(DifferentialCheck(degree, 1, 0, (d.nrows * t.ring.num_vars, 0)))
            continue
        valuation = _min_valuation(d)
        if valuation == INFINITY:
            return refuse(checks, degree, f"d_{degree} is zero on a rank-{d.ncols} source")
        if valuation < 1:
            return refuse(
                checks, degree, f"d_{degree} has a unit entry; minimize the complex first"
            )
        check = _check(degree, d, int(valuation))
        checks.append(check)
        LOGGER.debug(
            "d_%d: s=%d, induced %s of rank %d",
            degree,
            check.s,
            check.induced_shape,
            check.injectivity_rank,
        )
        if not check.passed:
            return refuse(
                checks,
                degree,
                f"induced map of d_{degree} has rank {check.injectivity_rank} < {d.ncols}",
            )

    LOGGER.info("Certified %s as irreducible", t)
    return IrreducibilityCertificate(
        t.ring, t.min_deg, t.ranks, top, tuple(checks), Verdict.CERTIFIED
    )


def verify_certificate(c: ChainComplex, cert: IrreducibilityCertificate) -> bool:
    """Recompute every condition with the stored ``s_i``; True means ``c`` is indecomposable."""

    _require_localized_poly(c.ring, "verify_certificate")
    t = c.trimmed()
    if cert.ring != t.ring or cert.min_deg != t.min_deg or tuple(cert.ranks) != t.ranks:
        raise ShapeMismatchError(
            f"certificate is for ranks {cert.ranks} from degree {cert.min_deg} over {cert.ring}, "
            f"got {t.ranks} from degree {t.min_deg} over {t.ring}"
        )
    if not cert.certified:
        return False
    if len(cert.checks) != len(t.diffs):
        raise ShapeMismatchError(
            f"certificate has {len(cert.checks)} differential checks, complex has {len(t.diffs)}"
        )
    if not validate(t) or cert.top_degree != t.max_deg or t.rank(t.max_deg) != 1:
        return False

    for check, (degree, d) in zip(cert.checks, t.iter_differentials()):
        if check.degree != degree:
            raise ShapeMismatchError(f"check for d_{check.degree} found where d_{degree} belongs")
        if d.ncols == 0:
            continue
        if check.s < 1 or _min_valuation(d) < check.s:
            return False
        if not _check(degree, d, check.s).passed:
            return False
    return True


def explain(cert: IrreducibilityCertificate) -> str:
    """Human-readable audit of a certificate."""

    lines = [
        f"ring: {cert.ring}",
        f"ranks: {cert.ranks} from degree {cert.min_deg}",
        f"top degree: {cert.top_degree}",
    ]
    for check in cert.checks:
        rows, cols = check.induced_shape
        status = "injective" if check.passed else "not injective"
        lines.append(
            f"d_{check.degree}: s={check.s}, induced {rows}x{cols} matrix of rank "
            f"{check.injectivity_rank} ({status})"
        )
    if cert.certified:
        lines.append("verdict: certified (indecomposable)")
    else:
        lines.append(f"verdict: refused at degree {cert.refusal_degree}: {cert.reason}")
    return "\n".join(lines)
