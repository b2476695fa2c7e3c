"""High-level entry points behind the command-line interface."""

from __future__ import annotations

import hashlib
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, TypeVar

from . import __version__
from .complexes import ChainComplex, cohomology, validate
from .config import AppConfig
from .decomposition import (
    DecompositionReport,
    RefinementLevel,
    audit_width,
    decompose,
    planted_report,
    primary_refine,
    report_to_complex,
)
from .errors import FactorizationUnsupportedError, UnsupportedRingError
from .generators import (
    PlannedSummand,
    PlantedDecomposition,
    f_n,
    iterated_koszul,
    koszul,
    multi_iterated_koszul,
    random_plan,
    scrambled_sum,
)
from .irreducibility import (
    IrreducibilityCertificate,
    explain,
    find_certificate,
    verify_certificate,
)
from .minimization import ScanOrder, is_minimal, minimize
from .outputs.writer_json import (
    certificate_to_dict,
    cohomology_to_dict,
    complex_to_dict,
    report_to_dict,
    transcript_to_dict,
    width_to_dict,
)
from .parsers.grammar import parse_ring
from .rings import RingDescriptor, RingKind

LOGGER = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

LOCAL_DEMO_RING = "q-local:2"


class GeneratorKind(str, Enum):
    KOSZUL = "koszul"
    FN = "fn"
    ITERATED = "iterated"
    MULTI = "multi"
    SCRAMBLED = "scrambled"


# Generation -------------------------------------------------------------------------


def _with_variables(ring: RingDescriptor, n: Optional[int]) -> RingDescriptor:
    if n is None or ring.num_vars == n:
        return ring
    if ring.kind is not RingKind.LOCALIZED_POLY:
        raise UnsupportedRingError(f"--n {n}", "a localized polynomial ring such as q-local:N", ring)
    assert ring.base is not None
    return RingDescriptor.localized_poly(ring.base, n)


def generate(
    kind: GeneratorKind,
    ring: RingDescriptor,
    *,
    n: Optional[int] = None,
    m: int = 1,
    plan: Sequence[PlannedSummand] = (),
    seed: int = 0,
    ops: int = 8,
    coefficient_bound: int = 2,
) -> Tuple[ChainComplex, Optional[PlantedDecomposition]]:
    """Build a generator output; ``n`` is the variable count except for ``fn`` (its length)."""

    kind = GeneratorKind(kind)
    if kind is GeneratorKind.FN:
        if n is None:
            raise ValueError("fn needs its length, e.g. --n 3")
        return f_n(ring, n), None
    if kind is GeneratorKind.KOSZUL:
        return koszul(_with_variables(ring, n)), None
    if kind is GeneratorKind.ITERATED:
        return iterated_koszul(_with_variables(ring, n)), None
    if kind is GeneratorKind.MULTI:
        return multi_iterated_koszul(_with_variables(ring, n), m), None
    planted = scrambled_sum(ring, plan, seed, ops=ops, coefficient_bound=coefficient_bound)
    return planted.complex, planted


# Analysis ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AnalysisOutcome:
    """Text and JSON renderings of one analysis; ``ok`` is False for refusals and violations."""

    ok: bool
    text: str
    payload: Dict[str, Any]
    note: Optional[str] = None


def analyze_validate(c: ChainComplex) -> AnalysisOutcome:
    verdict = validate(c)
    payload = {
        "ok": verdict.ok,
        "degree": verdict.degree,
        "position": list(verdict.position) if verdict.position else None,
        "message": verdict.message,
    }
    return AnalysisOutcome(verdict.ok, str(verdict), payload)


def analyze_minimize(c: ChainComplex, scan: ScanOrder = ScanOrder.ROW) -> AnalysisOutcome:
    result, transcript = minimize(c, scan)
    text = "\n".join(
        [
            f"before: {c}",
            f"after: {result}",
            f"split off {len(transcript.steps)} acyclic pieces",
        ]
    )
    payload = {"complex": complex_to_dict(result), "transcript": transcript_to_dict(transcript)}
    return AnalysisOutcome(True, text, payload)


def analyze_width(c: ChainComplex) -> AnalysisOutcome:
    result, _ = minimize(c)
    width = result.length
    text = f"width: {'empty' if width is None else width}"
    return AnalysisOutcome(True, text, width_to_dict(c.ring, width))


def analyze_decompose(
    c: ChainComplex, refine: RefinementLevel = RefinementLevel.INVARIANT_FACTOR
) -> AnalysisOutcome:
    report = decompose(c)
    note = None
    if RefinementLevel(refine) is RefinementLevel.PRIMARY:
        try:
            report = primary_refine(report)
        except FactorizationUnsupportedError as exc:
            LOGGER.warning("Primary refinement refused: %s", exc)
            note = str(exc)
    text = _format_report(report)
    return AnalysisOutcome(note is None, text, report_to_dict(report), note)


def _format_report(report: DecompositionReport) -> str:
    lines = [f"refinement: {report.refinement_level.value}"]
    lines.extend(str(summand) for summand in report.summands)
    width = audit_width(report)
    lines.append(f"audited width: {'empty' if width is None else width}")
    return "\n".join(lines)


def analyze_cohomology(c: ChainComplex) -> AnalysisOutcome:
    report = cohomology(c)
    return AnalysisOutcome(True, str(report), cohomology_to_dict(report))


def analyze_certify(
    c: ChainComplex, stored: Optional[IrreducibilityCertificate] = None
) -> AnalysisOutcome:
    """Find a certificate, or replay ``stored`` when given."""

    if stored is not None:
        verified = verify_certificate(c, stored)
        text = "certificate verified" if verified else "certificate rejected"
        payload = {"verified": verified, "certificate": certificate_to_dict(stored)}
        return AnalysisOutcome(verified, text, payload)
    cert = find_certificate(c)
    return AnalysisOutcome(cert.certified, explain(cert), certificate_to_dict(cert))


# Demo harnesses ---------------------------------------------------------------------


@dataclass(frozen=True)
class DemoFailure:
    instance: str
    reason: str


@dataclass
class DemoReport:
    scenario: str
    trials: int
    seed: int
    failures: List[DemoFailure] = field(default_factory=list)
    summary: Dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        return {
            "scenario": self.scenario,
            "trials": self.trials,
            "seed": self.seed,
            "failures": [{"instance": f.instance, "reason": f.reason} for f in self.failures],
            "summary": self.summary,
            "version": __version__,
        }

    def __str__(self) -> str:
        lines = [
            f"scenario: {self.scenario}",
            f"trials: {self.trials}",
            f"seed: {self.seed}",
            f"failures: {len(self.failures)}",
        ]
        lines.extend(f"{key}: {value}" for key, value in self.summary.items())
        lines.extend(f"  {f.instance}: {f.reason}" for f in self.failures)
        return "\n".join(lines)


def trial_seed(master_seed: int, index: int) -> int:
    """Per-trial seed, independent of scheduling order."""

    digest = hashlib.sha256(f"{master_seed}:{index}".encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def _run_ordered(func: Callable[[T], R], items: Sequence[T], workers: int) -> List[R]:
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))


@dataclass(frozen=True)
class DedekindTrial:
    index: int
    seed: int
    ring: str
    ops: int
    coefficient_bound: int
    max_rank: int
    degree_span: int
    max_abs_d: int
    max_poly_degree: int


@dataclass(frozen=True)
class DedekindOutcome:
    index: int
    ring: str
    width: Optional[int]
    reason: Optional[str] = None


def run_dedekind_trial(trial: DedekindTrial) -> DedekindOutcome:
    """Scramble a random plan, decompose it and compare with what was planted."""

    ring = parse_ring(trial.ring)
    rng = random.Random(trial.seed)
    plan = random_plan(
        ring,
        rng,
        max_rank=trial.max_rank,
        degree_span=trial.degree_span,
        max_abs_d=trial.max_abs_d,
        max_poly_degree=trial.max_poly_degree,
    )
    planted = scrambled_sum(
        ring, plan, trial.seed, ops=trial.ops, coefficient_bound=trial.coefficient_bound
    )
    report = decompose(planted.complex)
    width = audit_width(report)
    reason = None
    if width is not None and width > 1:
        reason = f"audited width {width} > 1"
    elif not primary_refine(report).same_summands(planted_report(planted)):
        reason = (
            f"planted {', '.join(str(s) for s in planted.summands)} "
            f"but decomposed into {report}"
        )
    elif not cohomology(report_to_complex(report)).same_as(cohomology(planted.complex)):
        reason = "summands are not quasi-isomorphic to the input"
    LOGGER.debug("Dedekind trial %d over %s: width=%s reason=%s", trial.index, ring, width, reason)
    return DedekindOutcome(trial.index, trial.ring, width, reason)


def run_dedekind_demo(
    settings: AppConfig,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    workers: Optional[int] = None,
) -> DemoReport:
    trials = settings.demo_trials if trials is None else trials
    seed = settings.demo_seed if seed is None else seed
    workers = settings.workers if workers is None else workers
    if trials < 0:
        raise ValueError(f"trials must be nonnegative, got {trials}")
    for ring_text in settings.demo_rings:
        parse_ring(ring_text)

    LOGGER.info("Starting dedekind demo | trials=%s seed=%s workers=%s", trials, seed, workers)
    jobs = [
        DedekindTrial(
            index=index,
            seed=trial_seed(seed, index),
            ring=settings.demo_rings[index % len(settings.demo_rings)],
            ops=settings.scramble_ops,
            coefficient_bound=settings.scramble_coefficient_bound,
            max_rank=settings.demo_max_rank,
            degree_span=settings.demo_degree_span,
            max_abs_d=settings.demo_max_abs_d,
            max_poly_degree=settings.demo_max_poly_degree,
        )
        for index in range(trials)
    ]
    outcomes = _run_ordered(run_dedekind_trial, jobs, workers)

    report = DemoReport("dedekind", trials, seed)
    widths = [o.width for o in outcomes if o.width is not None]
    report.summary["max_width"] = max(widths) if widths else "empty"
    report.summary["rings"] = list(settings.demo_rings)
    for outcome in outcomes:
        if outcome.reason:
            report.failures.append(
                DemoFailure(f"trial {outcome.index} ({outcome.ring})", outcome.reason)
            )
    LOGGER.info("Finished dedekind demo | failures=%s", len(report.failures))
    return report


@dataclass(frozen=True)
class LocalWitness:
    name: str
    length: int
    certified: bool
    reason: str = ""


def _local_witnesses(length: int) -> List[Tuple[str, Callable[[], ChainComplex]]]:
    ring = parse_ring(LOCAL_DEMO_RING)
    witnesses: List[Tuple[str, Callable[[], ChainComplex]]] = [
        (f"f_{length}", lambda: f_n(ring, length))
    ]
    if length == 2:
        witnesses.append(("koszul(2)", lambda: koszul(ring)))
    if length >= 3:
        m = length - 2
        witnesses.append((f"multi_iterated_koszul(m={m})", lambda: multi_iterated_koszul(ring, m)))
    return witnesses


def run_local_length(length: int) -> List[LocalWitness]:
    """Certify every witness of the given length."""

    results = []
    for name, build in _local_witnesses(length):
        c = build()
        reason = ""
        if c.length != length:
            reason = f"has length {c.length}, expected {length}"
        elif not is_minimal(c):
            reason = "is not minimal"
        else:
            cert = find_certificate(c)
            if not cert.certified:
                reason = f"refused at degree {cert.refusal_degree}: {cert.reason}"
            elif not verify_certificate(c, cert):
                reason = "certificate does not verify"
        LOGGER.debug("Local witness %s: %s", name, reason or "certified")
        results.append(LocalWitness(name, length, not reason, reason))
    return results


def run_local_demo(
    settings: AppConfig,
    max_n: Optional[int] = None,
    workers: Optional[int] = None,
) -> DemoReport:
    max_n = settings.demo_max_n if max_n is None else max_n
    workers = settings.workers if workers is None else workers
    if max_n < 1:
        raise ValueError(f"max-n must be a positive integer, got {max_n}")

    LOGGER.info("Starting local demo over %s | max_n=%s", LOCAL_DEMO_RING, max_n)
    per_length = _run_ordered(run_local_length, list(range(1, max_n + 1)), workers)

    witnesses = [w for group in per_length for w in group]
    report = DemoReport("local", len(witnesses), 0)
    report.summary["ring"] = LOCAL_DEMO_RING
    report.summary["certified_lengths"] = sorted({w.length for w in witnesses if w.certified})
    for witness in witnesses:
        if not witness.certified:
            report.failures.append(DemoFailure(witness.name, witness.reason))
    LOGGER.info("Finished local demo | failures=%s", len(report.failures))
    return report
