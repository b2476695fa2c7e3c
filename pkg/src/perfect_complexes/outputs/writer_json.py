"""JSON documents for complexes, reports, transcripts and certificates."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, Optional

from ..complexes import ChainComplex, CohomologyReport
from ..decomposition import DecompositionReport
from ..generators import PlannedSummand, PlantedDecomposition, SummandKind
from ..irreducibility import IrreducibilityCertificate
from ..minimization import MinimizationTranscript
from ..rings import RingDescriptor


def complex_to_dict(c: ChainComplex) -> Dict[str, Any]:
    return {
        "ring": c.ring.to_dict(),
        "min_deg": c.min_deg,
        "max_deg": c.max_deg,
        "ranks": {str(d): c.rank(d) for d in c.degrees()},
        "diffs": {str(d): m.to_json() for d, m in c.iter_differentials()},
    }


def planned_summand_to_dict(summand: PlannedSummand) -> Dict[str, Any]:
    data: Dict[str, Any] = {"end_degree": summand.end_degree, "kind": summand.kind.value}
    if summand.d is not None:
        data["d"] = summand.d.to_json()
    return data


def planted_to_dict(planted: PlantedDecomposition) -> Dict[str, Any]:
    return {
        "ring": planted.ring.to_dict(),
        "scramble_seed": planted.scramble_seed,
        "ops": planted.ops,
        "summands": [planned_summand_to_dict(s) for s in planted.summands],
        "complex": complex_to_dict(planted.complex),
    }


def report_to_dict(report: DecompositionReport) -> Dict[str, Any]:
    summands = []
    for summand in report.summands:
        item: Dict[str, Any] = {"end_degree": summand.end_degree, "kind": summand.kind.value}
        if summand.kind is SummandKind.FREE:
            item["rank"] = summand.rank
        else:
            assert summand.d is not None
            item["d"] = summand.d.to_json()
        summands.append(item)
    return {
        "ring": report.ring.to_dict(),
        "refinement": report.refinement_level.value,
        "summands": summands,
    }


def cohomology_to_dict(report: CohomologyReport) -> Dict[str, Any]:
    return {
        "ring": report.ring.to_dict(),
        "degrees": {
            str(item.degree): {
                "free_rank": item.free_rank,
                "invariant_factors": [d.to_json() for d in item.invariant_factors],
            }
            for item in report.degrees
        },
    }


def transcript_to_dict(transcript: MinimizationTranscript) -> Dict[str, Any]:
    return {
        "scan": transcript.scan.value,
        "steps": [
            {
                "degree": step.degree,
                "position": list(step.position),
                "pivot": step.pivot.to_json(),
            }
            for step in transcript.steps
        ],
        "initial_ranks": {str(d): r for d, r in transcript.initial_ranks.items()},
        "final_ranks": {str(d): r for d, r in transcript.final_ranks.items()},
    }


def certificate_to_dict(cert: IrreducibilityCertificate) -> Dict[str, Any]:
    return {
        "ring": cert.ring.to_dict(),
        "min_deg": cert.min_deg,
        "ranks": list(cert.ranks),
        "top_degree": cert.top_degree,
        "verdict": cert.verdict.value,
        "refusal_degree": cert.refusal_degree,
        "reason": cert.reason,
        "checks": [
            {
                "degree": check.degree,
                "s": check.s,
                "injectivity_rank": check.injectivity_rank,
                "induced_shape": list(check.induced_shape),
            }
            for check in cert.checks
        ],
    }


def width_to_dict(ring: RingDescriptor, width: Optional[int]) -> Dict[str, Any]:
    return {"ring": ring.to_dict(), "width": "empty" if width is None else width}


def dumps_json(payload: Any) -> str:
    """Stable text form: two-space indent, insertion-ordered keys, trailing newline."""

    return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"


def write_json(payload: Any, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as handle:
        handle.write(dumps_json(payload))
    return path
