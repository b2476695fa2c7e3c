"""Readers for the JSON documents written by :mod:`perfect_complexes.outputs`."""

from __future__ import annotations

import json
import logging
from collections.abc import Mapping
from pathlib import Path
from typing import Any, Dict, List

from ..complexes import ChainComplex, validate
from ..decomposition import DecompositionReport, RefinementLevel, Summand
from ..errors import ComplexToolkitError, InvalidComplexError, ParseError
from ..generators import PlannedSummand, PlantedDecomposition, SummandKind
from ..irreducibility import DifferentialCheck, IrreducibilityCertificate, Verdict
from ..rings import Matrix, RingDescriptor, RingElement

LOGGER = logging.getLogger(__name__)


def load_json(path: Path) -> Any:
    path = Path(path)
    try:
        with path.open("r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc


def _require(data: Any, key: str, kind: type, where: str) -> Any:
    if not isinstance(data, Mapping) or key not in data:
        raise ParseError(f"{where} is missing the {key!r} field")
    value = data[key]
    if not isinstance(value, kind) or isinstance(value, bool) and kind is not bool:
        raise ParseError(f"{where}.{key} must be {kind.__name__}, got {value!r}")
    return value


def ring_from_dict(data: Any) -> RingDescriptor:
    if not isinstance(data, Mapping):
        raise ParseError(f"ring descriptors are objects with a 'kind', got {data!r}")
    try:
        return RingDescriptor.from_dict(dict(data))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"invalid ring descriptor {data!r}: {exc}") from exc


def _degree_map(data: Any, where: str) -> Dict[int, Any]:
    if not isinstance(data, Mapping):
        raise ParseError(f"{where} must map degrees to values")
    result: Dict[int, Any] = {}
    for key, value in data.items():
        try:
            result[int(key)] = value
        except ValueError as exc:
            raise ParseError(f"{where} key {key!r} is not a degree") from exc
    return result


def _matrix(ring: RingDescriptor, rows: Any, nrows: int, ncols: int, where: str) -> Matrix:
    if not isinstance(rows, list) or any(not isinstance(row, list) for row in rows):
        raise ParseError(f"{where} must be a list of rows")
    entries: List[List[RingElement]] = [
        [RingElement.from_json(ring, value) for value in row] for row in rows
    ]
    if len(entries) != nrows or any(len(row) != ncols for row in entries):
        found = (len(entries), len(entries[0]) if entries else 0)
        raise ParseError(f"{where} has shape {found}, expected {(nrows, ncols)}")
    return Matrix.from_lists(ring, entries, ncols)


def complex_from_dict(data: Any, check: bool = True) -> ChainComplex:
    """Read a complex document; planted documents are unwrapped through their ``complex``.

    With ``check`` the complex must satisfy ``d∘d = 0``; shapes are always
    checked.
    """

    if isinstance(data, Mapping) and "complex" in data:
        data = data["complex"]
    ring = ring_from_dict(_require(data, "ring", Mapping, "complex"))
    min_deg = _require(data, "min_deg", int, "complex")
    max_deg = _require(data, "max_deg", int, "complex")
    if max_deg < min_deg:
        raise ParseError(f"max_deg {max_deg} is below min_deg {min_deg}")
    ranks_map = _degree_map(_require(data, "ranks", Mapping, "complex"), "ranks")
    diffs_map = _degree_map(_require(data, "diffs", Mapping, "complex"), "diffs")

    degrees = range(min_deg, max_deg + 1)
    if set(ranks_map) != set(degrees):
        raise ParseError(f"ranks must list every degree from {min_deg} to {max_deg}")
    ranks = []
    for d in degrees:
        rank = ranks_map[d]
        if not isinstance(rank, int) or isinstance(rank, bool) or rank < 0:
            raise ParseError(f"rank at degree {d} must be a nonnegative integer, got {rank!r}")
        ranks.append(rank)
    if set(diffs_map) != set(range(min_deg, max_deg)):
        raise ParseError(f"diffs must list every degree from {min_deg} to {max_deg - 1}")

    try:
        diffs = tuple(
            _matrix(ring, diffs_map[d], ranks_map[d + 1], ranks_map[d], f"diffs[{d}]")
            for d in range(min_deg, max_deg)
        )
        c = ChainComplex(ring, min_deg, tuple(ranks), diffs)
    except ParseError:
        raise
    except (ComplexToolkitError, ValueError) as exc:
        raise ParseError(str(exc)) from exc

    if check:
        verdict = validate(c)
        if not verdict:
            raise InvalidComplexError(verdict)
    LOGGER.debug("Read %s", c)
    return c


def load_complex(path: Path, check: bool = True) -> ChainComplex:
    return complex_from_dict(load_json(path), check=check)


def planted_from_dict(data: Any) -> PlantedDecomposition:
    ring = ring_from_dict(_require(data, "ring", Mapping, "planted"))
    summands = []
    for item in _require(data, "summands", list, "planted"):
        end_degree = _require(item, "end_degree", int, "summand")
        try:
            kind = SummandKind(_require(item, "kind", str, "summand"))
            if kind is SummandKind.FREE:
                summands.append(PlannedSummand.free(end_degree))
            else:
                d = RingElement.from_json(ring, item.get("d"))
                summands.append(PlannedSummand.cyclic(end_degree, d))
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
    return PlantedDecomposition(
        ring,
        tuple(summands),
        _require(data, "scramble_seed", int, "planted"),
        _require(data, "ops", int, "planted"),
        complex_from_dict(_require(data, "complex", Mapping, "planted")),
    )


def report_from_dict(data: Any) -> DecompositionReport:
    ring = ring_from_dict(_require(data, "ring", Mapping, "report"))
    try:
        level = RefinementLevel(_require(data, "refinement", str, "report"))
    except ValueError as exc:
        raise ParseError(f"unknown refinement level: {exc}") from exc
    summands = []
    for item in _require(data, "summands", list, "report"):
        end_degree = _require(item, "end_degree", int, "summand")
        kind = _require(item, "kind", str, "summand")
        try:
            if kind == SummandKind.FREE.value:
                summands.append(Summand.free(end_degree, _require(item, "rank", int, "summand")))
            elif kind == SummandKind.CYCLIC.value:
                d = RingElement.from_json(ring, _require(item, "d", object, "summand"))
                summands.append(Summand.cyclic(end_degree, d))
            else:
                raise ParseError(f"summand kind must be free or cyclic, got {kind!r}")
        except ParseError:
            raise
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
    return DecompositionReport.of(ring, summands, level)


def certificate_from_dict(data: Any) -> IrreducibilityCertificate:
    ring = ring_from_dict(_require(data, "ring", Mapping, "certificate"))
    try:
        verdict = Verdict(_require(data, "verdict", str, "certificate"))
    except ValueError as exc:
        raise ParseError(f"unknown verdict: {exc}") from exc
    checks = []
    for item in _require(data, "checks", list, "certificate"):
        shape = _require(item, "induced_shape", list, "check")
        if len(shape) != 2 or not all(isinstance(v, int) for v in shape):
            raise ParseError(f"induced_shape must be [rows, cols], got {shape!r}")
        checks.append(
            DifferentialCheck(
                _require(item, "degree", int, "check"),
                _require(item, "s", int, "check"),
                _require(item, "injectivity_rank", int, "check"),
                (shape[0], shape[1]),
            )
        )
    refusal_degree = data.get("refusal_degree")
    if refusal_degree is not None and not isinstance(refusal_degree, int):
        raise ParseError(f"refusal_degree must be an integer or null, got {refusal_degree!r}")
    return IrreducibilityCertificate(
        ring,
        _require(data, "min_deg", int, "certificate"),
        tuple(_require(data, "ranks", list, "certificate")),
        _require(data, "top_degree", int, "certificate"),
        tuple(checks),
        verdict,
        refusal_degree,
        str(data.get("reason", "")),
    )


def load_certificate(path: Path) -> IrreducibilityCertificate:
    return certificate_from_dict(load_json(path))
