import random

import pytest

from perfect_complexes.complexes import ChainComplex, cohomology, shift
from perfect_complexes.decomposition import (
    DecompositionReport,
    RefinementLevel,
    Summand,
    audit_width,
    decompose,
    planted_report,
    primary_refine,
    report_to_complex,
)
from perfect_complexes.errors import FactorizationUnsupportedError, UnsupportedRingError
from perfect_complexes.generators import f_n, koszul, random_plan, scrambled_sum, two_term
from perfect_complexes.parsers import parse_ring
from perfect_complexes.rings import Matrix, RingElement

ZZ = parse_ring("int")


def diag_2_3() -> ChainComplex:
    return ChainComplex.from_differentials(ZZ, -1, [Matrix.from_rows(ZZ, [[2, 0], [0, 3]])])


def cyclic(ring, end_degree, d):
    return Summand.cyclic(end_degree, RingElement.of(ring, d))


def test_decompose_diag_2_3():
    report = decompose(diag_2_3())
    assert report.summands == (cyclic(ZZ, 0, 6),)
    assert report.refinement_level is RefinementLevel.INVARIANT_FACTOR
    refined = primary_refine(report)
    assert refined.same_summands(DecompositionReport.of(ZZ, [cyclic(ZZ, 0, 2), cyclic(ZZ, 0, 3)]))
    assert refined.refinement_level is RefinementLevel.PRIMARY


def test_decompose_free_single_term():
    report = decompose(ChainComplex.single(ZZ, 2, 3))
    assert report.summands == (Summand.free(2, 3),)
    assert audit_width(report) == 0


def test_decompose_koszul_on_x():
    ring = parse_ring("q[x]")
    report = decompose(koszul(ring))
    assert report.summands == (Summand.cyclic(0, RingElement.variable(ring)),)
    assert audit_width(report) == 1


def test_prime_powers_stay_whole():
    report = DecompositionReport.of(ZZ, [cyclic(ZZ, 0, 4)])
    assert primary_refine(report).summands == (cyclic(ZZ, 0, 4),)


def test_primary_refinement_over_gf2():
    ring = parse_ring("gf:2[x]")
    report = DecompositionReport.of(ring, [Summand.cyclic(-1, RingElement.parse(ring, "x^2 + x"))])
    expected = DecompositionReport.of(
        ring,
        [
            Summand.cyclic(-1, RingElement.parse(ring, "x")),
            Summand.cyclic(-1, RingElement.parse(ring, "x + 1")),
        ],
        RefinementLevel.PRIMARY,
    )
    assert primary_refine(report).same_summands(expected)


def test_primary_refinement_is_refused_over_rational_polynomials():
    ring = parse_ring("q[x]")
    report = DecompositionReport.of(ring, [Summand.cyclic(0, RingElement.parse(ring, "x^2 - 1"))])
    with pytest.raises(FactorizationUnsupportedError):
        primary_refine(report)


def test_audit_width_of_empty_report():
    assert audit_width(DecompositionReport.of(ZZ, [])) is None
    assert decompose(two_term(ZZ, 0, -1)).is_empty


def test_cyclic_summands_are_canonical():
    assert cyclic(ZZ, 0, -6).d == RingElement.of(ZZ, 6)
    with pytest.raises(ValueError):
        cyclic(ZZ, 0, 1)


def test_decompose_requires_a_pid():
    with pytest.raises(UnsupportedRingError):
        decompose(f_n(parse_ring("q-local:2"), 2))


def test_decompose_commutes_with_shift():
    c = scrambled_sum(ZZ, _plan(ZZ, 3), seed=4).complex
    for k in (-1, 1, 2):
        assert decompose(shift(c, k)).same_summands(decompose(c).shifted(k))


def _plan(ring, seed):
    return random_plan(
        ring, random.Random(seed), max_rank=6, degree_span=4, max_abs_d=9, max_poly_degree=3
    )


@pytest.mark.parametrize("ring_text", ["int", "gf:5[x]"])
@pytest.mark.parametrize("seed", range(6))
def test_scrambled_sums_round_trip(ring_text, seed):
    ring = parse_ring(ring_text)
    planted = scrambled_sum(ring, _plan(ring, seed), seed=seed)
    report = decompose(planted.complex)
    assert audit_width(report) <= 1
    assert primary_refine(report).same_summands(planted_report(planted))
    assert cohomology(report_to_complex(report)).same_as(cohomology(planted.complex))
