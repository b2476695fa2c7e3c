import pytest

from perfect_complexes.complexes import (
    ChainComplex,
    ChainMap,
    cohomology,
    cone,
    direct_sum,
    validate,
)
from perfect_complexes.errors import InvalidComplexError, UnsupportedRingError
from perfect_complexes.generators import (
    acyclic_pair,
    f_n,
    iterated_koszul,
    koszul,
    koszul_cone_map,
    multi_iterated_koszul,
    scramble,
    two_term,
)
from perfect_complexes.minimization import (
    ScanOrder,
    is_minimal,
    minimize,
    residue_betti_numbers,
    width,
)
from perfect_complexes.parsers import parse_ring
from perfect_complexes.rings import Matrix, RingElement

LOCAL2 = parse_ring("q-local:2")
ZP = parse_ring("int-local:3")


def padded_f_n(n: int, seed: int) -> ChainComplex:
    """``f_n`` plus an acyclic pair, conjugated so the unit is hidden."""

    padded = direct_sum(f_n(LOCAL2, n), acyclic_pair(LOCAL2, -1))
    return scramble(padded, seed, ops=6, coefficient_bound=1)


def assert_betti_identity(c: ChainComplex) -> None:
    result, _ = minimize(c)
    assert residue_betti_numbers(c) == {d: result.rank(d) for d in c.degrees()}


def test_is_minimal():
    assert is_minimal(f_n(LOCAL2, 4))
    assert not is_minimal(acyclic_pair(LOCAL2, 0))
    assert is_minimal(ChainComplex.empty(LOCAL2))
    with pytest.raises(UnsupportedRingError):
        is_minimal(two_term(parse_ring("int"), 0, 2))


def test_minimize_splits_off_the_unit_pivot():
    x, y = RingElement.variable(LOCAL2, 0), RingElement.variable(LOCAL2, 1)
    d = Matrix.from_rows(LOCAL2, [[1, x], [0, y]])
    result, transcript = minimize(ChainComplex.from_differentials(LOCAL2, -1, [d]))
    assert result.ranks == (1, 1)
    assert result.differential(-1) == Matrix.from_rows(LOCAL2, [[y]])
    assert len(transcript.steps) == 1
    step = transcript.steps[0]
    assert (step.degree, step.position) == (-1, (0, 0))
    assert transcript.initial_ranks == {-1: 2, 0: 2}
    assert transcript.final_ranks == {-1: 1, 0: 1}


@pytest.mark.parametrize(
    "build",
    [
        lambda: f_n(LOCAL2, 3),
        lambda: koszul(LOCAL2),
        lambda: koszul(parse_ring("q-local:3")),
        lambda: iterated_koszul(LOCAL2),
        lambda: iterated_koszul(parse_ring("q-local:3")),
        lambda: multi_iterated_koszul(LOCAL2, 2),
        lambda: multi_iterated_koszul(LOCAL2, 3),
        lambda: multi_iterated_koszul(parse_ring("q-local:3"), 2),
    ],
    ids=["f_3", "koszul_2", "koszul_3", "iterated_2", "iterated_3", "multi_2_2", "multi_2_3", "multi_3_2"],
)
def test_minimal_input_is_returned_unchanged(build):
    c = build()
    assert is_minimal(c)
    result, transcript = minimize(c)
    assert result == c
    assert transcript.is_empty


def test_cone_of_identity_on_koszul_minimizes_to_empty():
    k = koszul(LOCAL2)
    identity = ChainMap(k, k, {d: Matrix.identity(LOCAL2, k.rank(d)) for d in k.degrees()})
    result, transcript = minimize(cone(identity))
    assert result.is_empty
    assert len(transcript.steps) == 4


def test_cone_of_koszul_self_map_minimizes_to_iterated_koszul_shape():
    result, _ = minimize(cone(koszul_cone_map(LOCAL2)))
    assert result.rank_vector() == iterated_koszul(LOCAL2).rank_vector() == (1, 2, 2, 1)
    assert validate(result)


def test_width():
    assert width(f_n(LOCAL2, 5)) == 5
    assert width(koszul(parse_ring("q-local:3"))) == 3
    assert width(acyclic_pair(LOCAL2, 0)) is None


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_padded_f_n_minimizes_back(seed):
    c = padded_f_n(3, seed)
    assert validate(c)
    result, transcript = minimize(c)
    assert result.rank_vector() == (2, 2, 2, 1)
    assert len(transcript.steps) == 1
    assert_betti_identity(c)


def test_minimize_is_idempotent():
    first, _ = minimize(padded_f_n(2, 4))
    second, transcript = minimize(first)
    assert second == first
    assert transcript.is_empty


def test_scan_orders_agree_on_rank_vectors():
    c = padded_f_n(2, 9)
    row, _ = minimize(c, ScanOrder.ROW)
    column, transcript = minimize(c, ScanOrder.COLUMN)
    assert row.rank_vector() == column.rank_vector()
    assert transcript.scan is ScanOrder.COLUMN


def test_betti_identity_on_generators():
    for c in (f_n(LOCAL2, 3), koszul(LOCAL2), iterated_koszul(LOCAL2)):
        assert_betti_identity(c)


def test_minimize_preserves_cohomology_over_localized_integers():
    c = direct_sum(two_term(ZP, 0, 6), acyclic_pair(ZP, 1, 2))
    c = direct_sum(c, two_term(ZP, 1, 9))
    c = scramble(c, 5, ops=10)
    result, _ = minimize(c)
    assert cohomology(result).same_as(cohomology(c))
    assert is_minimal(result)
    assert_betti_identity(c)


def test_minimize_rejects_invalid_complexes():
    x = RingElement.variable(LOCAL2, 0)
    d = Matrix.from_rows(LOCAL2, [[x]])
    with pytest.raises(InvalidComplexError):
        minimize(ChainComplex.from_differentials(LOCAL2, 0, [d, d]))
