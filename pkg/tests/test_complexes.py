import pytest

from perfect_complexes.complexes import (
    ChainComplex,
    ChainMap,
    cone,
    cone_inclusion,
    cone_projection,
    conjugate,
    direct_sum,
    is_chain_map,
    reduce_mod_maximal,
    shift,
    truncate,
    validate,
)
from perfect_complexes.errors import ChainMapError, RingMismatchError, UnsupportedRingError
from perfect_complexes.generators import f_n, koszul, two_term
from perfect_complexes.parsers import parse_ring
from perfect_complexes.rings import Matrix, RingElement

ZZ = parse_ring("int")
LOCAL1 = parse_ring("q-local:1")
LOCAL2 = parse_ring("q-local:2")


def test_koszul_complex_validates():
    assert validate(koszul(LOCAL2))


def test_single_differential_validates():
    c = ChainComplex.from_differentials(ZZ, 0, [Matrix.from_rows(ZZ, [[1]])])
    assert validate(c).ok


def test_two_multiplications_by_x_violate_d_squared():
    x = RingElement.variable(LOCAL1)
    d = Matrix.from_rows(LOCAL1, [[x]])
    verdict = validate(ChainComplex.from_differentials(LOCAL1, 0, [d, d]))
    assert not verdict
    assert verdict.degree == 0
    assert verdict.position == (0, 0)
    assert "violation at degree 0" in str(verdict)


def test_validate_reports_shape_mismatch():
    bad = ChainComplex(ZZ, 0, (1, 2), (Matrix.from_rows(ZZ, [[1]]),))
    verdict = validate(bad)
    assert not verdict
    assert "shape" in verdict.message


def test_shift_identities():
    c = f_n(LOCAL2, 2)
    assert shift(c, 0) == c
    assert shift(shift(c, 1), -1) == c
    moved = shift(ChainComplex.single(ZZ, 0, 3), 2)
    assert moved.min_deg == -2
    assert moved.rank(-2) == 3
    assert moved.diffs == ()


def test_shift_by_one_negates_differentials():
    c = two_term(ZZ, 0, 5)
    assert shift(c, 1).differential(-2) == Matrix.from_rows(ZZ, [[-5]])


def test_direct_sum_adds_ranks_and_keeps_validity():
    f2 = f_n(LOCAL2, 2)
    total = direct_sum(f2, f2)
    assert total.rank(0) == 2
    assert total.rank(-1) == 4
    assert validate(total)
    assert direct_sum(ChainComplex.empty(LOCAL2), f2) == f2
    assert direct_sum(f2, ChainComplex.empty(LOCAL2)) == f2


def test_direct_sum_rejects_mixed_rings():
    with pytest.raises(RingMismatchError):
        direct_sum(ChainComplex.single(ZZ, 0, 1), ChainComplex.single(LOCAL2, 0, 1))


def test_cone_of_identity_on_single_term_is_acyclic_pair():
    c = ChainComplex.single(ZZ, 0, 1)
    result = cone(ChainMap(c, c, {0: Matrix.identity(ZZ, 1)}))
    assert result.trimmed().ranks == (1, 1)
    assert result.trimmed().differential(-1) == Matrix.identity(ZZ, 1)


def test_cone_rejects_non_chain_maps():
    k = koszul(LOCAL2)
    bogus = ChainMap(k, k, {-1: Matrix.identity(LOCAL2, 2)})
    assert not is_chain_map(bogus)
    with pytest.raises(ChainMapError):
        cone(bogus)


def test_cone_inclusion_and_projection_are_chain_maps():
    k = koszul(LOCAL2)
    identity = ChainMap(k, k, {d: Matrix.identity(LOCAL2, k.rank(d)) for d in k.degrees()})
    assert validate(cone(identity))
    assert is_chain_map(cone_inclusion(identity))
    assert is_chain_map(cone_projection(identity))


def test_cone_of_zero_map_is_a_direct_sum_up_to_sign():
    a = two_term(ZZ, 0, 2)
    b = two_term(ZZ, 0, 3)
    result = cone(ChainMap(a, b, {}))
    assert result.trimmed().rank_vector() == direct_sum(shift(a, 1), b).trimmed().rank_vector()
    assert validate(result)


def test_truncate():
    f3 = f_n(LOCAL2, 3)
    assert truncate(f3, f3.min_deg) == f3
    cut = truncate(f3, -1)
    assert cut.min_deg == -1
    assert cut.ranks == (2, 1)
    assert validate(cut)
    with pytest.raises(ValueError):
        truncate(f3, 1)


def test_reduce_mod_maximal_kills_minimal_differentials():
    reduced = reduce_mod_maximal(f_n(LOCAL2, 3))
    assert reduced.ring == parse_ring("q")
    assert reduced.ranks == (2, 2, 2, 1)
    assert all(d.is_zero() for _, d in reduced.iter_differentials())


def test_reduce_mod_maximal_takes_residues():
    one_plus_x = RingElement.parse(LOCAL1, "1 + x")
    c = ChainComplex.from_differentials(LOCAL1, 0, [Matrix.from_rows(LOCAL1, [[one_plus_x]])])
    reduced = reduce_mod_maximal(c)
    assert reduced.differential(0) == Matrix.identity(parse_ring("q"), 1)


def test_reduce_mod_maximal_requires_local_ring():
    with pytest.raises(UnsupportedRingError):
        reduce_mod_maximal(two_term(ZZ, 0, 2))


def test_conjugate_by_unimodular_change_keeps_validity():
    c = two_term(ZZ, 0, 6)
    p = Matrix.from_rows(ZZ, [[-1]])
    changed = conjugate(c, {0: (p, p)})
    assert changed.differential(-1) == Matrix.from_rows(ZZ, [[-6]])
    assert validate(changed)


def test_shape_queries():
    f3 = f_n(LOCAL2, 3)
    assert f3.length == 3
    assert f3.support() == (-3, 0)
    assert f3.rank_vector() == (2, 2, 2, 1)
    assert f3.euler_characteristic() == -2 + 2 - 2 + 1
    empty = ChainComplex.empty(ZZ)
    assert empty.is_empty
    assert empty.length is None
    padded = ChainComplex(ZZ, -2, (0, 1, 0), (Matrix.zero(ZZ, 1, 0), Matrix.zero(ZZ, 0, 1)))
    assert padded.trimmed() == ChainComplex.single(ZZ, -1, 1)
