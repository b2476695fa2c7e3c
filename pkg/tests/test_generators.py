import random
from itertools import product
from math import comb

import pytest

from perfect_complexes.complexes import (
    ChainComplex,
    cohomology,
    field_dimensions,
    reduce_mod_maximal,
    validate,
)
from perfect_complexes.errors import UnsupportedRingError
from perfect_complexes.generators import (
    PlannedSummand,
    acyclic_pair,
    f_n,
    glue_matrix,
    glue_signs,
    iterated_koszul,
    koszul,
    multi_iterated_koszul,
    random_plan,
    random_unimodular,
    scrambled_sum,
)
from perfect_complexes.parsers import parse_ring
from perfect_complexes.rings import Matrix, RingDescriptor, RingElement

ZZ = parse_ring("int")
LOCAL2 = parse_ring("q-local:2")


def local(n: int) -> RingDescriptor:
    return parse_ring(f"q-local:{n}")


def valuations(m: Matrix):
    return {entry.valuation() for _, _, entry in m.iter_entries() if not entry.is_zero}


@pytest.mark.parametrize("n", range(1, 7))
def test_koszul_ranks_are_binomials(n):
    k = koszul(local(n))
    assert k.min_deg == -n
    assert k.ranks == tuple(comb(n, p) for p in range(n, -1, -1))
    assert validate(k)
    assert field_dimensions(reduce_mod_maximal(k)) == {-p: comb(n, p) for p in range(n + 1)}


def test_koszul_in_two_variables():
    k = koszul(LOCAL2)
    x, y = RingElement.variable(LOCAL2, 0), RingElement.variable(LOCAL2, 1)
    assert k.differential(-2) == Matrix.from_rows(LOCAL2, [[-y], [x]])
    assert k.differential(-1) == Matrix.from_rows(LOCAL2, [[x, y]])


def test_koszul_over_a_univariate_polynomial_ring():
    ring = parse_ring("q[x]")
    k = koszul(ring)
    assert k.ranks == (1, 1)
    assert k.differential(-1) == Matrix.from_rows(ring, [[RingElement.variable(ring)]])


@pytest.mark.parametrize("n", range(1, 13))
def test_f_n_shape_and_valuations(n):
    c = f_n(LOCAL2, n)
    assert c.min_deg == -n and c.max_deg == 0
    assert c.ranks == (2,) * n + (1,)
    assert validate(c)
    assert valuations(c.differential(-1)) == {1}
    for degree in range(-n, -1):
        assert valuations(c.differential(degree)) == {2}
    reduced = reduce_mod_maximal(c)
    assert all(d.is_zero() for _, d in reduced.iter_differentials())


def test_f_n_rejects_bad_input():
    with pytest.raises(ValueError):
        f_n(LOCAL2, 0)
    with pytest.raises(UnsupportedRingError):
        f_n(ZZ, 2)


def test_iterated_koszul_in_two_variables():
    c = iterated_koszul(LOCAL2)
    assert c.min_deg == -3
    assert c.ranks == (1, 2, 2, 1)
    assert validate(c)
    interior = f_n(LOCAL2, 2).differential(-2)
    assert glue_matrix(LOCAL2, glue_signs(LOCAL2)) == -interior


@pytest.mark.parametrize("n", range(2, 6))
def test_iterated_koszul_validates(n):
    c = iterated_koszul(local(n))
    assert validate(c)
    assert c.min_deg == -(2 * n - 1) and c.max_deg == 0
    assert c.rank(c.min_deg) == 1 and c.rank(0) == 1


@pytest.mark.parametrize("n", [3, 4])
def test_iterated_koszul_glue_has_valuation_two(n):
    ring = local(n)
    c = iterated_koszul(ring)
    assert validate(c)
    assert c.length == 2 * n - 1
    assert valuations(glue_matrix(ring, glue_signs(ring))) == {2}


@pytest.mark.parametrize("n,m", list(product(range(2, 5), range(1, 5))))
def test_multi_iterated_koszul_lengths(n, m):
    ring = local(n)
    c = multi_iterated_koszul(ring, m)
    assert validate(c)
    assert c.length == 2 * n - 1 + (m - 1) * (n - 1)
    assert c.rank(c.max_deg) == 1
    assert all(min(valuations(d)) >= 1 for _, d in c.iter_differentials())
    glue = glue_matrix(ring, glue_signs(ring))
    assert min(valuations(glue)) >= 2
    for junction in range(m):
        degree = c.min_deg + (junction + 1) * (n - 1)
        assert c.differential(degree) == glue


def test_multi_iterated_koszul_base_case_is_iterated():
    assert multi_iterated_koszul(LOCAL2, 1) == iterated_koszul(LOCAL2)
    with pytest.raises(ValueError):
        multi_iterated_koszul(LOCAL2, 0)


def test_acyclic_pair_needs_a_unit():
    pair = acyclic_pair(LOCAL2, 0, RingElement.parse(LOCAL2, "1 + x"))
    assert pair.ranks == (1, 1)
    with pytest.raises(ValueError):
        acyclic_pair(LOCAL2, 0, RingElement.variable(LOCAL2))


def test_scrambled_sum_without_operations_is_the_planned_sum():
    plan = [
        PlannedSummand.cyclic(0, RingElement.of(ZZ, 2)),
        PlannedSummand.cyclic(0, RingElement.of(ZZ, 3)),
    ]
    planted = scrambled_sum(ZZ, plan, seed=7, ops=0)
    assert planted.complex.min_deg == -1
    assert planted.complex.differential(-1) == Matrix.from_rows(ZZ, [[2, 0], [0, 3]])
    assert planted.complex == planted.unscrambled()


def test_scrambled_sum_of_a_free_piece_is_single_term():
    planted = scrambled_sum(ZZ, [PlannedSummand.free(0)], seed=3)
    assert planted.complex.trimmed() == ChainComplex.single(ZZ, 0, 1)


def test_scrambled_sum_is_deterministic_and_keeps_cohomology():
    ring = parse_ring("gf:5[x]")
    x = RingElement.variable(ring)
    plan = [
        PlannedSummand.cyclic(0, x * x + 1),
        PlannedSummand.cyclic(1, x),
        PlannedSummand.free(0),
    ]
    first = scrambled_sum(ring, plan, seed=11)
    second = scrambled_sum(ring, plan, seed=11)
    assert first.complex == second.complex
    assert validate(first.complex)
    assert cohomology(first.complex).same_as(cohomology(first.unscrambled()))


def test_planned_summands_reject_units_and_zero():
    with pytest.raises(ValueError):
        PlannedSummand.cyclic(0, RingElement.of(ZZ, -1))
    with pytest.raises(ValueError):
        PlannedSummand.cyclic(0, RingElement.of(ZZ, 0))


def test_scrambled_sum_refuses_non_pid_rings():
    with pytest.raises(UnsupportedRingError):
        scrambled_sum(LOCAL2, [PlannedSummand.free(0)], seed=1)
    with pytest.raises(ValueError):
        scrambled_sum(ZZ, [], seed=1)


def test_random_unimodular_returns_its_inverse():
    rng = random.Random(5)
    p, p_inv = random_unimodular(ZZ, 4, rng, ops=12, bound=3)
    assert p @ p_inv == Matrix.identity(ZZ, 4)
    assert p_inv @ p == Matrix.identity(ZZ, 4)


def test_random_plans_respect_the_rank_bound():
    rng = random.Random(2)
    for _ in range(20):
        plan = random_plan(ZZ, rng, max_rank=4, degree_span=3, max_abs_d=9, max_poly_degree=2)
        assert 1 <= len(plan) <= 4
        assert all(0 <= piece.end_degree < 3 for piece in plan)
