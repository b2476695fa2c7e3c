"""Explicit complex families and the seeded scrambler."""

from .families import acyclic_pair, f_n, two_term
from .koszul import (
    glue_matrix,
    glue_signs,
    iterated_koszul,
    koszul,
    koszul_cone_map,
    koszul_differential,
    multi_iterated_koszul,
)
from .scramble import (
    DEFAULT_COEFFICIENT_BOUND,
    DEFAULT_OPS,
    PlannedSummand,
    PlantedDecomposition,
    SummandKind,
    planned_sum,
    random_coefficient,
    random_plan,
    random_torsion_element,
    random_unimodular,
    scramble,
    scrambled_sum,
)

__all__ = [
    "DEFAULT_COEFFICIENT_BOUND",
    "DEFAULT_OPS",
    "PlannedSummand",
    "PlantedDecomposition",
    "SummandKind",
    "acyclic_pair",
    "f_n",
    "glue_matrix",
    "glue_signs",
    "iterated_koszul",
    "koszul",
    "koszul_cone_map",
    "koszul_differential",
    "multi_iterated_koszul",
    "planned_sum",
    "random_coefficient",
    "random_plan",
    "random_torsion_element",
    "random_unimodular",
    "scramble",
    "scrambled_sum",
    "two_term",
]
