"""Chain complexes of finite free modules and their cohomology."""

from .chain_complex import (
    ChainComplex,
    ChainMap,
    ValidationResult,
    conjugate,
    cone,
    cone_inclusion,
    cone_projection,
    direct_sum,
    is_chain_map,
    reduce_mod_maximal,
    shift,
    truncate,
    validate,
)
from .cohomology import CohomologyReport, DegreeCohomology, cohomology, field_dimensions, is_acyclic

__all__ = [
    "ChainComplex",
    "ChainMap",
    "CohomologyReport",
    "DegreeCohomology",
    "ValidationResult",
    "cohomology",
    "cone",
    "cone_inclusion",
    "cone_projection",
    "conjugate",
    "direct_sum",
    "field_dimensions",
    "is_acyclic",
    "is_chain_map",
    "reduce_mod_maximal",
    "shift",
    "truncate",
    "validate",
]
