"""Workbench for induced poset saturation in the Boolean lattice.

Families of subsets of [n] live in :mod:`posetsat.setfam`; chain-union and
Boolean-lattice targets are parsed and materialized in
:mod:`posetsat.posetspec`; induced-copy search, freeness and saturation
verification, the named constructions, set-pair-system checks, and the
exact tiny-scale solver fill out the rest.
"""

from .bollobas import (
    PairSystemError,
    SetPairSystem,
    bollobas_bound,
    classify_bottom,
    extract_pair_system,
    is_bollobas,
    is_skew_bollobas,
    transform_mc2_pairs,
)
from .constructs import (
    boolean_family,
    construct_2ck_c1,
    construct_b3,
    construct_mc2_binom,
    construct_mck,
)
from .embed import (
    BudgetExceededError,
    Embedding,
    WitnessMatrix,
    find_induced_copy,
    verify_embedding,
    witness_matrix,
)
from .posetspec import (
    BooleanBase,
    Chain,
    ComparabilityMatrix,
    PosetSpec,
    PosetSpecError,
    build_poset,
    parse_poset_spec,
    render_poset_spec,
)
from .setfam import (
    Family,
    FamilyFormatError,
    canonicalize_family,
    complement_family,
    elements_of,
    family_from_json,
    family_to_json,
    is_subset,
    mask_of,
)
from .solver import SolveResult, sat_star_exact
from .verify import (
    VerificationReport,
    exceptions,
    greedy_saturate,
    is_induced_p_free,
    is_saturated,
    verification_report,
)

__all__ = [
    "BooleanBase",
    "BudgetExceededError",
    "Chain",
    "ComparabilityMatrix",
    "Embedding",
    "Family",
    "FamilyFormatError",
    "PairSystemError",
    "PosetSpec",
    "PosetSpecError",
    "SetPairSystem",
    "SolveResult",
    "VerificationReport",
    "WitnessMatrix",
    "bollobas_bound",
    "boolean_family",
    "build_poset",
    "canonicalize_family",
    "classify_bottom",
    "complement_family",
    "construct_2ck_c1",
    "construct_b3",
    "construct_mc2_binom",
    "construct_mck",
    "elements_of",
    "exceptions",
    "extract_pair_system",
    "family_from_json",
    "family_to_json",
    "find_induced_copy",
    "greedy_saturate",
    "is_bollobas",
    "is_induced_p_free",
    "is_saturated",
    "is_skew_bollobas",
    "is_subset",
    "mask_of",
    "parse_poset_spec",
    "render_poset_spec",
    "sat_star_exact",
    "transform_mc2_pairs",
    "verification_report",
    "verify_embedding",
    "witness_matrix",
]
