"""Finite-group models for strong multiplicity one density bounds."""

from .bounds import (
    BoundDerivation,
    MomentTable,
    best_bound,
    bound_cseq,
    bound_eq4,
    moment_table_from_model,
    scenario,
)
from .catalog import CatalogEntry, build_example, list_catalog, sharpness_search
from .characters import (
    CharacterTable,
    ClassFunction,
    VirtualCharacter,
    adjoint_character,
    alt_square,
    character_table,
    decompose,
    dual,
    inner_product,
    is_essentially_self_dual,
    is_irreducible,
    is_monomial,
    is_self_dual,
    lemma_check_linear,
    self_twists,
    summand_multiplicity,
    sym_power,
    tensor,
)
from .chebotarev import (
    DensityReport,
    HeckeSample,
    PlaceStream,
    dirichlet_sum,
    empirical_lower_density,
    exact_density,
    hecke_stream,
    pole_order_estimate,
)
from .cyclotomic import CyclotomicNumber, zeta
from .groups import (
    ConjugacyClass,
    CycloMatrix,
    FiniteGroup,
    Permutation,
    central_quotient_or_center,
    conjugacy_classes,
    group_from_generators,
    projective_image_order,
)

__version__ = "0.1.0"
