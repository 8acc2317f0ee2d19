"""Exact-arithmetic stability data for torus actions, combinatorics of scaled
marked curves, and truncated gauged-potential series."""

from .algebra import (
    BinomialPresentation,
    BinomialRelation,
    MultiPoly,
    RationalFunction,
    TruncatedSeries,
    normal_form,
    normal_form_monomial,
    poly_arith,
    series_arith,
)
from .curves import (
    DivisorPairing,
    EdgeParams,
    RhoImage,
    ScaledType,
    Violation,
    affine_two_marking_coordinate,
    check_balanced,
    divisor_pairs,
    enumerate_types,
    rho_image,
    stratum_dimension,
    term,
    validate,
)
from .mundet import (
    FiltrationData,
    GaugedMapData,
    MUNDET_WEIGHT_INFINITE,
    MundetStatus,
    MundetVerdict,
    mundet_classify,
    mundet_total_weight,
    mundet_weight_toric,
    quot_moduli_dimension,
    ramanathan_weight,
    section_space_dimension,
)
from .potentials import (
    CrepancyResult,
    FramedSheafSpec,
    LinearActionSpec,
    PresentationResult,
    age,
    batyrev_presentation,
    crepancy_check,
    delta_factor,
    framed_sheaf_fundamental_solution,
    localized_potential,
    qde_residual_cohomological,
    qde_residual_ktheoretic,
    qh_presentation,
    qk_presentation,
)
from .stability import (
    KNStratum,
    Stability,
    StabilityVerdict,
    SupportSet,
    WeightSystem,
    classify,
    hm_weight,
    kn_strata,
)

__version__ = "0.1.0"

__all__ = [
    "BinomialPresentation",
    "BinomialRelation",
    "CrepancyResult",
    "DivisorPairing",
    "EdgeParams",
    "FiltrationData",
    "FramedSheafSpec",
    "GaugedMapData",
    "KNStratum",
    "LinearActionSpec",
    "MUNDET_WEIGHT_INFINITE",
    "MultiPoly",
    "MundetStatus",
    "MundetVerdict",
    "PresentationResult",
    "RationalFunction",
    "RhoImage",
    "ScaledType",
    "Stability",
    "StabilityVerdict",
    "SupportSet",
    "TruncatedSeries",
    "Violation",
    "WeightSystem",
    "affine_two_marking_coordinate",
    "age",
    "batyrev_presentation",
    "check_balanced",
    "classify",
    "crepancy_check",
    "delta_factor",
    "divisor_pairs",
    "enumerate_types",
    "framed_sheaf_fundamental_solution",
    "hm_weight",
    "kn_strata",
    "localized_potential",
    "mundet_classify",
    "mundet_total_weight",
    "mundet_weight_toric",
    "normal_form",
    "normal_form_monomial",
    "poly_arith",
    "qde_residual_cohomological",
    "qde_residual_ktheoretic",
    "qh_presentation",
    "qk_presentation",
    "quot_moduli_dimension",
    "ramanathan_weight",
    "rho_image",
    "section_space_dimension",
    "series_arith",
    "stratum_dimension",
    "term",
    "validate",
]
