"""Exact curvature and Douglas/Berwald classification of left-invariant
Randers metrics on low-dimensional Lie groups."""

__version__ = "0.1.0"

from .algebra import AlgebraVector, LieAlgebra, Subspace, catalog
from .classify import (
    CaseReport,
    Classification,
    RandersClass,
    classify_randers,
    douglas_subspace,
    is_berwald,
    is_douglas,
    reproduce_theorem,
)
from .definition import (
    DefinitionError,
    DefinitionFile,
    load_definition,
    parse_definition,
    save_definition,
    serialize_definition,
)
from .errors import (
    DegenerateFlag,
    DegeneratePlane,
    DimensionMismatch,
    LieRandersError,
    NormTooLarge,
    NotDouglas,
    ZeroDirection,
)
from .flagcurv import (
    Flag,
    FlagCurvatureResult,
    flag_curvature_case,
    flag_curvature_deng_hou,
    flag_curvature_simplified,
    sign_analysis,
    u_map,
)
from .hypercomplex import (
    ComplexStructureTriple,
    find_signed_permutation_triples,
    nijenhuis,
    verify_complex_structure,
    verify_hyper_hermitian,
    verify_hypercomplex,
)
from .randers import RandersStructure, eval_F, fundamental_tensor, g_V, make_randers
from .riemann import (
    ConnectionTable,
    CurvatureTable,
    MetricTensor,
    ad_star,
    curvature_tensor,
    identity_metric,
    inner,
    levi_civita,
    orthogonal_complement,
    sectional_curvature,
)
from .sweep import SweepResult, run_sweep

__all__ = [
    "AlgebraVector",
    "CaseReport",
    "Classification",
    "ComplexStructureTriple",
    "ConnectionTable",
    "CurvatureTable",
    "DefinitionError",
    "DefinitionFile",
    "DegenerateFlag",
    "DegeneratePlane",
    "DimensionMismatch",
    "Flag",
    "FlagCurvatureResult",
    "LieAlgebra",
    "LieRandersError",
    "MetricTensor",
    "NormTooLarge",
    "NotDouglas",
    "RandersClass",
    "RandersStructure",
    "Subspace",
    "SweepResult",
    "ZeroDirection",
    "ad_star",
    "catalog",
    "classify_randers",
    "curvature_tensor",
    "douglas_subspace",
    "eval_F",
    "find_signed_permutation_triples",
    "flag_curvature_case",
    "flag_curvature_deng_hou",
    "flag_curvature_simplified",
    "fundamental_tensor",
    "g_V",
    "identity_metric",
    "inner",
    "is_berwald",
    "is_douglas",
    "levi_civita",
    "load_definition",
    "make_randers",
    "nijenhuis",
    "orthogonal_complement",
    "parse_definition",
    "reproduce_theorem",
    "run_sweep",
    "save_definition",
    "sectional_curvature",
    "serialize_definition",
    "sign_analysis",
    "u_map",
    "verify_complex_structure",
    "verify_hyper_hermitian",
    "verify_hypercomplex",
]
