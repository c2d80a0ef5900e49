"""Exact dictionary between tt*-Toda exponents, Stokes data, affine dominant
weights and W-algebra minimal-model data, plus a radial Toda integrator."""

from .errors import NumericalError, ValidationError
from .fusion import (
    SpecialElement,
    character_value,
    in_fusion_ideal,
    special_element,
    verify_zeta_identity,
    zeta,
)
from .lie import (
    CartanVector,
    alcove_classify,
    bilinear_form,
    enumerate_P_k,
    epsilon,
    rho,
    theta,
    verify_lemma_pk,
)
from .minimal import (
    KString,
    MinimalModelSpec,
    OperatorString,
    PrimaryField,
    central_charge,
    centre_act,
    conformal_dim,
    enumerate_primaries,
    fn_central_charge,
    fn_conformal_dim,
    mu,
    necklace_count,
    nonunitarity_scan,
    operator_string,
)
from .ode import TodaState, TodaTrajectory, init_asymptotic, integrate, radial_rhs
from .params import (
    KParams,
    MParams,
    StokesParams,
    char_poly_from_stokes,
    k_from_m,
    m_from_k,
    m_from_stokes,
    monodromy_eigenvalues,
    polytope_status,
    stokes_from_m,
)
from .reps import AffineDominantWeight, classify_m, k_from_weight, verify_main_theorem, weight_from_k

__version__ = "0.1.0"

__all__ = [
    "NumericalError",
    "ValidationError",
    "SpecialElement",
    "character_value",
    "in_fusion_ideal",
    "special_element",
    "verify_zeta_identity",
    "zeta",
    "CartanVector",
    "alcove_classify",
    "bilinear_form",
    "enumerate_P_k",
    "epsilon",
    "rho",
    "theta",
    "verify_lemma_pk",
    "KString",
    "MinimalModelSpec",
    "OperatorString",
    "PrimaryField",
    "central_charge",
    "centre_act",
    "conformal_dim",
    "enumerate_primaries",
    "fn_central_charge",
    "fn_conformal_dim",
    "mu",
    "necklace_count",
    "nonunitarity_scan",
    "operator_string",
    "TodaState",
    "TodaTrajectory",
    "init_asymptotic",
    "integrate",
    "radial_rhs",
    "KParams",
    "MParams",
    "StokesParams",
    "char_poly_from_stokes",
    "k_from_m",
    "m_from_k",
    "m_from_stokes",
    "monodromy_eigenvalues",
    "polytope_status",
    "stokes_from_m",
    "AffineDominantWeight",
    "classify_m",
    "k_from_weight",
    "verify_main_theorem",
    "weight_from_k",
]
