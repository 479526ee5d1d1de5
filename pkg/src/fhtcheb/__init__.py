"""Spectral finite Hilbert transform on (-1, 1), with cosh/cos-weighted inversion."""

from .errors import (
    DomainError,
    FhtChebError,
    GridMismatchError,
    InvalidSizeError,
    ParameterError,
    ReducedAccuracyWarning,
)
from .grids import (
    MAX_DEGREE,
    Basis,
    ChebCoeffs,
    Grid,
    GridFn,
    GridKind,
    ResampleMode,
    Role,
    Space,
    cgl_nodes,
    cheb_eval,
    inner_product,
    norm,
    resample,
    weight_w,
)
from .transforms import TransformKind, TransformMatrix, apply, build
from .fht import (
    Flavor,
    PlancherelReport,
    coeffs_from_sgrid,
    coeffs_from_tgrid,
    fht_forward_d,
    fht_forward_m,
    fht_inverse_d,
    fht_inverse_m,
    plancherel_check,
    range_defect,
)
from .cosh import (
    ConditionEstimate,
    DiagWeights,
    KernelFn,
    NullExperimentRow,
    SolveReport,
    WeightFlavor,
    WeightParam,
    condition_estimate,
    cosh_forward,
    cosh_invert_direct,
    cosh_invert_mean_constrained,
    cosh_invert_neumann,
    diag_weights,
    kernel,
    null_experiment,
    system_matrix,
)
from .oracle import AnalyticPair, cosh_pv_forward, pair, pv_fht, pv_reciprocal_weight

__version__ = "0.1.0"

__all__ = [
    "AnalyticPair",
    "Basis",
    "ChebCoeffs",
    "ConditionEstimate",
    "DiagWeights",
    "DomainError",
    "FhtChebError",
    "Flavor",
    "Grid",
    "GridFn",
    "GridKind",
    "GridMismatchError",
    "InvalidSizeError",
    "KernelFn",
    "MAX_DEGREE",
    "NullExperimentRow",
    "ParameterError",
    "PlancherelReport",
    "ReducedAccuracyWarning",
    "ResampleMode",
    "Role",
    "SolveReport",
    "Space",
    "TransformKind",
    "TransformMatrix",
    "WeightFlavor",
    "WeightParam",
    "apply",
    "build",
    "cgl_nodes",
    "cheb_eval",
    "coeffs_from_sgrid",
    "coeffs_from_tgrid",
    "condition_estimate",
    "cosh_forward",
    "cosh_invert_direct",
    "cosh_invert_mean_constrained",
    "cosh_invert_neumann",
    "cosh_pv_forward",
    "diag_weights",
    "fht_forward_d",
    "fht_forward_m",
    "fht_inverse_d",
    "fht_inverse_m",
    "inner_product",
    "kernel",
    "norm",
    "null_experiment",
    "pair",
    "plancherel_check",
    "pv_fht",
    "pv_reciprocal_weight",
    "range_defect",
    "resample",
    "system_matrix",
    "weight_w",
]
