from .common import StationaryLimit, block_ratio, scale_limit, stationary_limit
from .dual import DualTable, asymmetric_entries, phi_dual_expand, sigma_key, tuple_sigma_series
from .ecs import additive_ratio, alpha_ecs, f_ecs, f_ecs_stationary, gt_series, psi0
from .evaluation import (
    EvaluationResult,
    evaluation_closed_form,
    evaluation_compare,
    evaluation_partial_sums,
)
from .macdonald import (
    c_closed,
    c_coefficient,
    c_recursive,
    enumerate_thetas,
    f_macdonald,
    macdonald_dual_table,
    macdonald_prefactor,
    phi_macdonald,
    theta_key,
)
from .params import ParamPoint
from .ruijsenaars import (
    alpha_const,
    f_hat,
    f_hat_kappa0,
    f_stationary,
    normalizing_prefactor,
    phi_hat,
)
from .tags import FunctionTag, build_function
from .toda import alpha_toda, f_toda, f_toda_stationary, f_toda_zero

__all__ = [
    "ParamPoint",
    "FunctionTag",
    "build_function",
    "StationaryLimit",
    "block_ratio",
    "scale_limit",
    "stationary_limit",
    "f_hat",
    "f_hat_kappa0",
    "phi_hat",
    "normalizing_prefactor",
    "alpha_const",
    "f_stationary",
    "f_macdonald",
    "phi_macdonald",
    "macdonald_prefactor",
    "macdonald_dual_table",
    "c_closed",
    "c_recursive",
    "c_coefficient",
    "enumerate_thetas",
    "theta_key",
    "f_toda",
    "f_toda_zero",
    "alpha_toda",
    "f_toda_stationary",
    "f_ecs",
    "alpha_ecs",
    "f_ecs_stationary",
    "additive_ratio",
    "psi0",
    "gt_series",
    "DualTable",
    "phi_dual_expand",
    "asymmetric_entries",
    "sigma_key",
    "tuple_sigma_series",
    "EvaluationResult",
    "evaluation_partial_sums",
    "evaluation_closed_form",
    "evaluation_compare",
]
