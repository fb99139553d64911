from .ecs import EcsVariant, ThetaTable, ecs_apply, ecs_potential, h_beta_potential
from .eigen import EigenReport, eigen_extract
from .macdonald import macdonald_apply, macdonald_coefficient
from .ruijsenaars import ruijsenaars_apply, ruijsenaars_coefficient
from .toda import (
    gaussian_dilation,
    toda_apply,
    toda_eigenvalue,
    toda_nonstat_apply,
    toda_prefactor,
)
from .twisted import TwistedSeries, euler_weight, q_shift

__all__ = [
    "TwistedSeries",
    "q_shift",
    "euler_weight",
    "macdonald_apply",
    "macdonald_coefficient",
    "ruijsenaars_apply",
    "ruijsenaars_coefficient",
    "toda_apply",
    "toda_nonstat_apply",
    "toda_prefactor",
    "toda_eigenvalue",
    "gaussian_dilation",
    "EcsVariant",
    "ThetaTable",
    "ecs_apply",
    "ecs_potential",
    "h_beta_potential",
    "EigenReport",
    "eigen_extract",
]
