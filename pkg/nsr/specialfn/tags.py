# Built-in Imports
from enum import Enum
from typing import Callable, Dict

# Internal Imports
from ..qseries import TruncSeries
from ..scalar import RatFunc
from .ecs import alpha_ecs, f_ecs, f_ecs_stationary, psi0
from .macdonald import f_macdonald, phi_macdonald
from .params import ParamPoint
from .ruijsenaars import alpha_const, f_hat, f_hat_kappa0, f_stationary, phi_hat
from .toda import alpha_toda, f_toda, f_toda_stationary, f_toda_zero


class FunctionTag(Enum):
    FHAT = "FHat"
    PHI_HAT = "PhiHat"
    FHAT_KAPPA0 = "FHatKappa0"
    ALPHA = "Alpha"
    FSTATIONARY = "FStationary"
    FMAC = "FMac"
    PHI_MAC = "PhiMac"
    FTODA = "FToda"
    FTODA_ZERO = "FTodaZero"
    ALPHA_TODA = "AlphaToda"
    FTODA_STATIONARY = "FTodaStationary"
    FECS = "FEcs"
    ALPHA_ECS = "AlphaEcs"
    FECS_STATIONARY = "FEcsStationary"
    PSI0 = "Psi0"


def _symbolic(point: ParamPoint, name: str) -> ParamPoint:
    return point.replace(**{name: RatFunc.generator()})


def _psi0(point: ParamPoint, order: int) -> TruncSeries:
    if point.beta is None:
        raise ValueError("Psi0 needs beta")
    return psi0(point.n, point.beta, order)


BUILDERS: Dict[FunctionTag, Callable[[ParamPoint, int], TruncSeries]] = {
    FunctionTag.FHAT: f_hat,
    FunctionTag.PHI_HAT: phi_hat,
    FunctionTag.FHAT_KAPPA0: lambda p, d: f_hat_kappa0(p.n, p.q, p.t, d),
    FunctionTag.ALPHA: alpha_const,
    FunctionTag.FSTATIONARY: lambda p, d: f_stationary(_symbolic(p, "kappa"), d).series,
    FunctionTag.FMAC: lambda p, d: f_macdonald(p.n, p.spectral(), p.q, p.t, d),
    FunctionTag.PHI_MAC: lambda p, d: phi_macdonald(p.n, p.spectral(), p.q, p.t, d),
    FunctionTag.FTODA: f_toda,
    FunctionTag.FTODA_ZERO: f_toda_zero,
    FunctionTag.ALPHA_TODA: alpha_toda,
    FunctionTag.FTODA_STATIONARY: lambda p, d: f_toda_stationary(_symbolic(p, "kappa"), d).series,
    FunctionTag.FECS: f_ecs,
    FunctionTag.ALPHA_ECS: alpha_ecs,
    FunctionTag.FECS_STATIONARY: lambda p, d: f_ecs_stationary(_symbolic(p, "k"), d).series,
    FunctionTag.PSI0: _psi0,
}


def build_function(tag: FunctionTag, point: ParamPoint, order: int) -> TruncSeries:
    """Construct the series named by ``tag`` at ``point``.

    The stationary tags replace kappa (or k for eCS) by the symbolic generator
    before taking the limit, so any value given for it is ignored.
    """
    return BUILDERS[tag](point, order)
