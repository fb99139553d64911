# Built-in Imports
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

# Internal Imports
from ..exceptions import SeriesInversionError
from ..qseries import FINITE, Key, TruncSeries
from ..scalar import Scalar
from .twisted import TwistedSeries


@dataclass
class EigenReport:
    ratio: TruncSeries
    uniform: bool
    eigenvalue_series: List[Scalar] = field(default_factory=list)
    constant_term: Scalar = 0
    witness: Optional[Tuple[Key, Scalar]] = None


def eigen_extract(opF: TwistedSeries, F: TwistedSeries) -> EigenReport:
    """Split op(F)/F into its uniform part and the first non-uniform witness."""
    F._check(opF)
    if not F.body.constant_term():
        raise SeriesInversionError("eigen extraction needs a unit constant term in F")
    ratio = opF.body / F.body
    bad = ratio.non_uniform_keys()
    if ratio.coords.kind == FINITE:
        series = [ratio.constant_term()]
    else:
        series = ratio.nome_coefficients()
    return EigenReport(
        ratio=ratio,
        uniform=not bad,
        eigenvalue_series=series,
        constant_term=ratio.constant_term(),
        witness=(bad[0], ratio[bad[0]]) if bad else None,
    )
