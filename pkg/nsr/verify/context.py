# Built-in Imports
import logging
from typing import Any, Dict, List, Optional

# Internal Imports
from .. import _logger
from ..data_protocols import Witness, format_key
from ..qseries import TruncSeries, first_difference
from ..specialfn import ParamPoint
from ..states import CheckSpec
from .sampling import FREE, Constraints, ParamSampler, weight_from

MAX_WITNESSES = 10


class CheckContext:
    """Sampler, resolved orders and the witness list of one check attempt."""

    def __init__(
        self,
        spec: CheckSpec,
        order: int,
        sigma_order: int,
        attempt: int = 0,
        batch: int = 1,
        logger: Optional[logging.Logger] = None,
    ):
        self.spec = spec
        self.n = spec.n
        self.order = order
        self.sigma_order = sigma_order
        self.attempt = attempt
        self.batch = batch
        self.sampler = ParamSampler(spec.seed, attempt, spec.params)
        self.logger = logger or _logger.getLogger("nsr-verify")

        self.points: List[ParamPoint] = []
        self.witnesses: List[Witness] = []
        self.extra: Dict[str, Any] = {}

        # Set by approximate checks
        self.approximate = False
        self.residual: Optional[float] = None
        self.tolerance: Optional[float] = None

    @property
    def trials(self) -> int:
        return self.spec.trials * self.batch

    def point(self, relation: str = FREE, **constraints) -> ParamPoint:
        point = self.sampler.sample(Constraints(self.n, relation, **constraints))
        self.points.append(point)
        return point

    def weight(self):
        return weight_from(self.n, self.spec.params)

    ####################################################################
    ## Witnesses
    ####################################################################

    def witness(self, key: Any, lhs: Any, rhs: Any, label: str = ""):
        if len(self.witnesses) >= MAX_WITNESSES:
            return
        text = format_key(key)
        self.witnesses.append(Witness.of(f"{label}:{text}" if label else text, lhs, rhs))

    def expect(self, condition: bool, key: Any, lhs: Any, rhs: Any, label: str = "") -> bool:
        if not condition:
            self.witness(key, lhs, rhs, label)
        return condition

    def equal(self, lhs: Any, rhs: Any, key: Any, label: str = "") -> bool:
        return self.expect(lhs == rhs, key, lhs, rhs, label)

    def compare(self, lhs: TruncSeries, rhs: TruncSeries, label: str = "") -> bool:
        """Exact coefficient comparison; the lowest differing key is the witness."""
        diff = first_difference(lhs, rhs)
        if diff is None:
            return True
        key, a, b = diff
        self.witness(key, a, b, label)
        return False

    @property
    def failed(self) -> bool:
        return bool(self.witnesses)
