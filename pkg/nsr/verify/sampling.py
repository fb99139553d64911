"""Seeded parameter sampling with exactly enforced relations.

Every sampled rational has numerator and denominator in ``1..bound``. Values
fixed by the caller win over constraint defaults, which win over samples.
"""
# Built-in Imports
import itertools
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Optional, Sequence, Tuple

# Internal Imports
from .. import _logger, config
from ..exceptions import MissingRootError, UnsatisfiableConstraintsError
from ..partition import DominantWeight, Partition
from ..qseries import CoordSystem, TruncSeries
from ..scalar import ONE, Scalar, parse_scalar
from ..specialfn import ParamPoint
from ..specialfn.params import SCALAR_FIELDS, VECTOR_FIELDS

logger: logging.Logger = _logger.getLogger("nsr-verify")

FREE = "free"
TWISTED = "twisted"
DOMINANT = "dominant"
TODA = "toda"
ECS = "ecs"
RELATIONS = (FREE, TWISTED, DOMINANT, TODA, ECS)

WEIGHT_FIELDS = ("level", "mu")
MAX_LATTICE_DRAWS = 100


@dataclass(frozen=True)
class Constraints:
    """Relations a sampled point must satisfy.

    ``free``: independent q, t, kappa and s.
    ``twisted``: s = t^delta q^lambda, with integer ``lam`` if given.
    ``dominant``: the point of ``weight`` with q = r^N.
    ``toda``: q = r^2 and s = q^lambda for integer lambda, or with
    ``generic`` a spectral s with no ratio s_j/s_i in q^Z.
    ``ecs``: additive lambda, k and beta.
    """

    n: int
    relation: str = FREE
    lam: Optional[Tuple[Scalar, ...]] = None
    weight: Optional[DominantWeight] = None
    q: Optional[Scalar] = None
    t: Optional[Scalar] = None
    kappa: Optional[Scalar] = None
    generic: bool = False


def parse_fixed(values: Mapping[str, str]) -> Dict[str, object]:
    """Parse explicit ``name=value`` parameters; weight fields pass through."""
    fixed: Dict[str, object] = {}
    for name, text in values.items():
        if name in VECTOR_FIELDS:
            fixed[name] = tuple(parse_scalar(x) for x in text.split(","))
        elif name in SCALAR_FIELDS:
            fixed[name] = parse_scalar(text)
        elif name in WEIGHT_FIELDS:
            fixed[name] = text
        else:
            raise ValueError(f"unknown parameter {name!r}")
    return fixed


def weight_from(n: int, values: Mapping[str, str]) -> Optional[DominantWeight]:
    """The dominant weight named by ``level``/``mu`` parameters, if any."""
    if "level" not in values and "mu" not in values:
        return None
    try:
        mu = Partition.parse(values.get("mu", ""))
        return DominantWeight(n, int(values.get("level", "1")), mu)
    except ValueError as e:
        raise UnsatisfiableConstraintsError(f"invalid dominant weight: {e}") from e


class ParamSampler:
    def __init__(
        self,
        seed: int,
        attempt: int = 0,
        fixed: Optional[Mapping[str, str]] = None,
        bound: Optional[int] = None,
    ):
        # String seeds hash deterministically across interpreter runs
        self.rng = random.Random(f"{seed}:{attempt}")
        self.bound = bound or int(config.get("sampling.bound"))
        self.fixed = parse_fixed(fixed or {})

    ####################################################################
    ## Primitive draws
    ####################################################################

    def rational(self, signed: bool = False) -> Fraction:
        """A rational away from 0 and 1."""
        while True:
            value = Fraction(self.rng.randint(1, self.bound), self.rng.randint(1, self.bound))
            if signed and self.rng.random() < 0.5:
                value = -value
            if value != 1:
                return value

    def proper(self) -> Fraction:
        """A rational strictly between 0 and 1."""
        while True:
            a, b = self.rng.randint(1, self.bound), self.rng.randint(1, self.bound)
            if a < b:
                return Fraction(a, b)

    def integer(self, low: int, high: int) -> int:
        return self.rng.randint(low, high)

    def choice(self, items: Sequence):
        return items[self.rng.randrange(len(items))]

    def vector(self, n: int, signed: bool = False) -> Tuple[Fraction, ...]:
        return tuple(self.rational(signed) for _ in range(n))

    def series(self, coords: CoordSystem, order: int) -> TruncSeries:
        """Random body with constant term 1 and signed rational coefficients."""
        coeffs = {key: self.rational(signed=True) for key in coords.keys(order)[1:]}
        coeffs[coords.zero] = ONE
        return TruncSeries(coords, order, coeffs)

    ####################################################################
    ## Points
    ####################################################################

    def _pick(self, name: str, default, draw):
        if name in self.fixed:
            return self.fixed[name]
        if default is not None:
            return default
        return draw()

    def sample(self, c: Constraints) -> ParamPoint:
        if c.relation not in RELATIONS:
            raise UnsatisfiableConstraintsError(f"unknown relation {c.relation!r}")
        try:
            point = getattr(self, f"_{c.relation}")(c)
        except (ValueError, MissingRootError) as e:
            raise UnsatisfiableConstraintsError(f"{c.relation} constraints: {e}") from e
        logger.debug(f"sampled {c.relation} point {point.as_record()}")
        return point

    def _free(self, c: Constraints) -> ParamPoint:
        q = self._pick("q", c.q, self.rational)
        t = self._pick("t", c.t, self.rational)
        kappa = self._pick("kappa", c.kappa, self.rational)
        s = self._pick("s", None, lambda: self.vector(c.n))
        return ParamPoint(n=c.n, q=q, t=t, kappa=kappa, s=s)

    def _twisted(self, c: Constraints) -> ParamPoint:
        q = self._pick("q", None, self.rational)
        t = self._pick("t", c.t, self.rational)
        kappa = self._pick("kappa", c.kappa, self.rational)
        if c.lam is not None:
            if any(Fraction(l).denominator != 1 for l in c.lam):
                raise UnsatisfiableConstraintsError(f"q^lambda needs integer lambda, got {c.lam}")
            default = tuple(q ** int(l) for l in c.lam)
        else:
            default = None
        qlam = self._pick("qlam", default, lambda: self.vector(c.n))
        return ParamPoint.twisted(c.n, q, t, qlam, kappa)

    def _dominant(self, c: Constraints) -> ParamPoint:
        if c.weight is None:
            raise UnsatisfiableConstraintsError("a dominant point needs a weight")
        if c.weight.n != c.n:
            raise UnsatisfiableConstraintsError(f"weight of rank {c.weight.n} for N={c.n}")
        r = self._pick("r", None, self.rational)
        t = self._pick("t", c.t, self.rational)
        return ParamPoint.dominant(c.weight, r, t)

    def _toda(self, c: Constraints) -> ParamPoint:
        r = self._pick("r", None, self.rational)
        if c.generic and "lam" not in self.fixed:
            kappa = self._pick("kappa", c.kappa, self.rational)
            s = self._pick("s", None, lambda: self._off_lattice(c.n, r**2))
            return ParamPoint.toda_spectral(c.n, r, s, kappa)
        lam = self._pick("lam", c.lam, lambda: tuple(c.n - i for i in range(1, c.n + 1)))
        if any(Fraction(l).denominator != 1 for l in lam):
            raise UnsatisfiableConstraintsError(f"the q-Gaussian needs integer lambda, got {lam}")
        kappa = self._pick("kappa", c.kappa, self.rational)
        return ParamPoint.toda(c.n, r, [int(l) for l in lam], kappa)

    def _off_lattice(self, n: int, q: Scalar) -> Tuple[Fraction, ...]:
        # beyond reach, q^m is taller than any ratio of two draws
        reach = 2 * self.bound.bit_length() + 1
        lattice = {q**m for m in range(-reach, reach + 1)}
        for _ in range(MAX_LATTICE_DRAWS):
            s = self.vector(n)
            if not any(a / b in lattice for a, b in itertools.permutations(s, 2)):
                return s
        raise UnsatisfiableConstraintsError(f"no spectral draw off q^Z for q={q}")

    def _ecs(self, c: Constraints) -> ParamPoint:
        lam = self._pick("lam", c.lam, lambda: self.vector(c.n, signed=True))
        k = self._pick("k", None, lambda: self.rational(signed=True))
        beta = self._pick("beta", None, self.rational)
        return ParamPoint.ecs(lam, k, beta)


def sample_params(
    seed: int, constraints: Constraints, fixed: Optional[Mapping[str, str]] = None
) -> ParamPoint:
    """A reproducible point satisfying ``constraints``."""
    return ParamSampler(seed, fixed=fixed).sample(constraints)
