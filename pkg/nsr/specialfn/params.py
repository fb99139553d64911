# Built-in Imports
import dataclasses
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Optional, Sequence, Tuple

# Internal Imports
from ..exceptions import MissingRootError
from ..partition import DominantWeight
from ..scalar import ONE, Scalar, divide, format_scalar, parse_scalar

SCALAR_FIELDS = ("q", "t", "kappa", "r", "beta", "k")
VECTOR_FIELDS = ("s", "qlam", "lam")


@dataclass(frozen=True)
class ParamPoint:
    """A named assignment of the parameters of one function or check.

    ``s`` are the spectral variables, ``qlam`` the values q^{lambda_i} of an
    x^lambda twist and ``lam`` the additive lambda of the differential limits.
    When ``r`` is set, q equals r^``root``.
    """

    n: int
    q: Scalar = ONE
    t: Scalar = ONE
    kappa: Scalar = ONE
    s: Tuple[Scalar, ...] = ()
    r: Optional[Scalar] = None
    root: int = 1
    qlam: Tuple[Scalar, ...] = ()
    lam: Tuple[Scalar, ...] = ()
    beta: Optional[Scalar] = None
    k: Optional[Scalar] = None

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"N must be at least 2, got {self.n}")
        for name in VECTOR_FIELDS:
            value = tuple(getattr(self, name))
            object.__setattr__(self, name, value)
            if value and len(value) != self.n:
                raise ValueError(f"{name} has {len(value)} entries, expected {self.n}")
        if self.r is not None and self.r**self.root != self.q:
            raise MissingRootError(f"q={self.q} is not r^{self.root} for r={self.r}")

    ####################################################################
    ## Constructors
    ####################################################################

    @classmethod
    def twisted(
        cls, n: int, q: Scalar, t: Scalar, qlam: Sequence[Scalar], kappa: Scalar = ONE
    ) -> "ParamPoint":
        """s = t^delta q^lambda, i.e. s_i = t^{N-i} q^{lambda_i}."""
        s = tuple(t ** (n - i) * qlam[i - 1] for i in range(1, n + 1))
        return cls(n=n, q=q, t=t, kappa=kappa, s=s, qlam=tuple(qlam))

    @classmethod
    def dominant(cls, w: DominantWeight, r: Scalar, t: Scalar) -> "ParamPoint":
        """q = r^N, s_i = q^{-K(N-i)/N + mu_i} and kappa = q^{-K/N} / t."""
        n, level = w.n, w.level
        mu = w.mu_padded
        s = tuple(r ** (-level * (n - i) + n * mu[i - 1]) for i in range(1, n + 1))
        return cls(n=n, q=r**n, t=t, kappa=divide(r ** (-level), t), s=s, r=r, root=n)

    @classmethod
    def toda(
        cls, n: int, r: Scalar, lam: Sequence[int], kappa: Scalar = ONE
    ) -> "ParamPoint":
        """q = r^2 and s_i = q^{lambda_i} for integer lambda."""
        qlam = tuple(r ** (2 * int(l)) for l in lam)
        return cls(
            n=n, q=r**2, kappa=kappa, s=qlam, r=r, root=2, qlam=qlam, lam=tuple(Fraction(l) for l in lam)
        )

    @classmethod
    def toda_spectral(
        cls, n: int, r: Scalar, s: Sequence[Scalar], kappa: Scalar = ONE
    ) -> "ParamPoint":
        """q = r^2 with free spectral s; the twist values q^lambda are s itself."""
        s = tuple(s)
        return cls(n=n, q=r**2, kappa=kappa, s=s, r=r, root=2, qlam=s)

    @classmethod
    def ecs(cls, lam: Sequence[Scalar], k: Scalar, beta: Scalar) -> "ParamPoint":
        return cls(n=len(lam), lam=tuple(lam), k=k, beta=beta)

    @classmethod
    def from_mapping(cls, n: int, values: Mapping[str, str]) -> "ParamPoint":
        """Parse ``{"q": "1/3", "s": "1/2,2/5"}`` style strings."""
        fields: Dict = {"n": n}
        for name, text in values.items():
            if name in VECTOR_FIELDS:
                fields[name] = tuple(parse_scalar(x) for x in text.split(","))
            elif name in SCALAR_FIELDS:
                fields[name] = parse_scalar(text)
            elif name == "root":
                fields[name] = int(text)
            else:
                raise ValueError(f"unknown parameter {name!r}")
        return cls(**fields)

    ####################################################################
    ## Derived values
    ####################################################################

    def replace(self, **changes) -> "ParamPoint":
        return dataclasses.replace(self, **changes)

    def with_t(self, t: Scalar) -> "ParamPoint":
        return dataclasses.replace(self, t=t)

    def spectral(self) -> Tuple[Scalar, ...]:
        return self.s if self.s else tuple(ONE for _ in range(self.n))

    def twist(self) -> Tuple[Scalar, ...]:
        return self.qlam if self.qlam else tuple(ONE for _ in range(self.n))

    def root_power(self, exponent: int) -> Scalar:
        """q^{exponent/root} through the supplied root r."""
        if self.r is None:
            raise MissingRootError(f"q^(1/{self.root}) is needed but no root r was given")
        return self.r**exponent

    def eigenvalue_sum(self) -> Scalar:
        total: Scalar = Fraction(0)
        for value in self.spectral():
            total = total + value
        return total

    def as_record(self) -> Dict[str, str]:
        record = {"n": str(self.n)}
        for name in SCALAR_FIELDS:
            value = getattr(self, name)
            if value is not None:
                record[name] = format_scalar(value)
        for name in VECTOR_FIELDS:
            value = getattr(self, name)
            if value:
                record[name] = ",".join(format_scalar(v) for v in value)
        if self.r is not None:
            record["root"] = str(self.root)
        return record
