# Built-in Imports
import functools
from dataclasses import dataclass
from typing import Tuple

# Internal Imports
from ..exceptions import InternalMismatchError
from ..partition import Partition
from ..scalar import ONE, Scalar, poch_q, rising


@dataclass(frozen=True)
class PochFactor:
    """The Pochhammer symbol (u q^a kappa^b; q)_length inside a Nekrasov block."""

    q_exp: int
    kappa_exp: int
    length: int


@dataclass(frozen=True)
class NekrasovArgs:
    k: int
    lam: Partition
    mu: Partition
    u: Scalar
    q: Scalar
    kappa: Scalar
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"invalid modulus {self.n}")
        object.__setattr__(self, "k", self.k % self.n)


@functools.lru_cache(maxsize=None)
def nekrasov_block_factors(k: int, lam: Partition, mu: Partition, n: int) -> Tuple[PochFactor, ...]:
    """Factor list of the cyclic block with index difference k mod n.

    Rows past the longer length contribute empty Pochhammer symbols, so both
    products stop at the partition lengths.
    """
    k %= n
    factors = []
    for j in range(1, lam.length + 1):
        length = lam.part(j) - lam.part(j + 1)
        if not length:
            continue
        for i in range(1, j + 1):
            if (j - i - k) % n == 0:
                factors.append(PochFactor(lam.part(j + 1) - mu.part(i), j - i, length))
    for beta in range(1, mu.length + 1):
        length = mu.part(beta) - mu.part(beta + 1)
        if not length:
            continue
        for alpha in range(1, beta + 1):
            if (beta - alpha + k + 1) % n == 0:
                factors.append(
                    PochFactor(lam.part(alpha) - mu.part(beta), alpha - beta - 1, length)
                )
    return tuple(factors)


def full_factors(lam: Partition, mu: Partition) -> Tuple[PochFactor, ...]:
    # Modulus one keeps every factor
    return nekrasov_block_factors(0, lam, mu, 1)


def evaluate_factors(
    factors: Tuple[PochFactor, ...], u: Scalar, q: Scalar, kappa: Scalar
) -> Scalar:
    value: Scalar = ONE
    for f in factors:
        value = value * poch_q(u * q**f.q_exp * kappa**f.kappa_exp, q, f.length)
        if not value:
            break
    return value


def nekrasov_block(args: NekrasovArgs) -> Scalar:
    return evaluate_factors(
        nekrasov_block_factors(args.k, args.lam, args.mu, args.n), args.u, args.q, args.kappa
    )


def block_value(
    k: int, lam: Partition, mu: Partition, u: Scalar, q: Scalar, kappa: Scalar, n: int
) -> Scalar:
    return nekrasov_block(NekrasovArgs(k, lam, mu, u, q, kappa, n))


def nekrasov_box(lam: Partition, mu: Partition, u: Scalar, q: Scalar, kappa: Scalar) -> Scalar:
    """Box-product form of the ordinary K-theoretic Nekrasov factor."""
    lam_t, mu_t = lam.conjugate(), mu.conjugate()
    value: Scalar = ONE
    for i, j in lam.boxes():
        value = value * (1 - u * q ** (j - 1 - mu.part(i)) * kappa ** (lam_t.part(j) - i))
    for i, j in mu.boxes():
        value = value * (1 - u * q ** (lam.part(i) - j) * kappa ** (i - 1 - mu_t.part(j)))
    return value


def nekrasov_full(lam: Partition, mu: Partition, u: Scalar, q: Scalar, kappa: Scalar) -> Scalar:
    """Ordinary Nekrasov factor, cross-checked between box and Pochhammer forms."""
    boxes = nekrasov_box(lam, mu, u, q, kappa)
    pochs = evaluate_factors(full_factors(lam, mu), u, q, kappa)
    if boxes != pochs:
        raise InternalMismatchError(
            f"box form {boxes} != Pochhammer form {pochs} for lam={lam}, mu={mu}"
        )
    return boxes


def nekrasov_additive(l: int, lam: Partition, mu: Partition, v: Scalar, k: Scalar, n: int) -> Scalar:
    """Additive block: each (u q^a kappa^b; q)_m becomes (v + a + b k)_m."""
    value: Scalar = ONE
    for f in nekrasov_block_factors(l, lam, mu, n):
        value = value * rising(v + f.q_exp + f.kappa_exp * k, f.length)
    return value
