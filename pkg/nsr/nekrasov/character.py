"""Tangent characters of the affine Laumon fixed points.

A character is a finite formal sum of monomials ``q^a kappa^b s^e`` with integer
coefficients, where ``e`` is an exponent vector over ``s_1..s_N``. A term
``kappa^{l-l'} s_l/s_{l'}`` with indices outside ``1..N`` folds the s-ratio back
cyclically and keeps the winding in the literal kappa exponent.
"""
# Built-in Imports
from typing import Dict, Iterator, List, Sequence, Tuple

# Internal Imports
from ..partition import PartitionTuple
from ..scalar import ZERO, Scalar
from .factors import nekrasov_block_factors

CharMonomial = Tuple[int, int, Tuple[int, ...]]


class FormalCharacter:
    def __init__(self, n: int, terms: Dict[CharMonomial, int] = None):
        self.n = n
        self._terms: Dict[CharMonomial, int] = {}
        for key, coeff in (terms or {}).items():
            self.add(key, coeff)

    def add(self, key: CharMonomial, coeff: int = 1):
        total = self._terms.get(key, 0) + coeff
        if total:
            self._terms[key] = total
        else:
            self._terms.pop(key, None)

    def add_ratio(self, q_exp: int, kappa_exp: int, l: int, l_prime: int, coeff: int = 1):
        """Add ``coeff * q^q_exp kappa^kappa_exp s_l / s_l'``."""
        self.add((q_exp, kappa_exp, s_ratio(self.n, l, l_prime)), coeff)

    def terms(self) -> List[Tuple[CharMonomial, int]]:
        return sorted(self._terms.items())

    def __iter__(self) -> Iterator[Tuple[CharMonomial, int]]:
        return iter(self.terms())

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __sub__(self, other: "FormalCharacter") -> "FormalCharacter":
        result = FormalCharacter(self.n, self._terms)
        for key, coeff in other._terms.items():
            result.add(key, -coeff)
        return result

    def dimension(self) -> int:
        """Sum of coefficients, i.e. the rank of the represented module."""
        return sum(self._terms.values())

    def evaluate(self, s: Sequence[Scalar], kappa: Scalar, q: Scalar) -> Scalar:
        total: Scalar = ZERO
        for (a, b, e), coeff in self._terms.items():
            term = coeff * q**a * kappa**b
            for s_i, exp in zip(s, e):
                if exp:
                    term = term * s_i**exp
            total = total + term
        return total

    def __repr__(self) -> str:
        return f"FormalCharacter(n={self.n}, terms={len(self)})"


def s_ratio(n: int, l: int, l_prime: int) -> Tuple[int, ...]:
    exps = [0] * n
    exps[(l - 1) % n] += 1
    exps[(l_prime - 1) % n] -= 1
    return tuple(exps)


def _g(shift: int) -> List[Tuple[int, int]]:
    """q(1 - q^shift)/(1 - q) as (exponent, coefficient) pairs."""
    if shift > 0:
        return [(e, 1) for e in range(1, shift + 1)]
    if shift < 0:
        return [(e, -1) for e in range(shift + 1, 1)]
    return []


def _row(T: PartitionTuple, i: int, l: int) -> int:
    # D_i(l) = d_{i,l} = lambda^{(l)}_{i-l+1}
    index = i - l + 1
    return T.component(l).part(index) if index >= 1 else 0


def _depth(T: PartitionTuple) -> int:
    return max((c.length for c in T.components), default=0)


def ch_tangent(T: PartitionTuple, mode: str = "A") -> FormalCharacter:
    """Tangent character at the fixed point T in the chosen closed form.

    ``"A"`` sums over pairs ``l <= l'`` and ``l' < l``; ``"B"`` is the telescoped
    form in the differences d_{k,l}.
    """
    if mode == "A":
        return _ch_pairs(T)
    if mode == "B":
        return _ch_telescoped(T)
    raise ValueError(f"unknown character mode {mode!r}")


def _ch_pairs(T: PartitionTuple) -> FormalCharacter:
    n, depth = T.n, _depth(T)
    ch = FormalCharacter(n)
    for i in range(1, n + 1):
        for l in range(i - depth, i + 1):
            for lp in range(l, i + 1):
                shift = _row(T, i, lp) - _row(T, i, l)
                for e, c in _g(_row(T, i, l) - _row(T, i + 1, l)):
                    ch.add_ratio(shift + e, l - lp, l, lp, c)
        for lp in range(i - depth - 1, i):
            for l in range(lp + 1, i + 1):
                shift = _row(T, i, lp) - _row(T, i, l)
                for e, c in _g(_row(T, i - 1, lp) - _row(T, i, lp)):
                    ch.add_ratio(shift + e, l - lp, l, lp, c)
    return ch


def _ch_telescoped(T: PartitionTuple) -> FormalCharacter:
    n, depth = T.n, _depth(T)
    ch = FormalCharacter(n)
    for i in range(1, n + 1):
        low = i - depth - 1
        for lp in range(low, i):
            for e, c in _g(_row(T, i - 1, lp)):
                ch.add_ratio(e, i - lp, i, lp, c)
        for l in range(low, i + 1):
            for e, c in _g(-_row(T, i, l)):
                ch.add_ratio(e, l - i, l, i, -c)
        for lp in range(low, i + 1):
            for l in range(low, i + 1):
                d_il = _row(T, i, l)
                if not d_il:
                    continue
                for e, c in _g(_row(T, i, lp)):
                    ch.add_ratio(e, l - lp, l, lp, c)
                    ch.add_ratio(e - d_il, l - lp, l, lp, -c)
                if lp <= i - 1:
                    for e, c in _g(_row(T, i - 1, lp)):
                        ch.add_ratio(e, l - lp, l, lp, -c)
                        ch.add_ratio(e - d_il, l - lp, l, lp, c)
    return ch


def ch_denominator_character(T: PartitionTuple) -> FormalCharacter:
    """Character read off the Pochhammer factors of the coefficient's denominator.

    Each linear factor ``1 - u q^a kappa^b`` with ``u = s_j/s_i`` contributes the
    term ``q^{-a} kappa^{-b} s_i/s_j``.
    """
    n = T.n
    ch = FormalCharacter(n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            factors = nekrasov_block_factors(j - i, T.component(i), T.component(j), n)
            for f in factors:
                for r in range(f.length):
                    ch.add_ratio(-(f.q_exp + r), -f.kappa_exp, i, j)
    return ch
