from .field import (
    ONE,
    ZERO,
    Scalar,
    as_scalar,
    divide,
    evaluate,
    format_scalar,
    is_symbolic,
    num_den,
    parse_scalar,
    poch_q,
    product,
    rising,
)
from .ratfunc import RatFunc

__all__ = [
    "Scalar",
    "RatFunc",
    "ZERO",
    "ONE",
    "as_scalar",
    "divide",
    "evaluate",
    "format_scalar",
    "is_symbolic",
    "num_den",
    "parse_scalar",
    "poch_q",
    "product",
    "rising",
]
