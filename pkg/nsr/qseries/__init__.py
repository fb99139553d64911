from .coords import (
    CYCLIC,
    FINITE,
    NOME,
    CoordSystem,
    Key,
    Monomial,
    add_keys,
    key_degree,
    scale_key,
)
from .products import (
    double_poch_expand,
    euler_product,
    infinite_poch_expand,
    literal_poch_expand,
)
from .series import TruncSeries, first_difference
from .theta import (
    nome_derivative,
    theta_at_one,
    theta_expand,
    theta_logderiv,
    theta_product,
    v0_coefficients,
    v0_series,
    v_potential,
)

__all__ = [
    "CYCLIC",
    "FINITE",
    "NOME",
    "CoordSystem",
    "Key",
    "Monomial",
    "TruncSeries",
    "add_keys",
    "scale_key",
    "key_degree",
    "first_difference",
    "infinite_poch_expand",
    "literal_poch_expand",
    "double_poch_expand",
    "euler_product",
    "theta_expand",
    "theta_product",
    "theta_logderiv",
    "theta_at_one",
    "v_potential",
    "v0_series",
    "v0_coefficients",
    "nome_derivative",
]
