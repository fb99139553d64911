from .character import (
    CharMonomial,
    FormalCharacter,
    ch_denominator_character,
    ch_tangent,
    s_ratio,
)
from .factors import (
    NekrasovArgs,
    PochFactor,
    block_value,
    evaluate_factors,
    full_factors,
    nekrasov_additive,
    nekrasov_block,
    nekrasov_block_factors,
    nekrasov_box,
    nekrasov_full,
)

__all__ = [
    "NekrasovArgs",
    "PochFactor",
    "nekrasov_block",
    "nekrasov_block_factors",
    "nekrasov_box",
    "nekrasov_full",
    "nekrasov_additive",
    "block_value",
    "evaluate_factors",
    "full_factors",
    "FormalCharacter",
    "CharMonomial",
    "ch_tangent",
    "ch_denominator_character",
    "s_ratio",
]
