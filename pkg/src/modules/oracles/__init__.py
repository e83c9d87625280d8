"""Brute-force oracles and concentration bounds."""

from src.modules.oracles.bounds import (
    binomial_tail,
    chernoff_bound,
    clip_excess,
    monte_carlo_tail,
)
from src.modules.oracles.brute import CvalResult, ValResult, brute_cval, brute_val

__all__ = [
    "CvalResult",
    "ValResult",
    "binomial_tail",
    "brute_cval",
    "brute_val",
    "chernoff_bound",
    "clip_excess",
    "monte_carlo_tail",
]
