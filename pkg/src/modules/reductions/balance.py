"""Degree split d_A : d_B ≈ √2 : 1 for the claw-free pipeline."""

import math
from typing import NamedTuple

from src.core.exceptions import ParameterError
from src.shared.constants import BALANCE_MAX_DENOMINATOR, BALANCE_TOLERANCE_FACTOR

_EPSILON_CEILING = 1 / (3 + 2 * math.sqrt(2))


class DegreeSplit(NamedTuple):
    q1: int
    q2: int
    d_a: int
    d_b: int


def sqrt2_convergents(max_denominator: int = BALANCE_MAX_DENOMINATOR):
    """p/q = 1/1, 3/2, 7/5, 17/12, ... while q <= max_denominator."""
    p, q = 1, 1
    while q <= max_denominator:
        yield p, q
        p, q = p + 2 * q, p + q


def balance_degrees(k: int, epsilon: float) -> DegreeSplit:
    """First √2 convergent within 0.01ε in both orientations."""
    if not 0 < epsilon < _EPSILON_CEILING:
        raise ParameterError(
            f"epsilon must lie in (0, {_EPSILON_CEILING:.6f}), got {epsilon}", parameter="epsilon"
        )
    if k < 3:
        raise ParameterError(f"k must be >= 3, got {k}", parameter="k")

    tolerance = BALANCE_TOLERANCE_FACTOR * epsilon
    root = math.sqrt(2)
    for q1, q2 in sqrt2_convergents():
        if abs(q1 / q2 - root) <= tolerance and abs(q2 / q1 - 1 / root) <= tolerance:
            total = q1 + q2
            return DegreeSplit(q1=q1, q2=q2, d_a=k * q1 // total, d_b=k * q2 // total)
    raise ParameterError(
        f"No sqrt(2) convergent with denominator <= {BALANCE_MAX_DENOMINATOR} within {tolerance}",
        parameter="epsilon",
    )
