"""Correlated Gaussian orthant probabilities and the resulting soundness numbers."""

from math import exp, pi, sqrt

from scipy.integrate import quad
from scipy.stats import norm

from src.core.exceptions import ParameterError
from src.shared.constants import GAMMA_QUAD_TOLERANCE


def gamma_rho(sigma: float, a: float, b: float) -> float:
    """Pr[g1 <= Φ⁻¹(a), g2 <= Φ⁻¹(b)] for σ-correlated standard Gaussians.

    Integrates the bivariate density over the correlation from 0 to σ,
    starting from Γ_0(a, b) = ab.
    """
    if not 0 <= sigma < 1:
        raise ParameterError(f"sigma must lie in [0, 1), got {sigma}", parameter="sigma")
    if not (0 < a < 1 and 0 < b < 1):
        raise ParameterError(f"a and b must lie in (0, 1), got {a}, {b}", parameter="a")
    h, k = norm.ppf(a), norm.ppf(b)

    def density(r: float) -> float:
        one_minus = 1 - r * r
        return exp(-(h * h - 2 * r * h * k + k * k) / (2 * one_minus)) / sqrt(one_minus)

    if sigma == 0:
        return a * b
    integral, _ = quad(density, 0.0, sigma, epsabs=GAMMA_QUAD_TOLERANCE, epsrel=GAMMA_QUAD_TOLERANCE)
    return a * b + integral / (2 * pi)


def gamma_upper_bounds(rho: float, R: int) -> tuple[float, float]:
    """((1/R)^{1+(1-ρ)/(1+ρ)}, (1/R)^{2-2ρ}), valid upper bounds on Γ_ρ(1/R, 1/R) for ρ < 1/20."""
    if not 0 <= rho < 1 or R < 1:
        raise ParameterError(f"Need rho in [0, 1) and R >= 1 (got {rho}, {R})")
    base = 1 / R
    return base ** (1 + (1 - rho) / (1 + rho)), base ** (2 - 2 * rho)


def soundness_estimate(R: int, t: int, rho: float) -> float:
    """t·(1/R)^{1-2ρ} + 1/R."""
    if R < 1 or t < 1:
        raise ParameterError(f"Need R >= 1 and t >= 1 (got {R}, {t})")
    return t * (1 / R) ** (1 - 2 * rho) + 1 / R
