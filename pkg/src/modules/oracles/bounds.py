"""Concentration inequalities and their exact / sampled counterparts.

All exact binomial sums run in log space.
"""

import math

import numpy as np
from scipy.special import logsumexp
from scipy.stats import binom

from src.core.exceptions import ParameterError
from src.shared.enums import EvalMode


def _check_mean(mu: float, m: int) -> None:
    if not 0 < mu <= 1:
        raise ParameterError(f"mu must lie in (0, 1], got {mu}", parameter="mu")
    if m < 1:
        raise ParameterError(f"m must be >= 1, got {m}", parameter="m")


def chernoff_bound(mu: float, m: int, theta: float) -> float:
    """exp(θ - μm) · (μm/θ)^θ, bounding Pr[S > θ] for θ > μm."""
    _check_mean(mu, m)
    mean = mu * m
    if theta <= mean:
        raise ParameterError(f"theta={theta} must exceed mu*m={mean}", parameter="theta")
    return math.exp(theta - mean + theta * (math.log(mean) - math.log(theta)))


def binomial_tail(mu: float, m: int, theta: float) -> float:
    """Exact Pr[S > θ] for S ~ Binom(m, μ)."""
    _check_mean(mu, m)
    start = max(math.floor(theta) + 1, 0)
    if start > m:
        return 0.0
    s = np.arange(start, m + 1)
    return float(min(1.0, np.exp(logsumexp(binom.logpmf(s, m, mu)))))


def _split(trials: int, workers: int) -> list[int]:
    base, extra = divmod(trials, workers)
    return [base + (1 if w < extra else 0) for w in range(workers)]


def _sample_sums(mu: float, m: int, trials: int, seed: int, workers: int) -> list[np.ndarray]:
    """Binomial draws, worker w seeded with seed + w."""
    if trials < 1:
        raise ParameterError(f"trials must be >= 1, got {trials}", parameter="trials")
    if workers < 1:
        raise ParameterError(f"workers must be >= 1, got {workers}", parameter="workers")
    return [
        np.random.default_rng(seed + w).binomial(m, mu, size=count)
        for w, count in enumerate(_split(trials, workers))
        if count
    ]


def monte_carlo_tail(
    mu: float, m: int, theta: float, trials: int, seed: int, workers: int = 1
) -> float:
    """Fraction of trials with S > θ."""
    _check_mean(mu, m)
    hits = sum(int((draws > theta).sum()) for draws in _sample_sums(mu, m, trials, seed, workers))
    return hits / trials


def clip_excess(
    mu: float,
    m: int,
    tau: int,
    mode: EvalMode = EvalMode.BOUND,
    trials: int = 100_000,
    seed: int = 0,
    workers: int = 1,
) -> float:
    """E[S - min(S, τ)] for S ~ Binom(m, μ), or its bound (μm/(τ-μm))²."""
    _check_mean(mu, m)
    if int(tau) != tau or tau < 1:
        raise ParameterError(f"tau must be an integer >= 1, got {tau}", parameter="tau")
    tau = int(tau)
    mean = mu * m
    if tau <= mean:
        raise ParameterError(f"tau={tau} must exceed mu*m={mean}", parameter="tau")

    if mode == EvalMode.BOUND:
        return (mean / (tau - mean)) ** 2
    if mode == EvalMode.EXACT:
        if tau >= m:
            return 0.0
        s = np.arange(tau + 1, m + 1)
        return float(np.exp(logsumexp(binom.logpmf(s, m, mu) + np.log(s - tau))))
    draws = _sample_sums(mu, m, trials, seed, workers)
    excess = sum(float(np.maximum(x - tau, 0).sum()) for x in draws)
    return excess / trials
