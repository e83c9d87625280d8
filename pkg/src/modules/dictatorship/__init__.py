"""Dictatorship-test gadgets: expander predicate, test, Fourier tools, Gaussian bounds."""

from src.modules.dictatorship.fourier import (
    efron_stein,
    influence,
    max_low_degree_influence,
    reconstruct,
    squared_norm,
)
from src.modules.dictatorship.gadget import (
    PredicateGadget,
    build_gadget,
    instantiate_csp,
    oplus,
    sample_mu,
)
from src.modules.dictatorship.gaussian import gamma_rho, gamma_upper_bounds, soundness_estimate
from src.modules.dictatorship.testing import TestFunction, exact_accept_fraction, test_accept_prob

__all__ = [
    "PredicateGadget",
    "TestFunction",
    "build_gadget",
    "efron_stein",
    "exact_accept_fraction",
    "gamma_rho",
    "gamma_upper_bounds",
    "influence",
    "instantiate_csp",
    "max_low_degree_influence",
    "oplus",
    "reconstruct",
    "sample_mu",
    "soundness_estimate",
    "squared_norm",
    "test_accept_prob",
]
