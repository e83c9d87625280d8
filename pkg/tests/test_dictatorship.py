import json

import numpy as np
import pytest

from src.core.exceptions import (
    ConstructionError,
    ParameterError,
    ParseError,
    SizeLimitError,
    StructureError,
)
from src.modules.dictatorship import testing
from src.modules.dictatorship.fourier import (
    efron_stein,
    influence,
    max_low_degree_influence,
    reconstruct,
    squared_norm,
)
from src.modules.dictatorship.gadget import build_gadget, instantiate_csp, oplus, sample_mu
from src.modules.dictatorship.gaussian import gamma_rho, gamma_upper_bounds, soundness_estimate
from src.modules.graph.generators import complete_graph
from src.modules.graph.models import SimpleGraph
from src.modules.oracles.brute import brute_val
from src.shared.enums import EvalMode

TestFunction = testing.TestFunction
accept_prob = testing.test_accept_prob


@pytest.fixture(scope="module")
def gadget():
    return build_gadget(8, 3, seed=0)


# === Gadget construction ===
def test_large_gadget_builds():
    g = build_gadget(64, 16, seed=0)
    assert len(g.pairs) == 64 * 16
    assert g.rho <= 2.5 / 4
    assert g.attempts <= 100


def test_complete_gadget():
    g = build_gadget(10, 9, seed=3)
    assert g.graph == complete_graph(10)
    assert g.rho == pytest.approx(1 / 9, abs=1e-9)
    assert g.attempts == 1


def test_pairs_hold_both_orientations(gadget):
    pairs = set(gadget.pairs)
    assert len(pairs) == 3 * 8
    assert all((j, i) in pairs for i, j in pairs)
    assert not gadget.predicate.diagonal().any()


def test_gadget_parameter_errors():
    with pytest.raises(ParameterError):
        build_gadget(5, 5, seed=0)
    with pytest.raises(ParameterError):
        build_gadget(5, 3, seed=0)


def test_gadget_gives_up_with_best_value():
    with pytest.raises(ConstructionError) as exc:
        build_gadget(8, 3, seed=0, c_accept=0.01, max_retries=3)
    assert exc.value.best is not None


def test_oplus_wraps_to_one_based_range():
    assert oplus(3, 5, 8) == 8
    assert oplus(4, 5, 8) == 1
    assert oplus(2, 8, 8) == 2


# === Instantiation ===
def test_zero_shift_edge_uses_predicate(gadget):
    inst = instantiate_csp(gadget, SimpleGraph.from_edges(2, [(0, 1)]), shifts=[(0, 0)])
    assert inst.edges[0].allowed == frozenset(gadget.pairs)
    assert brute_val(inst).value == 1


@pytest.mark.parametrize("shift", [(1, 0), (0, 5), (3, 7), (7, 7)])
def test_shifts_permute_pairs(gadget, shift):
    inst = instantiate_csp(gadget, SimpleGraph.from_edges(2, [(0, 1)]), shifts=[shift])
    assert len(inst.edges[0].allowed) == 3 * 8
    assert brute_val(inst).value == 1


def test_random_shifts_on_even_cycle(gadget):
    pattern = SimpleGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    a = instantiate_csp(gadget, pattern, seed=9)
    b = instantiate_csp(gadget, pattern, seed=9)
    assert a == b
    assert a.is_bipartite
    assert all(len(e.allowed) == 24 for e in a.edges)


def test_non_bipartite_pattern_rejected(gadget):
    with pytest.raises(StructureError):
        instantiate_csp(gadget, complete_graph(3))


def test_shift_out_of_range(gadget):
    with pytest.raises(ParameterError):
        instantiate_csp(gadget, SimpleGraph.from_edges(2, [(0, 1)]), shifts=[(8, 0)])


def test_mu_has_uniform_marginals(gadget):
    draws = sample_mu(gadget, 80_000, seed=1)
    pairs = set(gadget.pairs)
    assert all((int(x), int(y)) in pairs for x, y in draws[:1000])
    for column in (0, 1):
        counts = np.bincount(draws[:, column], minlength=8) / len(draws)
        assert np.allclose(counts, 1 / 8, atol=0.01)


# === Acceptance probability ===
def test_dictator_accepts_always(gadget):
    for coordinate in range(2):
        f = TestFunction.dictator(8, 2, coordinate)
        assert accept_prob(gadget, f, EvalMode.EXACT) == 1.0
        assert accept_prob(gadget, f, EvalMode.MONTE_CARLO, trials=2000, seed=1) == 1.0


def test_constant_never_accepts(gadget):
    f = TestFunction.constant(8, 2, 5)
    assert accept_prob(gadget, f) == 0.0
    assert not f.is_balanced()


def test_random_functions_accept_at_density(gadget):
    values = [accept_prob(gadget, TestFunction.random(8, 1, seed)) for seed in range(1000)]
    assert np.mean(values) == pytest.approx(3 / 8, abs=0.02)


def test_exact_space_is_capped(gadget):
    with pytest.raises(SizeLimitError):
        accept_prob(gadget, TestFunction.dictator(8, 5, 0))


def test_alphabet_mismatch(gadget):
    with pytest.raises(ParameterError):
        accept_prob(gadget, TestFunction.dictator(4, 1, 0))


def test_function_validation():
    with pytest.raises(ParameterError):
        TestFunction(3, 2, np.zeros((3, 2), dtype=np.int64))
    with pytest.raises(ParameterError):
        TestFunction(2, 1, np.array([0, 2]))
    with pytest.raises(ParameterError):
        TestFunction.dictator(3, 2, 2)


def test_function_from_file(tmp_path):
    path = tmp_path / "f.json"
    path.write_text(json.dumps({"R": 2, "L": 2, "table": [0, 0, 1, 1]}))
    f = TestFunction.from_file(path)
    assert np.array_equal(f.table, TestFunction.dictator(2, 2, 0).table)
    assert f.is_balanced()


def test_function_from_bad_file(tmp_path):
    path = tmp_path / "f.json"
    path.write_text(json.dumps({"R": 2, "L": 2, "table": [0, 1]}))
    with pytest.raises(ParseError):
        TestFunction.from_file(path)


# === Efron-Stein ===
def test_constant_function_decomposition():
    parts = efron_stein(np.full((3, 3), 2.0))
    assert np.allclose(parts[frozenset()], 2.0)
    assert all(np.allclose(p, 0) for s, p in parts.items() if s)


def test_first_coordinate_indicator():
    f = np.array([[1.0, 1.0], [0.0, 0.0]])
    parts = efron_stein(f)
    assert np.allclose(parts[frozenset()], 0.5)
    assert np.allclose(parts[frozenset({0})].ravel(), [0.5, -0.5])
    assert np.allclose(parts[frozenset({1})], 0)
    assert np.allclose(parts[frozenset({0, 1})], 0)


def test_random_table_reconstruction_and_orthogonality():
    rng = np.random.default_rng(0)
    f = rng.normal(size=(3, 3, 3))
    parts = efron_stein(f)
    assert np.allclose(reconstruct(parts, f.shape), f, atol=1e-10)
    total = sum(squared_norm(p) for p in parts.values())
    assert total == pytest.approx(float(np.mean(f**2)), abs=1e-10)
    full = {s: np.broadcast_to(p, f.shape) for s, p in parts.items()}
    keys = list(full)
    for i, s in enumerate(keys):
        for t in keys[i + 1 :]:
            assert abs(float(np.mean(full[s] * full[t]))) < 1e-10


def test_decomposition_respects_cap():
    with pytest.raises(SizeLimitError):
        efron_stein(np.zeros((4, 4, 4)), cap=10)


# === Influence ===
@pytest.mark.parametrize("R", [2, 3, 5])
def test_dictator_indicator_influence(R):
    F = TestFunction.dictator(R, 2, 0)
    indicator = F.indicator(1)
    assert influence(indicator, 0) == pytest.approx((1 / R) * (1 - 1 / R), abs=1e-12)
    assert influence(indicator, 1) == pytest.approx(0.0, abs=1e-12)
    assert influence(indicator, 0, degree_cap=0) == 0


def test_max_low_degree_influence():
    value, label, coordinate = max_low_degree_influence(TestFunction.dictator(3, 2, 1), 1)
    assert value == pytest.approx(2 / 9, abs=1e-12)
    assert coordinate == 1
    assert label in range(3)


def test_influence_coordinate_range():
    with pytest.raises(ParameterError):
        influence(np.zeros((2, 2)), 2)


# === Gaussian quantities ===
def test_gamma_at_zero_correlation():
    assert gamma_rho(0.0, 0.3, 0.6) == pytest.approx(0.18)


def test_gamma_matches_scipy():
    from scipy.stats import multivariate_normal, norm

    sigma, a, b = 0.4, 0.2, 0.35
    expected = multivariate_normal(mean=[0, 0], cov=[[1, sigma], [sigma, 1]]).cdf(
        [norm.ppf(a), norm.ppf(b)]
    )
    assert gamma_rho(sigma, a, b) == pytest.approx(expected, abs=2e-5)


def test_gamma_tends_to_a():
    assert gamma_rho(0.3, 0.25, 1 - 1e-12) == pytest.approx(0.25, abs=1e-6)


def test_gamma_is_monotone_in_correlation():
    values = [gamma_rho(s, 0.1, 0.1) for s in (0.0, 0.2, 0.4, 0.6, 0.8)]
    assert values == sorted(values)


@pytest.mark.parametrize("rho", [0.01, 0.02, 0.04])
@pytest.mark.parametrize("R", [4, 16, 64, 256])
def test_gamma_below_bounds(rho, R):
    value = gamma_rho(rho, 1 / R, 1 / R)
    first, second = gamma_upper_bounds(rho, R)
    assert value <= first + 1e-6
    assert value <= second + 1e-6


def test_soundness_estimate():
    assert soundness_estimate(64, 16, 0.0) == pytest.approx(16 / 64 + 1 / 64)


def test_gamma_rejects_bad_masses():
    with pytest.raises(ParameterError):
        gamma_rho(0.1, 0.0, 0.5)
