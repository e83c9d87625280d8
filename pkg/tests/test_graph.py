import math

import networkx as nx
import numpy as np
import pytest

from src.core.exceptions import ParameterError, ParseError, SizeLimitError, StructureError
from src.modules.graph.codec import parse_graph, serialize_graph
from src.modules.graph.generators import complete_graph, cycle_graph, random_regular_graph
from src.modules.graph.models import SimpleGraph
from src.modules.graph.solver import find_claw, indep_exact
from src.modules.graph.spectral import regular_degree, second_eigenvalue
from src.modules.oracles.brute import brute_val
from src.modules.reductions.fglss import fglss


def star(leaves: int) -> SimpleGraph:
    return SimpleGraph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


# === Independent sets ===
def test_edgeless_graph():
    result = indep_exact(SimpleGraph.from_edges(5, []))
    assert result.size == 5
    assert result.witness == (0, 1, 2, 3, 4)


def test_complete_graph_has_independence_one():
    result = indep_exact(complete_graph(4))
    assert result.size == 1
    assert result.witness == (0,)


def test_fglss_of_triangle_matches_value(triangle):
    graph = fglss(triangle)
    assert indep_exact(graph).size == 2 == brute_val(triangle).satisfied


@pytest.mark.parametrize("seed", range(15))
def test_indep_agrees_with_networkx(seed):
    g = nx.gnp_random_graph(12, 0.3, seed=seed)
    graph = SimpleGraph.from_networkx(g)
    result = indep_exact(graph)
    clique, _ = nx.max_weight_clique(nx.complement(g), weight=None)
    assert result.size == len(clique)
    assert graph.is_independent(result.witness)


@pytest.mark.parametrize("seed", range(10))
def test_indep_never_grows_when_an_edge_is_added(seed):
    rng = np.random.default_rng(seed)
    g = nx.gnp_random_graph(11, 0.25, seed=seed)
    missing = list(nx.non_edges(g))
    u, v = missing[int(rng.integers(len(missing)))]
    before = SimpleGraph.from_networkx(g)
    after = SimpleGraph.from_edges(g.number_of_nodes(), [*g.edges, (u, v)])
    assert after.num_edges == before.num_edges + 1
    assert indep_exact(after).size <= indep_exact(before).size


def test_indep_respects_cap():
    with pytest.raises(SizeLimitError):
        indep_exact(SimpleGraph.from_edges(10, []), cap=5)


# === Claws ===
def test_star_contains_claw():
    witness = find_claw(star(3), 3)
    assert witness is not None
    assert witness.center == 0
    assert witness.leaves == (1, 2, 3)
    assert witness.verify(star(3))


def test_triangle_has_no_two_claw():
    assert find_claw(complete_graph(3), 2) is None


def test_claw_must_be_induced():
    # center 0 sees 1..3 but 1-2 are adjacent, so no induced K_{1,3}
    g = SimpleGraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
    assert find_claw(g, 3) is None
    assert find_claw(g, 2) is not None


def test_find_claw_rejects_bad_k():
    with pytest.raises(ParameterError):
        find_claw(star(2), 0)


# === Spectrum ===
@pytest.mark.parametrize("R", [4, 7, 12])
def test_complete_graph_eigenvalue(R):
    assert second_eigenvalue(complete_graph(R)) == pytest.approx(1 / (R - 1), abs=1e-9)


@pytest.mark.parametrize("n", [5, 7, 9])
def test_odd_cycle_eigenvalue(n):
    g = cycle_graph(n)
    assert second_eigenvalue(g, signed=True) == pytest.approx(math.cos(2 * math.pi / n), abs=1e-9)
    assert second_eigenvalue(g) == pytest.approx(math.cos(math.pi / n), abs=1e-9)


def test_even_cycle_magnitude_is_one():
    assert second_eigenvalue(cycle_graph(8)) == pytest.approx(1.0, abs=1e-9)
    assert second_eigenvalue(cycle_graph(8), signed=True) == pytest.approx(math.cos(math.pi / 4), abs=1e-9)


def test_disjoint_union_is_rejected():
    g = SimpleGraph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    with pytest.raises(StructureError):
        second_eigenvalue(g)


def test_non_regular_is_rejected():
    with pytest.raises(StructureError):
        regular_degree(star(3))


def test_sparse_path_agrees_with_dense(monkeypatch):
    g = random_regular_graph(60, 6, seed=5)
    dense = second_eigenvalue(g)
    dense_signed = second_eigenvalue(g, signed=True)
    monkeypatch.setattr("src.modules.graph.spectral.settings.SPECTRAL_DENSE_LIMIT", 10)
    assert second_eigenvalue(g) == pytest.approx(dense, abs=1e-6)
    assert second_eigenvalue(g, signed=True) == pytest.approx(dense_signed, abs=1e-6)


# === Generators and codec ===
def test_random_regular_graph_is_regular():
    g = random_regular_graph(20, 4, seed=3)
    assert set(g.degrees) == {4}
    assert serialize_graph(g) == serialize_graph(random_regular_graph(20, 4, seed=3))


def test_random_regular_graph_full_degree_is_complete():
    assert random_regular_graph(5, 4, seed=0) == complete_graph(5)


def test_random_regular_graph_rejects_odd_stub_count():
    with pytest.raises(ParameterError):
        random_regular_graph(5, 3, seed=0)


def test_graph_round_trip():
    g = random_regular_graph(10, 3, seed=1)
    assert parse_graph(serialize_graph(g)) == g


def test_graph_parse_rejects_parallel_edges():
    with pytest.raises(ParseError):
        parse_graph('{"n": 2, "edges": [[0, 1], [1, 0]]}')


def test_adjacency_matrix_is_symmetric():
    g = random_regular_graph(16, 3, seed=9)
    matrix = nx.to_numpy_array(g.to_networkx(), nodelist=range(g.n))
    assert np.array_equal(matrix, matrix.T)
