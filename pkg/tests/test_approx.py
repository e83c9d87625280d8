from fractions import Fraction

import pytest

from src.core.exceptions import PreconditionError
from src.modules.approx.decomposition import forest_decomposition
from src.modules.approx.models import UnionFind, is_forest
from src.modules.approx.polytope import check_forest_polytope
from src.modules.approx.service import approx_solve
from src.modules.approx.tree_dp import tree_dp
from src.modules.csp.generator import gen_random_bounded
from src.modules.graph.generators import complete_graph, cycle_graph, random_regular_graph
from src.modules.graph.models import SimpleGraph
from src.modules.oracles.brute import brute_val
from src.shared.enums import DecompositionMode
from tests.factories import EQUALITY, INEQUALITY, make_instance


def path3():
    return make_instance((2, 2, 2), [(0, 1, EQUALITY), (1, 2, INEQUALITY)])


def star3():
    return make_instance((2, 2, 2, 2), [(0, 1, EQUALITY), (0, 2, EQUALITY), (0, 3, EQUALITY)])


# === Helpers ===
def test_union_find():
    uf = UnionFind(4)
    assert uf.union(0, 1)
    assert uf.union(2, 3)
    assert not uf.union(1, 0)
    assert uf.find(0) == uf.find(1) != uf.find(2)


def test_is_forest(triangle):
    assert is_forest(triangle, {0, 1})
    assert not is_forest(triangle, {0, 1, 2})


# === Forest polytope ===
def test_triangle_is_tight():
    check = check_forest_polytope(complete_graph(3), 2)
    assert check.feasible
    assert check.method == "exhaustive"
    assert check.max_load == 1


def test_single_edge_is_feasible():
    check = check_forest_polytope(SimpleGraph.from_edges(2, [(0, 1)]), 1)
    assert check.feasible
    assert check.max_load == 1


def test_polytope_rejects_degree_overflow():
    with pytest.raises(PreconditionError):
        check_forest_polytope(complete_graph(4), 2)


@pytest.mark.parametrize("seed", range(10))
def test_bounded_graphs_are_feasible(seed):
    d = 3 + seed % 3
    n = 10 + seed
    if (n * d) % 2:
        n += 1
    check = check_forest_polytope(random_regular_graph(n, d, seed), d)
    assert check.feasible
    assert check.violating is None
    assert check.max_load <= 1


def test_large_graph_uses_case_bound():
    assert check_forest_polytope(cycle_graph(30), 2).method == "case_bound"


# === Decomposition ===
def test_triangle_decomposition(triangle):
    dist = forest_decomposition(triangle, 2)
    assert sorted(p.weight for p in dist.parts) == [Fraction(1, 3)] * 3
    assert all(len(p.edges) == 2 for p in dist.parts)
    assert set(dist.marginals.values()) == {Fraction(2, 3)}
    assert dist.verify(triangle)


def test_single_edge_decomposition(equality_edge):
    dist = forest_decomposition(equality_edge, 1)
    assert len(dist.parts) == 1
    assert dist.parts[0].weight == 1
    assert dist.parts[0].edges == frozenset({0})


def test_path_decomposition():
    inst = path3()
    dist = forest_decomposition(inst, 2)
    assert sum(p.weight for p in dist.parts) == 1
    assert all(m == Fraction(2, 3) for m in dist.marginals.values())


@pytest.mark.parametrize("seed", range(20))
def test_support_is_thin(seed):
    d = 2 + seed % 3
    inst = gen_random_bounded(9, d, 2, 14, 0.5, seed)
    dist = forest_decomposition(inst, d)
    assert len(dist.parts) <= inst.num_edges + 1
    assert dist.violations(inst) == []


def test_arboricity_mode(triangle):
    dist = forest_decomposition(triangle, 2, DecompositionMode.ARBORICITY)
    assert dist.uniform_floor == Fraction(1, 2)
    assert all(m >= Fraction(1, 2) for m in dist.marginals.values())
    assert dist.verify(triangle)


def test_decomposition_rejects_degree_overflow():
    with pytest.raises(PreconditionError):
        forest_decomposition(star3(), 2)


def test_decomposition_rejects_parallel_edges():
    inst = make_instance((2, 2), [(0, 1, EQUALITY), (1, 0, EQUALITY)])
    with pytest.raises(PreconditionError):
        forest_decomposition(inst, 2)


# === Tree DP ===
def test_tree_dp_single_edge(equality_edge):
    psi, count = tree_dp(equality_edge, {0})
    assert count == 1
    assert psi.labels == (0, 0)


def test_tree_dp_path():
    psi, count = tree_dp(path3(), {0, 1})
    assert count == 2
    assert psi.labels[0] == psi.labels[1] != psi.labels[2]


def test_tree_dp_star():
    _, count = tree_dp(star3(), {0, 1, 2})
    assert count == 3


def test_tree_dp_untouched_vertices_get_zero(triangle):
    psi, count = tree_dp(triangle, {0})
    assert count == 1
    assert psi.labels[2] == 0


def test_tree_dp_rejects_cycle(triangle):
    with pytest.raises(PreconditionError):
        tree_dp(triangle, {0, 1, 2})


# === Approximation ===
def test_forest_instance_is_solved_exactly():
    for inst in (path3(), star3()):
        result = approx_solve(inst, inst.max_degree)
        assert result.value == brute_val(inst).value == 1


def test_triangle_ratio(triangle):
    result = approx_solve(triangle, 2)
    assert result.value >= Fraction(4, 9)
    assert result.value == Fraction(2, 3)
    assert result.weighted_forest_satisfied >= Fraction(2, 3) * 2


@pytest.mark.parametrize("seed", range(100))
def test_ratio_on_random_instances(seed):
    d = 2 + seed % 3
    alphabet = 2 + seed % 2
    inst = gen_random_bounded(8, d, alphabet, 12, 0.4, seed)
    result = approx_solve(inst, d)
    best = brute_val(inst)
    assert result.value >= Fraction(2, d + 1) * best.value
    assert result.certificate.verify(inst)
