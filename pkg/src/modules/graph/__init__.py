"""Simple graphs: exact independent set, claws, spectra."""

from src.modules.graph.codec import parse_graph, serialize_graph
from src.modules.graph.generators import complete_graph, cycle_graph, random_regular_graph
from src.modules.graph.models import ClawWitness, IndependentSet, SimpleGraph
from src.modules.graph.solver import find_claw, indep_exact
from src.modules.graph.spectral import regular_degree, second_eigenvalue

__all__ = [
    "ClawWitness",
    "IndependentSet",
    "SimpleGraph",
    "complete_graph",
    "cycle_graph",
    "find_claw",
    "indep_exact",
    "parse_graph",
    "random_regular_graph",
    "regular_degree",
    "second_eigenvalue",
    "serialize_graph",
]
