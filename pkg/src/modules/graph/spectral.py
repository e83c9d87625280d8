"""Second eigenvalue of the normalized adjacency operator of a regular graph."""

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components
from scipy.sparse.linalg import LinearOperator, eigsh

from src.config import settings
from src.core.exceptions import StructureError
from src.modules.graph.models import SimpleGraph


def _adjacency(g: SimpleGraph) -> csr_matrix:
    rows = np.repeat(np.arange(g.n), g.degrees)
    cols = np.fromiter((u for row in g.adjacency for u in row), dtype=np.int64, count=int(sum(g.degrees)))
    return csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(g.n, g.n))


def regular_degree(g: SimpleGraph) -> int:
    """Common degree t >= 1 of a connected regular graph, else StructureError."""
    degrees = set(g.degrees)
    if g.n == 0 or len(degrees) != 1:
        raise StructureError(f"Graph is not regular (degrees {sorted(degrees)})")
    t = degrees.pop()
    if t < 1:
        raise StructureError("Regular degree must be >= 1")
    count, _ = connected_components(_adjacency(g), directed=False)
    if count != 1:
        raise StructureError(f"Graph is disconnected ({count} components)")
    return t


def second_eigenvalue(g: SimpleGraph, signed: bool = False) -> float:
    """λ₂ of A/t on the complement of the all-ones vector.

    By default the largest magnitude there (so -1 for bipartite graphs counts);
    with signed=True the second-largest eigenvalue itself.
    """
    t = regular_degree(g)
    adjacency = _adjacency(g)

    if g.n <= settings.SPECTRAL_DENSE_LIMIT:
        values = np.linalg.eigvalsh(adjacency.toarray() / t)
        # top eigenvalue is exactly 1 for a connected regular graph
        rest = values[:-1]
        return float(rest[-1]) if signed else float(np.max(np.abs(rest)))

    ones = np.ones(g.n) / np.sqrt(g.n)
    # all-ones direction sent to 0 (magnitude) or -2 (largest algebraic)
    shift = 3.0 if signed else 1.0

    def matvec(x: np.ndarray) -> np.ndarray:
        x = np.ravel(x)
        return adjacency @ x / t - shift * ones * (ones @ x)

    operator = LinearOperator((g.n, g.n), matvec=matvec, dtype=np.float64)
    which = "LA" if signed else "LM"
    values = eigsh(operator, k=1, which=which, tol=1e-10, return_eigenvectors=False)
    return float(values[0]) if signed else float(abs(values[0]))
