"""Synthetic instance sources.

Planted biregular instances stand in for the large-gap hardness instances the
reductions start from; random bounded instances feed the oracle sweeps.
"""

from dataclasses import dataclass

import numpy as np

from src.core.exceptions import ParameterError
from src.modules.csp.models import Assignment, Bipartition, Constraint, CspInstance
from src.shared.logger import log_call, logger

_SIMPLE_ATTEMPTS = 20


@dataclass(frozen=True)
class PlantedInstance:
    """Generated instance plus the assignment hidden in it."""

    instance: CspInstance
    planted: Assignment


def _biregular_pairs(
    n_a: int, n_b: int, d1: int, d2: int, rng: np.random.Generator
) -> list[tuple[int, int]]:
    """Simple (d1, d2)-biregular bipartite edge list on [n_a] x [n_b]."""
    left_stubs = np.repeat(np.arange(n_a), d1)
    right_stubs = np.repeat(np.arange(n_b), d2)
    for _ in range(_SIMPLE_ATTEMPTS):
        matched = rng.permutation(right_stubs)
        pairs = set(zip(left_stubs.tolist(), matched.tolist(), strict=True))
        if len(pairs) == len(left_stubs):
            return sorted(pairs)

    # Circulant layout is always simple when d1 <= n_b; relabel both sides at random.
    logger.debug(f"Configuration model kept colliding, using circulant | n_a={n_a}, n_b={n_b}")
    left_perm = rng.permutation(n_a)
    right_perm = rng.permutation(n_b)
    pairs = {
        (int(left_perm[a]), int(right_perm[(a * d1 + i) % n_b])) for a in range(n_a) for i in range(d1)
    }
    return sorted(pairs)


@log_call()
def gen_planted(
    n_a: int,
    n_b: int,
    d1: int,
    d2: int,
    r_left: int,
    r_right: int | None = None,
    noise: float = 0.0,
    seed: int = 0,
    extra_density: float = 0.1,
) -> PlantedInstance:
    """Planted (d1, d2)-biregular bipartite instance.

    Each edge contains the planted pair with probability 1 - noise; every other
    pair is added independently with probability extra_density.
    """
    r_right = r_left if r_right is None else r_right
    if min(n_a, n_b, d1, d2) < 1:
        raise ParameterError("Side sizes and degrees must be positive")
    if n_a * d1 != n_b * d2:
        raise ParameterError(
            f"Infeasible degree sequence: n_a*d1={n_a * d1} != n_b*d2={n_b * d2}", parameter="d1"
        )
    if d1 > n_b or d2 > n_a:
        raise ParameterError("Degrees exceed the opposite side; no simple biregular graph exists")
    if min(r_left, r_right) < 1:
        raise ParameterError("Alphabet sizes must be positive")
    if not 0.0 <= noise <= 1.0:
        raise ParameterError(f"noise must lie in [0, 1], got {noise}", parameter="noise")
    if not 0.0 <= extra_density <= 1.0:
        raise ParameterError(f"extra_density must lie in [0, 1], got {extra_density}")

    rng = np.random.default_rng(seed)
    pairs = _biregular_pairs(n_a, n_b, d1, d2, rng)
    planted_left = rng.integers(r_left, size=n_a)
    planted_right = rng.integers(r_right, size=n_b)
    keep_planted = rng.random(len(pairs)) >= noise
    extras = rng.random((len(pairs), r_left, r_right)) < extra_density

    edges = []
    for idx, (a, b) in enumerate(pairs):
        sa, sb = int(planted_left[a]), int(planted_right[b])
        mask = extras[idx]
        mask[sa, sb] = bool(keep_planted[idx])
        allowed = frozenset((int(x), int(y)) for x, y in zip(*np.nonzero(mask), strict=True))
        edges.append(Constraint(id=idx, u=a, v=n_a + b, allowed=allowed))

    instance = CspInstance(
        n=n_a + n_b,
        alphabets=(r_left,) * n_a + (r_right,) * n_b,
        edges=tuple(edges),
        bipartition=Bipartition(
            left=tuple(range(n_a)), right=tuple(range(n_a, n_a + n_b))
        ),
    )
    planted = Assignment(tuple(planted_left.tolist()) + tuple(planted_right.tolist()))
    logger.debug(f"Planted instance generated | n={instance.n}, edges={instance.num_edges}, seed={seed}")
    return PlantedInstance(instance=instance, planted=planted)


def gen_random_bounded(
    n: int,
    d: int,
    alphabet: int,
    num_edges: int,
    density: float,
    seed: int,
    left_size: int | None = None,
    d_right: int | None = None,
) -> CspInstance:
    """Random instance with a simple constraint graph of max degree <= d.

    With left_size the graph is bipartite (A = first left_size vertices) and
    right vertices are bounded by d_right instead.
    """
    if n < 2 or d < 1 or alphabet < 1 or num_edges < 0:
        raise ParameterError("Need n >= 2, d >= 1, alphabet >= 1, num_edges >= 0")
    if not 0.0 <= density <= 1.0:
        raise ParameterError(f"density must lie in [0, 1], got {density}", parameter="density")

    rng = np.random.default_rng(seed)
    if left_size is None:
        candidates = [(u, v) for u in range(n) for v in range(u + 1, n)]
        bounds = [d] * n
    else:
        if not 0 < left_size < n:
            raise ParameterError("left_size must leave both sides non-empty")
        candidates = [(a, b) for a in range(left_size) for b in range(left_size, n)]
        right_bound = d if d_right is None else d_right
        bounds = [d] * left_size + [right_bound] * (n - left_size)

    order = rng.permutation(len(candidates))
    degree = [0] * n
    chosen: list[tuple[int, int]] = []
    for idx in order:
        if len(chosen) >= num_edges:
            break
        u, v = candidates[idx]
        if degree[u] < bounds[u] and degree[v] < bounds[v]:
            chosen.append((u, v))
            degree[u] += 1
            degree[v] += 1

    edges = []
    for eid, (u, v) in enumerate(sorted(chosen)):
        mask = rng.random((alphabet, alphabet)) < density
        allowed = frozenset((int(x), int(y)) for x, y in zip(*np.nonzero(mask), strict=True))
        edges.append(Constraint(id=eid, u=u, v=v, allowed=allowed))

    bipartition = None
    if left_size is not None:
        bipartition = Bipartition(left=tuple(range(left_size)), right=tuple(range(left_size, n)))
    return CspInstance(n=n, alphabets=(alphabet,) * n, edges=tuple(edges), bipartition=bipartition)
