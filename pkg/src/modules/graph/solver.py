"""Exact maximum independent set and claw search.

Branch-and-bound over bitmasks: degree <= 1 vertices are always taken, otherwise
branch on a maximum-degree vertex (include it and drop N[v], or exclude it).
A greedy independent set seeds the bound; a branch is skipped when the number of
remaining candidates cannot beat the best value found.
"""

from src.config import settings
from src.core.exceptions import InternalInvariantError, ParameterError, SizeLimitError
from src.modules.graph.models import ClawWitness, IndependentSet, SimpleGraph
from src.shared.logger import log_call, logger


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _MisSearch:
    """α(G[cand]) for candidate bitmasks of one graph, memoized."""

    def __init__(self, masks: tuple[int, ...]):
        self.masks = masks
        self.memo: dict[int, int] = {0: 0}
        self.nodes = 0

    def greedy(self, cand: int) -> int:
        size = 0
        while cand:
            v = min(_bits(cand), key=lambda x: (self.masks[x] & cand).bit_count())
            cand &= ~(self.masks[v] | (1 << v))
            size += 1
        return size

    def alpha(self, cand: int) -> int:
        cached = self.memo.get(cand)
        if cached is not None:
            return cached
        self.nodes += 1

        taken = 0
        rest = cand
        # Degree 0/1 vertices belong to some maximum independent set.
        changed = True
        while changed and rest:
            changed = False
            for v in _bits(rest):
                if (self.masks[v] & rest).bit_count() <= 1:
                    rest &= ~(self.masks[v] | (1 << v))
                    taken += 1
                    changed = True
                    break

        if not rest:
            self.memo[cand] = taken
            return taken

        pivot = max(_bits(rest), key=lambda x: ((self.masks[x] & rest).bit_count(), -x))
        best = self.greedy(rest)
        include = 1 + self.alpha(rest & ~(self.masks[pivot] | (1 << pivot)))
        best = max(best, include)
        without = rest & ~(1 << pivot)
        if without.bit_count() > best:
            best = max(best, self.alpha(without))

        self.memo[cand] = taken + best
        return taken + best

    def smallest_of_size(self, cand: int, need: int) -> tuple[int, ...]:
        """Lexicographically smallest independent set of size need inside cand."""
        chosen: list[int] = []
        while need > 0:
            for v in _bits(cand):
                higher = cand & ~((1 << (v + 1)) - 1)
                rest = higher & ~self.masks[v]
                if 1 + self.alpha(rest) >= need:
                    chosen.append(v)
                    cand = rest
                    need -= 1
                    break
            else:
                raise InternalInvariantError(f"No independent set of size {need} left in candidates")
        return tuple(chosen)


def _full_mask(n: int) -> int:
    return (1 << n) - 1


@log_call()
def indep_exact(g: SimpleGraph, cap: int | None = None) -> IndependentSet:
    """Maximum independent set size with its lexicographically smallest witness."""
    cap = settings.EXACT_IS_CAP if cap is None else cap
    if g.n > cap:
        raise SizeLimitError("independent set", cap, g.n)
    search = _MisSearch(g.masks)
    size = search.alpha(_full_mask(g.n))
    witness = search.smallest_of_size(_full_mask(g.n), size)
    logger.debug(f"indep_exact done | n={g.n}, size={size}, nodes={search.nodes}")
    return IndependentSet(size=size, witness=witness)


@log_call()
def find_claw(g: SimpleGraph, k: int, cap: int | None = None) -> ClawWitness | None:
    """First induced K_{1,k} by center, leaves lexicographically smallest."""
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}", parameter="k")
    cap = settings.EXACT_IS_CAP if cap is None else cap
    search = _MisSearch(g.masks)
    for center in range(g.n):
        neighborhood = g.masks[center]
        size = neighborhood.bit_count()
        if size < k:
            continue
        if size > cap:
            raise SizeLimitError(f"neighborhood of vertex {center}", cap, size)
        if search.alpha(neighborhood) >= k:
            leaves = search.smallest_of_size(neighborhood, k)
            return ClawWitness(center=center, leaves=leaves)
    return None
