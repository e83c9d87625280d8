"""Instance builders shared by the tests."""

from src.modules.csp.models import Bipartition, Constraint, CspInstance

EQUALITY = frozenset({(0, 0), (1, 1)})
INEQUALITY = frozenset({(0, 1), (1, 0)})


def make_instance(
    alphabets: tuple[int, ...],
    edges: list[tuple[int, int, frozenset]],
    left: tuple[int, ...] | None = None,
) -> CspInstance:
    bipartition = None
    if left is not None:
        right = tuple(v for v in range(len(alphabets)) if v not in left)
        bipartition = Bipartition(left=tuple(sorted(left)), right=right)
    return CspInstance(
        n=len(alphabets),
        alphabets=alphabets,
        edges=tuple(
            Constraint(id=i, u=u, v=v, allowed=allowed) for i, (u, v, allowed) in enumerate(edges)
        ),
        bipartition=bipartition,
    )
