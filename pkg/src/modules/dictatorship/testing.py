"""Test functions F: [R]^L -> [R] and the two-query dictatorship test."""

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np
import pydantic

from src.config import settings
from src.core.exceptions import ParameterError, ParseError, SizeLimitError
from src.modules.csp.codec import raise_parse_error
from src.modules.dictatorship.gadget import PredicateGadget
from src.schemas.dictatorship import TestFunctionSchema
from src.shared.enums import EvalMode
from src.shared.logger import log_call

_CHUNK = 1 << 16


@dataclass(frozen=True)
class TestFunction:
    """Explicit table of shape (R,) * L."""

    __test__ = False

    R: int
    L: int
    table: np.ndarray

    def __post_init__(self) -> None:
        if self.R < 1 or self.L < 1:
            raise ParameterError(f"Need R >= 1 and L >= 1 (got R={self.R}, L={self.L})")
        if self.table.shape != (self.R,) * self.L:
            raise ParameterError(f"Table shape {self.table.shape} != {(self.R,) * self.L}")
        if self.table.size and (self.table.min() < 0 or self.table.max() >= self.R):
            raise ParameterError("Table values must lie in [0, R)")

    @classmethod
    def dictator(cls, R: int, L: int, coordinate: int) -> "TestFunction":
        if not 0 <= coordinate < L:
            raise ParameterError(f"Coordinate {coordinate} outside [0, {L})", parameter="coordinate")
        grid = np.indices((R,) * L)
        return cls(R, L, grid[coordinate].astype(np.int64))

    @classmethod
    def constant(cls, R: int, L: int, value: int) -> "TestFunction":
        return cls(R, L, np.full((R,) * L, value, dtype=np.int64))

    @classmethod
    def random(cls, R: int, L: int, seed: int) -> "TestFunction":
        rng = np.random.default_rng(seed)
        return cls(R, L, rng.integers(R, size=(R,) * L))

    @classmethod
    def from_file(cls, path: Path) -> "TestFunction":
        """{"R": int, "L": int, "table": [values in lexicographic order]}."""
        try:
            doc = TestFunctionSchema.model_validate_json(Path(path).read_text(encoding="utf-8"))
        except OSError as exc:
            raise ParseError(f"Cannot read {path}: {exc.strerror}") from exc
        except pydantic.ValidationError as exc:
            raise_parse_error(exc)
        if len(doc.table) != doc.R**doc.L:
            raise ParseError(f"Expected {doc.R**doc.L} table entries, got {len(doc.table)}", location="$.table")
        return cls(doc.R, doc.L, np.asarray(doc.table, dtype=np.int64).reshape((doc.R,) * doc.L))

    def is_balanced(self) -> bool:
        """|F^{-1}(i)| = R^{L-1} for all i."""
        counts = np.bincount(self.table.ravel(), minlength=self.R)
        return bool(np.all(counts == self.R ** (self.L - 1)))

    def indicator(self, i: int) -> np.ndarray:
        return (self.table == i).astype(np.float64)


@log_call()
def test_accept_prob(
    gadget: PredicateGadget,
    f: TestFunction,
    mode: EvalMode = EvalMode.EXACT,
    trials: int = 100_000,
    seed: int = 0,
    cap: int | None = None,
) -> float:
    """Pr over (x_i, y_i) ~ μ^⊗L that (F(x), F(y)) ∈ P."""
    if f.R != gadget.R:
        raise ParameterError(f"Function alphabet {f.R} != gadget alphabet {gadget.R}")
    pairs = gadget.pair_array
    member = gadget.predicate
    size = len(pairs)

    if mode == EvalMode.EXACT:
        return float(exact_accept_fraction(gadget, f, cap))

    if trials < 1:
        raise ParameterError(f"trials must be >= 1, got {trials}", parameter="trials")
    rng = np.random.default_rng(seed)
    idx = rng.integers(size, size=(trials, f.L))
    fx = f.table[tuple(pairs[idx, 0].T)]
    fy = f.table[tuple(pairs[idx, 1].T)]
    return float(member[fx, fy].mean())


def exact_accept_fraction(gadget: PredicateGadget, f: TestFunction, cap: int | None = None) -> Fraction:
    """Exact acceptance probability by enumerating all (tR)^L pair tuples."""
    cap = settings.DICT_EXACT_CAP if cap is None else cap
    pairs = gadget.pair_array
    size = len(pairs)
    total = size**f.L
    if total > cap:
        raise SizeLimitError("dictatorship test space", cap, total)

    strides = [size ** (f.L - 1 - j) for j in range(f.L)]
    accepted = 0
    for start in range(0, total, _CHUNK):
        flat = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        idx = np.stack([(flat // s) % size for s in strides], axis=1).reshape(len(flat), f.L)
        fx = f.table[tuple(pairs[idx, 0].T)]
        fy = f.table[tuple(pairs[idx, 1].T)]
        accepted += int(gadget.predicate[fx, fy].sum())
    return Fraction(accepted, total)


# keep pytest from collecting the operation when tests import it by name
test_accept_prob.__test__ = False
