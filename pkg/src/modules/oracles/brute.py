"""Exhaustive ground-truth solvers.

Assignments are enumerated in lexicographic order (vertex 0 most significant)
in numpy chunks; the first optimum found is returned as witness.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import prod

import numpy as np

from src.config import settings
from src.core.exceptions import DegenerateInstanceError, SizeLimitError
from src.modules.csp.models import Assignment, CspInstance, PartialAssignment
from src.shared.logger import log_call, logger

_CHUNK = 1 << 16


@dataclass(frozen=True)
class ValResult:
    value: Fraction
    satisfied: int
    assignment: Assignment


@dataclass(frozen=True)
class CvalResult:
    size: int
    partial: PartialAssignment


def _tables(inst: CspInstance, with_unset: bool) -> list[np.ndarray]:
    """Per-edge allowed matrix; with_unset adds an always-true last row/column."""
    extra = 1 if with_unset else 0
    tables = []
    for e in inst.edges:
        table = np.zeros((inst.alphabets[e.u] + extra, inst.alphabets[e.v] + extra), dtype=bool)
        for a, b in e.allowed:
            table[a, b] = True
        if with_unset:
            table[-1, :] = True
            table[:, -1] = True
        tables.append(table)
    return tables


def _enumerate(sizes: list[int], cap: int, what: str):
    """Yield label matrices (chunk x n) covering the mixed-radix space in order."""
    total = prod(sizes)
    if total > cap:
        raise SizeLimitError(what, cap, total)
    strides = [prod(sizes[v + 1 :]) for v in range(len(sizes))]
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        yield np.stack([(idx // s) % r for s, r in zip(strides, sizes, strict=True)], axis=1).reshape(
            len(idx), len(sizes)
        )


@log_call()
def brute_val(inst: CspInstance, cap: int | None = None) -> ValResult:
    """Exact val(Π) with the lexicographically first optimal assignment."""
    if inst.num_edges == 0:
        raise DegenerateInstanceError("brute_val")
    cap = settings.BRUTE_FORCE_CAP if cap is None else cap
    tables = _tables(inst, with_unset=False)

    best_count, best_labels = -1, None
    for labels in _enumerate(list(inst.alphabets), cap, "assignment space"):
        counts = np.zeros(len(labels), dtype=np.int64)
        for e, table in zip(inst.edges, tables, strict=True):
            counts += table[labels[:, e.u], labels[:, e.v]]
        i = int(np.argmax(counts))
        if counts[i] > best_count:
            best_count, best_labels = int(counts[i]), labels[i]
            if best_count == inst.num_edges:
                break

    logger.debug(f"brute_val | n={inst.n}, edges={inst.num_edges}, best={best_count}")
    return ValResult(
        value=Fraction(best_count, inst.num_edges),
        satisfied=best_count,
        assignment=Assignment(tuple(best_labels.tolist())),
    )


@log_call()
def brute_cval(inst: CspInstance, cap: int | None = None) -> CvalResult:
    """Largest consistent partial assignment; label |Σ_v| encodes unset."""
    cap = settings.BRUTE_FORCE_CAP if cap is None else cap
    sizes = [s + 1 for s in inst.alphabets]
    if inst.n == 0:
        return CvalResult(size=0, partial=PartialAssignment(()))
    tables = _tables(inst, with_unset=True)
    unset = np.asarray(inst.alphabets, dtype=np.int64)

    best_size, best_labels = -1, None
    for labels in _enumerate(sizes, cap, "partial assignment space"):
        ok = np.ones(len(labels), dtype=bool)
        for e, table in zip(inst.edges, tables, strict=True):
            ok &= table[labels[:, e.u], labels[:, e.v]]
        size = np.where(ok, (labels != unset).sum(axis=1), -1)
        i = int(np.argmax(size))
        if size[i] > best_size:
            best_size, best_labels = int(size[i]), labels[i]
            if best_size == inst.n:
                break

    partial = tuple(
        None if int(x) == inst.alphabets[v] else int(x) for v, x in enumerate(best_labels)
    )
    return CvalResult(size=best_size, partial=PartialAssignment(partial))
