"""Serialization and seeding helpers."""

import hashlib
import json
from typing import Any

import numpy as np


def canonical_json(obj: Any) -> str:
    """Sorted keys, compact separators. Same input, same bytes."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def content_hash(text: str) -> str:
    """SHA-256 hex digest of a canonical JSON document."""
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def derive_seed(seed: int, *index: int) -> int:
    """Child seed for a sub-computation (worker, cell, attempt)."""
    state = np.random.SeedSequence([seed, *index]).generate_state(1, dtype=np.uint32)
    return int(state[0])
