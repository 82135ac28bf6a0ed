"""Deterministic random-generator derivation.

Every stochastic component derives its generator from (seed, *tags) so that
independent pipeline stages never share or race a generator, and a run is
reproducible from the single seed recorded in its artifacts.
"""

from __future__ import annotations

import hashlib

import numpy as np


def rng_for(seed: int, *tags: str | int) -> np.random.Generator:
    """Generator keyed by a root seed plus a stable tag path."""
    words = [seed & 0xFFFFFFFF, (seed >> 32) & 0xFFFFFFFF]
    for tag in tags:
        digest = hashlib.sha256(str(tag).encode("utf-8")).digest()
        words.append(int.from_bytes(digest[:4], "little"))
        words.append(int.from_bytes(digest[4:8], "little"))
    return np.random.default_rng(np.random.SeedSequence(words))


def glorot_uniform(rng: np.random.Generator, out_dim: int, in_dim: int) -> np.ndarray:
    """Weight matrix drawn uniformly from ±sqrt(6 / (fan_in + fan_out))."""
    limit = np.sqrt(6.0 / (in_dim + out_dim))
    return rng.uniform(-limit, limit, size=(out_dim, in_dim))
