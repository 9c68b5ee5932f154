"""Deterministic random-stream derivation.

Every run is a pure function of a 64-bit seed.  Substreams (per experiment
leg, per ensemble) are derived from (seed, index, ...) so results never
depend on execution order or worker count.
"""

from __future__ import annotations

import numpy as np


def rng_from(seed: int) -> np.random.Generator:
    """Root generator for a run."""
    return np.random.default_rng(np.random.SeedSequence(int(seed)))


def derived_rng(seed: int, *key: int) -> np.random.Generator:
    """Generator for the substream `key` of run `seed`."""
    return np.random.default_rng(np.random.SeedSequence([int(seed), *(int(k) for k in key)]))
