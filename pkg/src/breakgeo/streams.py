"""Counter-based random streams.

All randomness in the package flows through `stream(seed, *path)`: a Philox
generator keyed by the user seed plus an integer path. Sample j of an
experiment always draws from `stream(seed, ..., j)`, so results do not depend
on evaluation order or worker count.
"""
from __future__ import annotations

import numpy as np


def stream(seed: int, *path: int) -> np.random.Generator:
    """Independent generator for one logical draw, addressed by (seed, path)."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=path)))
