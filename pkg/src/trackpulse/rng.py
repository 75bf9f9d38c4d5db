"""Counter-based random streams.

Every stochastic component (profile sampling, noise, weight init, shuffling,
data splits) draws from a Philox-4x64-10 generator keyed by ``(seed, stream)``.
Streams are independent, so any single record, epoch, or parameter draw can be
reproduced in isolation without replaying the rest of a run.
"""

import numpy as np

RNG_ID = "philox4x64-10"

_MASK64 = (1 << 64) - 1

# stream ids reserved by the package
STREAM_RECORD = 0  # datagen: one stream per (master seed, record index)
STREAM_INIT = 1  # models.build parameter initialization
STREAM_SPLIT = 2  # training.split permutation
STREAM_SHUFFLE = 3  # training epoch shuffling


def philox(seed: int, stream: int = 0) -> np.random.Generator:
    """Generator for the given (seed, stream) pair. Identical pairs yield
    bit-identical draw sequences."""
    key = np.array([int(seed) & _MASK64, int(stream) & _MASK64], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def record_rng(master_seed: int, index: int) -> np.random.Generator:
    """Per-record stream: regenerating one record never disturbs another."""
    key = np.array(
        [int(master_seed) & _MASK64, (int(index) << 8 | STREAM_RECORD) & _MASK64],
        dtype=np.uint64,
    )
    return np.random.Generator(np.random.Philox(key=key))
