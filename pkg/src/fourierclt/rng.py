"""Reproducible random streams.

Every draw comes from a Philox (counter-based) generator keyed by
``(seed, stream, block)``. Samples are produced in fixed-size blocks, so the
output for a given ``(seed, stream, n)`` is identical for any worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable

import numpy as np

from fourierclt.constants import SAMPLE_CHUNK
from fourierclt.errors import DomainError

BlockFill = Callable[[np.random.Generator, int], np.ndarray]

# Stream indices reserved per purpose.
STREAM_SAMPLE = 0
STREAM_DISCOUNTED = 1
STREAM_AR1 = 2


def make_generator(seed: int, *key: int) -> np.random.Generator:
    if int(seed) < 0:
        raise DomainError(f"seed must be non-negative, got {seed}")
    ss = np.random.SeedSequence(entropy=int(seed), spawn_key=tuple(int(k) for k in key))
    return np.random.Generator(np.random.Philox(ss))


def block_sizes(n: int, chunk: int = SAMPLE_CHUNK) -> list[int]:
    if n < 1:
        raise DomainError(f"sample count must be >= 1, got {n}")
    full, rest = divmod(n, chunk)
    sizes = [chunk] * full
    if rest:
        sizes.append(rest)
    return sizes


def draw_blocks(
    fill: BlockFill,
    n: int,
    *,
    seed: int,
    stream: int,
    jobs: int = 1,
) -> np.ndarray:
    sizes = block_sizes(n)

    def _block(i: int) -> np.ndarray:
        return np.asarray(fill(make_generator(seed, stream, i), sizes[i]), dtype=float)

    if jobs <= 1 or len(sizes) == 1:
        parts = [_block(i) for i in range(len(sizes))]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_block, range(len(sizes))))

    return np.concatenate(parts)
