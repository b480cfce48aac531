import numpy as np
import pytest

from fourierclt.constants import SAMPLE_CHUNK
from fourierclt.errors import DomainError
from fourierclt.rng import block_sizes, draw_blocks, make_generator


def _normal_fill(rng: np.random.Generator, size: int) -> np.ndarray:
    return rng.standard_normal(size)


def test_block_sizes_split_into_fixed_chunks():
    assert block_sizes(5) == [5]
    assert block_sizes(SAMPLE_CHUNK) == [SAMPLE_CHUNK]
    assert block_sizes(2 * SAMPLE_CHUNK + 3) == [SAMPLE_CHUNK, SAMPLE_CHUNK, 3]


def test_block_sizes_rejects_empty():
    with pytest.raises(DomainError, match=r">= 1"):
        block_sizes(0)


def test_make_generator_rejects_negative_seed():
    with pytest.raises(DomainError, match=r"non-negative"):
        make_generator(-1, 0)


def test_streams_are_independent_and_reproducible():
    a = make_generator(3, 0, 0).standard_normal(8)
    b = make_generator(3, 1, 0).standard_normal(8)
    again = make_generator(3, 0, 0).standard_normal(8)

    np.testing.assert_array_equal(a, again)
    assert not np.array_equal(a, b)


def test_draw_blocks_is_independent_of_jobs():
    n = 3 * SAMPLE_CHUNK + 17
    serial = draw_blocks(_normal_fill, n, seed=11, stream=0, jobs=1)
    threaded = draw_blocks(_normal_fill, n, seed=11, stream=0, jobs=4)

    assert serial.shape == (n,)
    np.testing.assert_array_equal(serial, threaded)


def test_draw_blocks_prefix_is_stable_across_sizes():
    short = draw_blocks(_normal_fill, SAMPLE_CHUNK, seed=2, stream=1)
    longer = draw_blocks(_normal_fill, 2 * SAMPLE_CHUNK, seed=2, stream=1)
    np.testing.assert_array_equal(short, longer[:SAMPLE_CHUNK])
