"""Value types: chromosomes, bit helpers, config validation, buffers."""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from ga32 import (
    CAPACITY,
    Chromosome,
    ConfigError,
    GaConfig,
    GenerationStats,
    Mode,
    PopulationState,
    popcount32,
)
from ga32.genome import bit_read, bit_write

halves = st.integers(min_value=0, max_value=0xFFFF)


def test_popcount_zero():
    assert popcount32(Chromosome(0, 0)) == 0


def test_popcount_all_ones():
    assert popcount32(Chromosome(0xFFFF, 0xFFFF)) == 32


def test_popcount_mixed():
    assert popcount32(Chromosome(0x00FF, 0x0F0F)) == 16


def test_chromosome_rejects_out_of_range_halves():
    for a, b in [(-1, 0), (0, -1), (0x10000, 0), (0, 0x10000)]:
        with pytest.raises(ValueError):
            Chromosome(a, b)


def test_as_u32():
    assert Chromosome(0x1234, 0xABCD).as_u32() == 0x1234ABCD


@given(halves, st.integers(min_value=0, max_value=15), st.integers(min_value=0, max_value=1))
def test_bit_round_trip(half, j, bit):
    written = bit_write(half, j, bit)
    assert bit_read(written, j) == bit
    assert 0 <= written <= 0xFFFF
    # other positions untouched
    for k in range(16):
        if k != j:
            assert bit_read(written, k) == bit_read(half, k)


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(pop_size=0, n_generations=1, mutation_per_mille=0, mode=Mode.COMPAT),
        dict(pop_size=101, n_generations=1, mutation_per_mille=0, mode=Mode.COMPAT),
        dict(pop_size=1, n_generations=1, mutation_per_mille=0, mode=Mode.STRICT),
        dict(pop_size=99, n_generations=1, mutation_per_mille=0, mode=Mode.STRICT),
        dict(pop_size=10, n_generations=0, mutation_per_mille=0, mode=Mode.COMPAT),
        dict(pop_size=10, n_generations=65536, mutation_per_mille=0, mode=Mode.COMPAT),
        dict(pop_size=10, n_generations=1, mutation_per_mille=-1, mode=Mode.COMPAT),
        dict(pop_size=10, n_generations=1, mutation_per_mille=1001, mode=Mode.COMPAT),
        dict(pop_size=10, n_generations=1, mutation_per_mille=0, mode=Mode.COMPAT, seed=-1),
        dict(pop_size=10, n_generations=1, mutation_per_mille=0, mode=Mode.COMPAT, seed=1 << 64),
    ],
)
def test_config_rejects_bad_bounds(kwargs):
    with pytest.raises(ConfigError):
        GaConfig(**kwargs).validate()


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(pop_size=1, n_generations=1, mutation_per_mille=0, mode=Mode.COMPAT),
        dict(pop_size=100, n_generations=65535, mutation_per_mille=1000, mode=Mode.COMPAT),
        dict(pop_size=2, n_generations=1, mutation_per_mille=0, mode=Mode.STRICT),
        dict(pop_size=100, n_generations=1, mutation_per_mille=1000, mode=Mode.STRICT),
        dict(pop_size=99, n_generations=1, mutation_per_mille=0, mode=Mode.COMPAT),
    ],
)
def test_config_accepts_bounds(kwargs):
    GaConfig(**kwargs).validate()


def test_strict_odd_size_message_mentions_compat():
    with pytest.raises(ConfigError, match="compat"):
        GaConfig(pop_size=99, n_generations=1, mutation_per_mille=0, mode=Mode.STRICT).validate()


def test_population_state_zero_initialized():
    s = PopulationState()
    for name in ("t0_a", "t0_b", "t1_a", "t1_b", "fitness", "cdf"):
        arr = getattr(s, name)
        assert arr.shape == (CAPACITY,)
        assert not arr.any()
    assert (s.top_fitness, s.sum_fitness, s.best_a, s.best_b) == (0, 0, 0, 0)


def test_population_state_dtypes_are_16_and_32_bit():
    s = PopulationState()
    assert s.t0_a.dtype == np.uint16
    assert s.fitness.dtype == np.uint16
    assert s.cdf.dtype == np.uint32


def test_generation_stats_top_bounded_by_sum():
    st_ = GenerationStats(0, top_fitness=7, sum_fitness=17, best=Chromosome(1, 2))
    assert st_.top_fitness <= st_.sum_fitness
