"""Core value types: chromosomes, run configuration, fixed-capacity buffers.

Everything here is sized for the fixed-memory target the engine models:
buffer capacity is hard-wired at 100 individuals and a chromosome is exactly
32 bits stored as two 16-bit halves. Neither is a tunable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

CAPACITY = 100
HALF_BITS = 16
CHROMOSOME_BITS = 32
HALF_MASK = 0xFFFF
MAX_FITNESS = 100           # per-individual ceiling, enforced in strict mode
MAX_RAW_FITNESS = 0xFFFF    # storage limit of the 16-bit fitness buffer
MAX_GENERATIONS = 65535
MAX_MUTATION_PER_MILLE = 1000
MAX_SEED = (1 << 64) - 1


class GaError(Exception):
    """Base class for engine errors."""


class ConfigError(GaError):
    """A configuration value violates its documented bound."""


class SequencingError(GaError):
    """An engine call arrived out of lifecycle order."""


class FitnessRangeError(GaError):
    """A fitness write is outside the range the active mode accepts."""


class Mode(enum.Enum):
    """COMPAT reproduces the historical fixed-array behavior, quirks included;
    STRICT applies the minimal corrections and tighter validation."""

    COMPAT = "compat"
    STRICT = "strict"


@dataclass(frozen=True)
class Chromosome:
    """One candidate solution: halves ``a`` (high) and ``b`` (low), 16 bits each.

    Bit ``j`` of a half is indexed least-significant-first.
    """

    a: int
    b: int

    def __post_init__(self):
        for name, half in (("a", self.a), ("b", self.b)):
            if not 0 <= half <= HALF_MASK:
                raise ValueError(f"half {name} out of 16-bit range: {half}")

    def as_u32(self) -> int:
        return (self.a << HALF_BITS) | self.b


def popcount32(c: Chromosome) -> int:
    """Number of set bits across both halves, in [0, 32]."""
    return c.a.bit_count() + c.b.bit_count()


def bit_read(half: int, j: int) -> int:
    """Bit ``j`` (least-significant-first) of a 16-bit half."""
    return (half >> j) & 1


def bit_write(half: int, j: int, bit: int) -> int:
    """Copy of ``half`` with bit ``j`` set to ``bit``."""
    if bit:
        return half | (1 << j)
    return half & ~(1 << j) & HALF_MASK


@dataclass(frozen=True)
class GaConfig:
    """Run parameters. ``validate`` checks the mode-dependent bounds."""

    pop_size: int
    n_generations: int
    mutation_per_mille: int
    mode: Mode = Mode.STRICT
    seed: int = 0

    def validate(self) -> None:
        if self.mode is Mode.STRICT:
            if not 2 <= self.pop_size <= CAPACITY:
                raise ConfigError(
                    f"pop_size must be in [2, {CAPACITY}] in strict mode, got {self.pop_size}"
                )
            if self.pop_size % 2 != 0:
                raise ConfigError(
                    f"pop_size must be even in strict mode, got {self.pop_size}; "
                    f"use --mode compat to allow odd sizes"
                )
        else:
            if not 1 <= self.pop_size <= CAPACITY:
                raise ConfigError(
                    f"pop_size must be in [1, {CAPACITY}] in compat mode, got {self.pop_size}"
                )
        if not 1 <= self.n_generations <= MAX_GENERATIONS:
            raise ConfigError(
                f"n_generations must be in [1, {MAX_GENERATIONS}], got {self.n_generations}"
            )
        if not 0 <= self.mutation_per_mille <= MAX_MUTATION_PER_MILLE:
            raise ConfigError(
                f"mutation_per_mille must be in [0, {MAX_MUTATION_PER_MILLE}], "
                f"got {self.mutation_per_mille}"
            )
        if not 0 <= self.seed <= MAX_SEED:
            raise ConfigError(f"seed must be an unsigned 64-bit integer, got {self.seed}")


class PopulationState:
    """Fixed-capacity generation buffers plus the running statistics scalars.

    Every buffer is allocated at full capacity and zero-initialized no matter
    the population size; slots at or past ``pop_size`` are never grown and
    (aside from the odd-size mating quirk in compat mode) never written.
    """

    __slots__ = (
        "t0_a", "t0_b", "t1_a", "t1_b", "fitness", "cdf",
        "top_fitness", "sum_fitness", "best_a", "best_b",
    )

    def __init__(self):
        self.t0_a = np.zeros(CAPACITY, dtype=np.uint16)
        self.t0_b = np.zeros(CAPACITY, dtype=np.uint16)
        self.t1_a = np.zeros(CAPACITY, dtype=np.uint16)
        self.t1_b = np.zeros(CAPACITY, dtype=np.uint16)
        self.fitness = np.zeros(CAPACITY, dtype=np.uint16)
        self.cdf = np.zeros(CAPACITY, dtype=np.uint32)
        self.top_fitness = 0
        self.sum_fitness = 0
        self.best_a = 0
        self.best_b = 0

    def best_chromosome(self) -> Chromosome:
        return Chromosome(self.best_a, self.best_b)


@dataclass(frozen=True)
class GenerationStats:
    """What one generation reported: statistics plus the best candidate seen."""

    generation: int
    top_fitness: int
    sum_fitness: int
    best: Chromosome


@dataclass(frozen=True)
class RunResult:
    """Aggregated outcome of a full run.

    ``best_ever_fitness`` is the running maximum of per-generation top
    fitness; ``first_attained_at`` is the earliest generation reaching it.
    """

    per_generation: tuple[GenerationStats, ...]
    best_ever: Chromosome
    best_ever_fitness: int
    first_attained_at: int
