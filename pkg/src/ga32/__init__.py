"""ga32: a fixed-memory generational genetic algorithm.

Populations live in hard-capacity buffers of 100, chromosomes are exactly 32
bits stored as two 16-bit halves, selection is roulette over a cumulative
fitness array, crossover is single-point with split-half semantics, and
mutation replaces whole halves at a per-mille rate. Runs are deterministic
functions of an explicit 64-bit seed.
"""

from .engine import Engine, FitnessFunction, Phase, run
from .genome import (
    CAPACITY,
    Chromosome,
    ConfigError,
    FitnessRangeError,
    GaConfig,
    GaError,
    GenerationStats,
    Mode,
    PopulationState,
    RunResult,
    SequencingError,
    popcount32,
)
from .problems import bitcount_fitness, parse_problem, pattern_fitness
from .prng import SplitMix64
from .report import OutputFormat, Reporter

__version__ = "0.1.0"

__all__ = [
    "CAPACITY",
    "Chromosome",
    "ConfigError",
    "Engine",
    "FitnessFunction",
    "FitnessRangeError",
    "GaConfig",
    "GaError",
    "GenerationStats",
    "Mode",
    "OutputFormat",
    "Phase",
    "PopulationState",
    "Reporter",
    "RunResult",
    "SequencingError",
    "SplitMix64",
    "bitcount_fitness",
    "parse_problem",
    "pattern_fitness",
    "popcount32",
    "run",
    "__version__",
]
