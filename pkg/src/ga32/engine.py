"""The generational GA state machine.

Lifecycle per generation: the caller writes one fitness value per individual
(directly or through ``evaluate_with``), ``process_generation`` aggregates
statistics, sorts the population with its cumulative-fitness array, roulette-
copies survivors into the next-generation buffers and mates them, and
``advance`` promotes the next generation. A two-state phase guard turns
out-of-order calls into ``SequencingError`` instead of silent garbage.

The four phase steps are also exposed individually for instrumentation and
testing; they perform no phase bookkeeping except that ``mate``, the terminal
step, marks the generation as processed.
"""

from __future__ import annotations

import enum
from typing import Callable

from .genome import (
    Chromosome,
    FitnessRangeError,
    GaConfig,
    GenerationStats,
    MAX_FITNESS,
    MAX_RAW_FITNESS,
    Mode,
    PopulationState,
    RunResult,
    SequencingError,
)
from .kernels import get_kernels

FitnessFunction = Callable[[Chromosome], int]


class Phase(enum.Enum):
    AWAITING_FITNESS = "awaiting_fitness"
    PROCESSED = "processed"


class Engine:
    """One GA run over fixed-capacity buffers, driven by a seeded splitmix64."""

    def __init__(self, config: GaConfig, kernels=None):
        config.validate()
        self.config = config
        self.state = PopulationState()
        self.phase = Phase.AWAITING_FITNESS
        self._k = kernels if kernels is not None else get_kernels()
        self._rng_state = config.seed
        self.randomize_population()

    @property
    def rng_state(self) -> int:
        """Raw splitmix64 accumulator; exposed for draw accounting in tests."""
        return self._rng_state

    @property
    def backend(self) -> str:
        return self._k.NAME

    def randomize_population(self) -> None:
        """Fill the current generation with fresh 16-bit draws (a's, then b's)."""
        s = self.state
        self._rng_state = int(
            self._k.randomize(s.t0_a, s.t0_b, self.config.pop_size, self._rng_state)
        )

    def get_chromosome(self, i: int) -> Chromosome:
        self._check_index(i)
        return Chromosome(int(self.state.t0_a[i]), int(self.state.t0_b[i]))

    def set_fitness(self, i: int, fitness: int) -> None:
        """Record the caller-evaluated fitness of individual ``i``.

        Strict mode rejects values above 100; compat mode accepts anything
        the 16-bit buffer can hold.
        """
        if self.phase is not Phase.AWAITING_FITNESS:
            raise SequencingError("fitness can only be written before process_generation")
        self._check_index(i)
        limit = MAX_RAW_FITNESS if self.config.mode is Mode.COMPAT else MAX_FITNESS
        if not 0 <= fitness <= limit:
            raise FitnessRangeError(
                f"fitness {fitness} out of range [0, {limit}] for {self.config.mode.value} mode"
            )
        self.state.fitness[i] = fitness

    def evaluate_with(self, problem: FitnessFunction) -> None:
        """Evaluate every individual once, in index order."""
        for i in range(self.config.pop_size):
            self.set_fitness(i, problem(self.get_chromosome(i)))

    def aggregate_stats(self) -> None:
        """Sum/max the fitness buffer and latch the best candidate (strict >)."""
        s = self.state
        total, top, best_a, best_b = self._k.aggregate(
            s.fitness, s.t0_a, s.t0_b, self.config.pop_size, s.best_a, s.best_b
        )
        s.sum_fitness = int(total)
        s.top_fitness = int(top)
        s.best_a = int(best_a)
        s.best_b = int(best_b)

    def sort_and_build_cdf(self) -> None:
        """Co-sort (fitness, t0) ascending, stably, and build the inclusive CDF."""
        s = self.state
        self._k.sort_and_cdf(s.fitness, s.t0_a, s.t0_b, s.cdf, self.config.pop_size)

    def select_into_next(self) -> None:
        """Roulette-select pop_size survivors from t0 into t1."""
        s = self.state
        self._rng_state = int(
            self._k.select(
                s.t0_a, s.t0_b, s.t1_a, s.t1_b, s.cdf, self.config.pop_size, self._rng_state
            )
        )

    def mate(self) -> None:
        """Mutate and cross adjacent t1 pairs; marks the generation processed."""
        s = self.state
        self._rng_state = int(
            self._k.mate(
                s.t1_a,
                s.t1_b,
                self.config.pop_size,
                self.config.mutation_per_mille,
                self.config.mode is Mode.COMPAT,
                self._rng_state,
            )
        )
        self.phase = Phase.PROCESSED

    def process_generation(self) -> None:
        """Run aggregate, sort+CDF, selection and mating, in that order."""
        if self.phase is not Phase.AWAITING_FITNESS:
            raise SequencingError("process_generation called twice without advance")
        self.aggregate_stats()
        self.sort_and_build_cdf()
        self.select_into_next()
        self.mate()

    def advance(self) -> None:
        """Promote t1 to t0 (indices below pop_size only) and reset the phase.

        The slot at index pop_size is deliberately excluded: in compat runs
        with an odd population it only ever changes through mating swaps and
        never propagates into the current generation.
        """
        if self.phase is not Phase.PROCESSED:
            raise SequencingError("advance requires a processed generation")
        n = self.config.pop_size
        s = self.state
        s.t0_a[:n] = s.t1_a[:n]
        s.t0_b[:n] = s.t1_b[:n]
        self.phase = Phase.AWAITING_FITNESS

    def _check_index(self, i: int) -> None:
        if not 0 <= i < self.config.pop_size:
            raise IndexError(f"individual index {i} out of range [0, {self.config.pop_size})")


def run(
    config: GaConfig,
    problem: FitnessFunction,
    reporter=None,
    kernels=None,
) -> RunResult:
    """Execute a full run: evaluate, process, report, advance, per generation.

    The reporter (if any) sees the engine after processing and before
    advancing, so sorted fitness, the CDF and the mated next generation are
    all observable. Identical configs produce identical results.
    """
    engine = Engine(config, kernels=kernels)
    if reporter is not None:
        reporter.report_run_header()
    per_generation = []
    best_fitness = -1
    best = Chromosome(0, 0)
    first_at = 0
    for generation in range(config.n_generations):
        engine.evaluate_with(problem)
        engine.process_generation()
        stats = GenerationStats(
            generation=generation,
            top_fitness=engine.state.top_fitness,
            sum_fitness=engine.state.sum_fitness,
            best=engine.state.best_chromosome(),
        )
        per_generation.append(stats)
        if stats.top_fitness > best_fitness:
            best_fitness = stats.top_fitness
            best = stats.best
            first_at = generation
        if reporter is not None:
            reporter.report_generation(engine, generation)
        engine.advance()
    result = RunResult(
        per_generation=tuple(per_generation),
        best_ever=best,
        best_ever_fitness=best_fitness,
        first_attained_at=first_at,
    )
    if reporter is not None:
        reporter.finalize_run(result)
    return result
