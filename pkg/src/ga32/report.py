"""Per-generation reporting: serial-style text, CSV, and JSON.

The ``paper`` text format is byte-stable for golden-file comparison: single
linefeed line endings, binary rendered without leading zeros (zero prints as
``0``), and cumulative verbosity levels 0..2.
"""

from __future__ import annotations

import enum
import json
import sys

from .genome import GaConfig, RunResult

CSV_HEADER = "generation,top_fitness,sum_fitness,best_a,best_b"
SWEEP_CSV_HEADER = "seed,best_ever,first_attained_at,final_top,final_sum"
MAX_VERBOSITY = 2


class OutputFormat(enum.Enum):
    PAPER = "paper"
    CSV = "csv"
    JSON = "json"


class Reporter:
    """Streams generation reports to an append-only text sink.

    Verbosity (paper format only) is cumulative: level 1 adds the top
    candidate in binary and decimal, level 2 dumps every individual, the
    selection CDF, and the mated next generation.
    """

    def __init__(
        self,
        fmt: OutputFormat = OutputFormat.PAPER,
        verbosity: int = 0,
        sink=None,
        config: GaConfig | None = None,
    ):
        if not 0 <= verbosity <= MAX_VERBOSITY:
            raise ValueError(f"verbosity must be in [0, {MAX_VERBOSITY}], got {verbosity}")
        if fmt is OutputFormat.JSON and config is None:
            raise ValueError("JSON reporting needs the run config for the document echo")
        self.fmt = fmt
        self.verbosity = verbosity
        self.sink = sink if sink is not None else sys.stdout
        self.config = config

    def report_run_header(self) -> None:
        if self.fmt is OutputFormat.PAPER:
            self.sink.write("\n\n")
        elif self.fmt is OutputFormat.CSV:
            self.sink.write(CSV_HEADER + "\n")
        # JSON assembles its document at the end of the run

    def report_generation(self, engine, generation: int) -> None:
        """Report one processed, not-yet-advanced generation."""
        if self.fmt is OutputFormat.PAPER:
            self._paper_generation(engine, generation)
        elif self.fmt is OutputFormat.CSV:
            s = engine.state
            self.sink.write(
                f"{generation},{s.top_fitness},{s.sum_fitness},{s.best_a},{s.best_b}\n"
            )

    def finalize_run(self, result: RunResult) -> None:
        if self.fmt is not OutputFormat.JSON:
            return
        config = self.config
        doc = {
            "config": {
                "pop_size": config.pop_size,
                "n_generations": config.n_generations,
                "mutation_per_mille": config.mutation_per_mille,
                "mode": config.mode.value,
                "seed": config.seed,
            },
            "generations": [
                {
                    "generation": st.generation,
                    "top_fitness": st.top_fitness,
                    "sum_fitness": st.sum_fitness,
                    "best_a": st.best.a,
                    "best_b": st.best.b,
                }
                for st in result.per_generation
            ],
            "best_ever": {
                "a": result.best_ever.a,
                "b": result.best_ever.b,
                "fitness": result.best_ever_fitness,
                "first_attained_at": result.first_attained_at,
            },
        }
        json.dump(doc, self.sink, indent=2)
        self.sink.write("\n")

    def _paper_generation(self, engine, generation: int) -> None:
        w = self.sink.write
        s = engine.state
        n = engine.config.pop_size
        w(
            f"generation={generation} , top fitness={s.top_fitness}"
            f" , sum fitness={s.sum_fitness}\n"
        )
        if self.verbosity >= 1:
            w(f"top candidate (BIN):{s.best_a:b} {s.best_b:b}\n")
            w(f"top candidate (DEC):{s.best_a} {s.best_b}\n")
        if self.verbosity >= 2:
            w("printing each individual+fitness\n")
            for i in range(n):
                w(f"{int(s.t0_a[i]):b} {int(s.t0_b[i]):b} ({int(s.fitness[i])})\n")
            w("printing next gen expected count\n")
            for i in range(n):
                w(f"individual={i} , {int(s.cdf[i])}\n")
            w("printing each of next gen individuals\n")
            for i in range(n):
                w(f"{int(s.t1_a[i]):b} {int(s.t1_b[i]):b}\n")
