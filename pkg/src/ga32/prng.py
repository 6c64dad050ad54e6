"""Deterministic 64-bit PRNG behind every stochastic decision in the engine.

The generator is splitmix64: a 64-bit counter advanced by a fixed odd
increment, hashed through two xor-shift-multiply rounds. Its whole state is
one integer, it is trivial to port, and identical seeds yield identical
streams in any language, which is the property this project actually needs.
Not cryptographic.

``draw_range`` keeps the classic modulo bias on purpose: for the ranges used
here (at most 10,000 outcomes against a 32-bit draw) the bias is below 3e-6
per outcome, and bit-for-bit reproducibility beats statistical purity.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
MASK32 = 0xFFFFFFFF
MASK16 = 0xFFFF

# splitmix64 constants
GOLDEN = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB


def mix64(state: int) -> int:
    """Output hash of one raw splitmix64 state word."""
    z = ((state ^ (state >> 30)) * MIX1) & MASK64
    z = ((z ^ (z >> 27)) * MIX2) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """Seedable splitmix64 stream.

    Two instances built from the same seed produce identical sequences;
    advancing never consults external entropy.
    """

    __slots__ = ("state",)

    def __init__(self, seed: int):
        if not 0 <= seed <= MASK64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
        self.state = seed

    def next_u64(self) -> int:
        """Advance one step and return the next 64-bit output."""
        self.state = (self.state + GOLDEN) & MASK64
        return mix64(self.state)

    def next_u16(self) -> int:
        """Low 16 bits of the next 64-bit output (one step)."""
        return self.next_u64() & MASK16

    def draw_range(self, lo: int, hi: int) -> int:
        """Uniform draw from the half-open interval [lo, hi).

        Degenerate case: ``hi == lo`` returns ``lo`` without consuming a
        draw, so an all-zero roulette wheel stays well-defined. Otherwise
        the low 32 bits of one 64-bit output are reduced modulo the span.
        """
        if lo > hi:
            raise ValueError(f"empty range: lo={lo} > hi={hi}")
        if not 0 <= lo <= MASK32 or not 0 <= hi <= MASK32:
            raise ValueError(f"bounds must be unsigned 32-bit integers, got [{lo}, {hi})")
        if hi == lo:
            return lo
        return lo + (self.next_u64() & MASK32) % (hi - lo)
