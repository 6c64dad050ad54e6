"""Pure numpy fallback backend.

Must stay bit-identical to the numba backend: the parity suite runs both
against the same literal-transcription oracle. Batch draws exploit the fact
that the splitmix64 state after k steps is ``state + k * GOLDEN`` (mod 2**64),
so a whole block of outputs vectorizes as one hash over an arange.
"""

from __future__ import annotations

import numpy as np

from ..prng import GOLDEN, MASK16, MASK32, MASK64, MIX1, MIX2, mix64

NAME = "numpy"

_GOLDEN = np.uint64(GOLDEN)
_MIX1 = np.uint64(MIX1)
_MIX2 = np.uint64(MIX2)


def _next(state):
    state = (state + GOLDEN) & MASK64
    return state, mix64(state)


def _mix_batch(state, count):
    """Next ``count`` outputs as a uint64 array, plus the advanced state."""
    z = np.arange(1, count + 1, dtype=np.uint64) * _GOLDEN + np.uint64(state)
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    z = z ^ (z >> np.uint64(31))
    return (state + count * GOLDEN) & MASK64, z


def randomize(t0_a, t0_b, n, state):
    """Fill both half-arrays with 16-bit draws: all of a first, then all of b."""
    state, z = _mix_batch(state, 2 * n)
    halves = (z & np.uint64(MASK16)).astype(np.uint16)
    t0_a[:n] = halves[:n]
    t0_b[:n] = halves[n:]
    return state

def aggregate(fitness, t0_a, t0_b, n, best_a, best_b):
    """Sum and max of fitness; best candidate = first strict maximum.

    When every fitness is zero the strict comparison never fires and the
    previous best candidate is returned unchanged.
    """
    f = fitness[:n]
    total = int(f.sum(dtype=np.int64))
    top = int(f.max())
    if top > 0:
        i = int(np.argmax(f))  # first occurrence, same as a strict > scan
        best_a = int(t0_a[i])
        best_b = int(t0_b[i])
    return total, top, best_a, best_b


def sort_and_cdf(fitness, t0_a, t0_b, cdf, n):
    """Stable ascending co-sort of (fitness, a, b) plus inclusive prefix sums."""
    order = np.argsort(fitness[:n], kind="stable")
    fitness[:n] = fitness[order]
    t0_a[:n] = t0_a[order]
    t0_b[:n] = t0_b[order]
    cdf[:n] = np.cumsum(fitness[:n], dtype=np.uint32)


def select(t0_a, t0_b, t1_a, t1_b, cdf, n, state):
    """Roulette-copy n individuals into the next-generation buffers.

    Draw r in [0, cdf[n-1]); the winner is the first j >= 1 with
    cdf[j-1] <= r < cdf[j], else 0 -- which is exactly a right-bisect.
    A zero wheel selects individual 0 for every slot without drawing.
    """
    total = int(cdf[n - 1])
    if total == 0:
        t1_a[:n] = t0_a[0]
        t1_b[:n] = t0_b[0]
        return state
    state, z = _mix_batch(state, n)
    draws = (z & np.uint64(MASK32)) % np.uint64(total)
    idx = np.searchsorted(cdf[:n], draws, side="right")
    t1_a[:n] = t0_a[idx]
    t1_b[:n] = t0_b[idx]
    return state


def crossover_pair(a1, b1, a2, b2, site):
    """Split-half single-point crossover of one pair, site in [0, 30].

    site < 16: swap a-bits [site..15] and the whole b half.
    site >= 16: leave a alone, swap b-bits [32-site..15] (site 16 swaps
    nothing at all). Bits are indexed least-significant-first.
    """
    if site < 16:
        a_mask = (0xFFFF << site) & 0xFFFF
        b_mask = 0xFFFF
    else:
        a_mask = 0
        b_mask = (0xFFFF << (32 - site)) & 0xFFFF
    ta = (a1 ^ a2) & a_mask
    tb = (b1 ^ b2) & b_mask
    return a1 ^ ta, b1 ^ tb, a2 ^ ta, b2 ^ tb


def mate(t1_a, t1_b, n, mutation_per_mille, compat, state):
    """Mutate and cross adjacent pairs (0,1), (2,3), ...

    Per pair, in draw order: crossover site from [0,30], two mutation gates
    from [1,999], then one 16-bit replacement per fired gate. Both gates hit
    only the even-indexed individual: in compat mode both overwrite its b
    half (the second winning), in strict mode the first gate takes the a
    half. The odd partner is never mutated. With n odd the final pair is
    (n-1, n), dragging the zero-initialized slot at index n into mating.
    """
    i = 0
    while i < n:
        state, z = _next(state)
        site = (z & MASK32) % 31
        state, z = _next(state)
        mut_a = 1 + (z & MASK32) % 999
        state, z = _next(state)
        mut_b = 1 + (z & MASK32) % 999
        if mut_a <= mutation_per_mille:
            state, z = _next(state)
            if compat:
                t1_b[i] = z & MASK16
            else:
                t1_a[i] = z & MASK16
        if mut_b <= mutation_per_mille:
            state, z = _next(state)
            t1_b[i] = z & MASK16
        a1, b1, a2, b2 = crossover_pair(
            int(t1_a[i]), int(t1_b[i]), int(t1_a[i + 1]), int(t1_b[i + 1]), site
        )
        t1_a[i] = a1
        t1_b[i] = b1
        t1_a[i + 1] = a2
        t1_b[i + 1] = b2
        i += 2
    return state
