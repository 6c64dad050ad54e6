"""Numba backend: the generation-phase kernels compiled with explicit signatures.

Explicit signatures matter here. Without them numba would re-specialize on
whatever python passes across the boundary (a small int becomes int64, and
int64 + uint64 silently promotes to float64, wrecking the wraparound
arithmetic). Declaring uint64 forces a lossless coercion at every call.
"""

from __future__ import annotations

import numpy as np
from numba import boolean, int64, njit, uint16, uint32, uint64
from numba.types import UniTuple, void

from ..prng import GOLDEN, MASK16, MASK32, MIX1, MIX2

NAME = "numba"

_GOLDEN = np.uint64(GOLDEN)
_MIX1 = np.uint64(MIX1)
_MIX2 = np.uint64(MIX2)
_M32 = np.uint64(MASK32)
_M16 = np.uint64(MASK16)


@njit(uint64(uint64), cache=True)
def _mix(state):
    z = (state ^ (state >> 30)) * _MIX1
    z = (z ^ (z >> 27)) * _MIX2
    return z ^ (z >> 31)


@njit(uint64(uint16[:], uint16[:], int64, uint64), cache=True)
def randomize(t0_a, t0_b, n, state):
    # two separate passes: every a half first, then every b half
    for i in range(n):
        state = state + _GOLDEN
        t0_a[i] = np.int64(_mix(state) & _M16)
    for i in range(n):
        state = state + _GOLDEN
        t0_b[i] = np.int64(_mix(state) & _M16)
    return state


@njit(UniTuple(int64, 4)(uint16[:], uint16[:], uint16[:], int64, int64, int64), cache=True)
def aggregate(fitness, t0_a, t0_b, n, best_a, best_b):
    # strict > comparison: ties keep the earliest maximum, an all-zero
    # generation keeps the previous best candidate
    total = 0
    top = 0
    for i in range(n):
        f = np.int64(fitness[i])
        total += f
        if f > top:
            top = f
            best_a = np.int64(t0_a[i])
            best_b = np.int64(t0_b[i])
    return total, top, best_a, best_b


@njit(void(uint16[:], uint16[:], uint16[:], uint32[:], int64), cache=True)
def sort_and_cdf(fitness, t0_a, t0_b, cdf, n):
    # adjacent-swap bubble sort, strictly-greater only: stable ascending
    for x in range(n - 1):
        for y in range(n - 1 - x):
            if fitness[y] > fitness[y + 1]:
                tf = fitness[y]
                ta = t0_a[y]
                tb = t0_b[y]
                fitness[y] = fitness[y + 1]
                t0_a[y] = t0_a[y + 1]
                t0_b[y] = t0_b[y + 1]
                fitness[y + 1] = tf
                t0_a[y + 1] = ta
                t0_b[y + 1] = tb
    acc = np.int64(0)
    for i in range(n):
        acc += np.int64(fitness[i])
        cdf[i] = acc


@njit(uint64(uint16[:], uint16[:], uint16[:], uint16[:], uint32[:], int64, uint64), cache=True)
def select(t0_a, t0_b, t1_a, t1_b, cdf, n, state):
    total = np.int64(cdf[n - 1])
    if total == 0:
        # zero wheel: individual 0 everywhere, no draws consumed
        for i in range(n):
            t1_a[i] = t0_a[0]
            t1_b[i] = t0_b[0]
        return state
    for i in range(n):
        state = state + _GOLDEN
        r = np.int64((_mix(state) & _M32) % np.uint64(total))
        k = 0
        for j in range(1, n):
            if r >= np.int64(cdf[j - 1]) and r < np.int64(cdf[j]):
                k = j
                break
        t1_a[i] = t0_a[k]
        t1_b[i] = t0_b[k]
    return state


@njit(UniTuple(int64, 4)(int64, int64, int64, int64, int64), cache=True)
def crossover_pair(a1, b1, a2, b2, site):
    # site < 16: swap a-bits [site..15] plus the whole b half;
    # site >= 16: swap b-bits [32-site..15] only (site 16 swaps nothing)
    if site < 16:
        a_mask = (0xFFFF << site) & 0xFFFF
        b_mask = 0xFFFF
    else:
        a_mask = 0
        b_mask = (0xFFFF << (32 - site)) & 0xFFFF
    ta = (a1 ^ a2) & a_mask
    tb = (b1 ^ b2) & b_mask
    return a1 ^ ta, b1 ^ tb, a2 ^ ta, b2 ^ tb


@njit(uint64(uint16[:], uint16[:], int64, int64, boolean, uint64), cache=True)
def mate(t1_a, t1_b, n, mutation_per_mille, compat, state):
    # per pair: site draw, two gate draws, then replacements in gate order;
    # both gates mutate the even-indexed individual only (compat: b half
    # twice; strict: a then b). Odd n pairs index n-1 with phantom slot n.
    i = 0
    while i < n:
        state = state + _GOLDEN
        site = np.int64((_mix(state) & _M32) % np.uint64(31))
        state = state + _GOLDEN
        mut_a = 1 + np.int64((_mix(state) & _M32) % np.uint64(999))
        state = state + _GOLDEN
        mut_b = 1 + np.int64((_mix(state) & _M32) % np.uint64(999))
        if mut_a <= mutation_per_mille:
            state = state + _GOLDEN
            if compat:
                t1_b[i] = np.int64(_mix(state) & _M16)
            else:
                t1_a[i] = np.int64(_mix(state) & _M16)
        if mut_b <= mutation_per_mille:
            state = state + _GOLDEN
            t1_b[i] = np.int64(_mix(state) & _M16)
        a1, b1, a2, b2 = crossover_pair(
            np.int64(t1_a[i]), np.int64(t1_b[i]),
            np.int64(t1_a[i + 1]), np.int64(t1_b[i + 1]), site,
        )
        t1_a[i] = a1
        t1_b[i] = b1
        t1_a[i + 1] = a2
        t1_b[i + 1] = b2
        i += 2
    return state
