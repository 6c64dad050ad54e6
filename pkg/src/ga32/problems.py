"""Built-in fitness functions. Anything ``Chromosome -> int`` plugs in the
same way; shipped problems stay within [0, 32] and therefore inside the
engine's strict [0, 100] bound by construction.
"""

from __future__ import annotations

from .genome import CHROMOSOME_BITS, Chromosome, HALF_MASK, popcount32


def bitcount_fitness(c: Chromosome) -> int:
    """Number of ones across the 32 bits: the OneMax objective."""
    return popcount32(c)


def pattern_fitness(target: Chromosome):
    """Fitness = number of bit positions agreeing with ``target`` (0..32).

    ``pattern_fitness`` of the all-ones target is exactly ``bitcount_fitness``.
    """
    target_a = target.a
    target_b = target.b

    def fitness(c: Chromosome) -> int:
        mismatches = (c.a ^ target_a).bit_count() + (c.b ^ target_b).bit_count()
        return CHROMOSOME_BITS - mismatches

    return fitness


def parse_problem(name: str):
    """Resolve a problem selector: ``bitcount`` or ``pattern:<8 hex digits>``.

    The pattern target's high 4 hex digits are half a, the low 4 half b.
    """
    if name == "bitcount":
        return bitcount_fitness
    if name.startswith("pattern:"):
        digits = name.split(":", 1)[1]
        try:
            if len(digits) != 8:
                raise ValueError
            value = int(digits, 16)
        except ValueError:
            raise ValueError(
                f"pattern target must be exactly 8 hex digits, got {digits!r}"
            ) from None
        return pattern_fitness(Chromosome(value >> 16, value & HALF_MASK))
    raise ValueError(
        f"unknown problem {name!r} (expected 'bitcount' or 'pattern:<8-hex-digit target>')"
    )
