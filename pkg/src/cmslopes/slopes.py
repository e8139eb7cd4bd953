"""Slope sequences of p-divisible groups: canonical form, predicates, enumeration."""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

__all__ = [
    "SlopeSequence",
    "make_slope_sequence",
    "is_symmetric",
    "is_integral",
    "is_ordinary",
    "is_supersingular",
    "enumerate_symmetric_integral",
    "enumerate_half_valued",
    "brute_force_symmetric_integral",
    "ordinary",
    "supersingular",
]

HALF = Fraction(1, 2)


@dataclass(frozen=True, order=True)
class SlopeSequence:
    """Sorted multiset of ``2g`` exact rationals in ``[0, 1]``.

    Build through :func:`make_slope_sequence`; the constructor assumes its
    input is already canonical and only checks it.
    """

    slopes: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.slopes) == 0 or len(self.slopes) % 2:
            raise ValueError(f"slope sequence must have positive even length, got {len(self.slopes)}")
        if any(a > b for a, b in zip(self.slopes, self.slopes[1:])):
            raise ValueError("slopes must be sorted; use make_slope_sequence")
        if self.slopes[0] < 0 or self.slopes[-1] > 1:
            raise ValueError("slopes must lie in [0, 1]")

    @property
    def g(self) -> int:
        return len(self.slopes) // 2

    def __len__(self):
        return len(self.slopes)

    def __iter__(self):
        return iter(self.slopes)

    def multiplicities(self) -> dict[Fraction, int]:
        return dict(sorted(Counter(self.slopes).items()))

    def to_json(self) -> list[list[int]]:
        return [[s.numerator, s.denominator] for s in self.slopes]

    @classmethod
    def from_json(cls, data) -> "SlopeSequence":
        values = [Fraction(int(n), int(d)) for n, d in data]
        return make_slope_sequence(values, len(values) // 2)

    def compact(self) -> str:
        """Short human form, e.g. ``0, 1/3^3, 2/3^3, 1``."""
        parts = []
        for s, m in self.multiplicities().items():
            parts.append(str(s) if m == 1 else f"{s}^{m}")
        return "(" + ", ".join(parts) + ")"

    def __str__(self):
        return "(" + ", ".join(str(s) for s in self.slopes) + ")"


def make_slope_sequence(values: Iterable, g: int) -> SlopeSequence:
    """Canonicalize ``values`` (ints, Fractions or ``"n/d"`` strings) into a sequence of length ``2g``."""
    vals = [Fraction(v) for v in values]
    if g < 1:
        raise ValueError(f"g must be positive, got {g}")
    if len(vals) != 2 * g:
        raise ValueError(f"expected {2 * g} slopes for g={g}, got {len(vals)}")
    for v in vals:
        if not 0 <= v <= 1:
            raise ValueError(f"slope {v} outside [0, 1]")
    return SlopeSequence(tuple(sorted(vals)))


def is_symmetric(seq: SlopeSequence) -> bool:
    s = seq.slopes
    n = len(s)
    return all(s[i] + s[n - 1 - i] == 1 for i in range(n))


def is_integral(seq: SlopeSequence) -> bool:
    return all(m % s.denominator == 0 for s, m in Counter(seq.slopes).items())


def is_ordinary(seq: SlopeSequence) -> bool:
    return all(s == 0 or s == 1 for s in seq.slopes)


def is_supersingular(seq: SlopeSequence) -> bool:
    return all(s == HALF for s in seq.slopes)


def ordinary(g: int) -> SlopeSequence:
    return make_slope_sequence([0] * g + [1] * g, g)


def supersingular(g: int) -> SlopeSequence:
    return make_slope_sequence([HALF] * (2 * g), g)


def _blocks_below_half(g: int) -> list[Fraction]:
    # reduced n/d < 1/2 whose paired block (2d slopes) fits in length 2g
    out = {Fraction(n, d) for d in range(1, g + 1) for n in range(0, d) if 2 * n < d}
    return sorted(out)


def enumerate_symmetric_integral(g: int) -> set[SlopeSequence]:
    """All symmetric integral slope sequences of length ``2g``.

    A sequence decomposes uniquely into a block of ``2s`` copies of 1/2 plus,
    for distinct reduced ``n/d < 1/2``, ``m*d`` copies each of ``n/d`` and
    ``1 - n/d``, with ``s + sum(m*d) == g``.
    """
    if g < 1:
        raise ValueError(f"g must be positive, got {g}")
    fracs = _blocks_below_half(g)
    result: set[SlopeSequence] = set()

    def place(idx: int, budget: int, acc: list[Fraction]):
        if idx == len(fracs):
            # whatever remains goes to the 1/2-block
            vals = acc + [HALF] * (2 * budget)
            result.add(make_slope_sequence(vals, g))
            return
        lam = fracs[idx]
        d = lam.denominator
        for m in range(0, budget // d + 1):
            block = [lam] * (m * d) + [1 - lam] * (m * d)
            place(idx + 1, budget - m * d, acc + block)

    place(0, g, [])
    return result


def enumerate_half_valued(g: int) -> set[SlopeSequence]:
    """The ``g + 1`` symmetric integral sequences with values in {0, 1/2, 1}."""
    if g < 1:
        raise ValueError(f"g must be positive, got {g}")
    return {
        make_slope_sequence([0] * (g - s) + [HALF] * (2 * s) + [1] * (g - s), g)
        for s in range(g + 1)
    }


def brute_force_symmetric_integral(g: int) -> set[SlopeSequence]:
    """Reference enumeration: every multiset of candidate slopes, filtered by the predicates.

    Candidates are all ``n/d`` in [0, 1] with ``d <= max(g, 2)``. Cost grows
    combinatorially; intended for ``g <= 5``.
    """
    if g < 1:
        raise ValueError(f"g must be positive, got {g}")
    dmax = max(g, 2)
    cands = sorted({Fraction(n, d) for d in range(1, dmax + 1) for n in range(d + 1)})
    # work on integer numerators over a common denominator for speed
    L = math.lcm(*range(1, dmax + 1))
    scaled = [int(c * L) for c in cands]
    out = set()
    for combo in itertools.combinations_with_replacement(range(len(cands)), 2 * g):
        if sum(scaled[i] for i in combo) != g * L:
            continue
        seq = SlopeSequence(tuple(cands[i] for i in combo))
        if is_symmetric(seq) and is_integral(seq):
            out.add(seq)
    return out
