"""Achievable reduction sets for cyclic CM fields and the missing slope sequences."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .cmtypes import CMType, interval_cm_type, shimura_taniyama_slopes
from .groups import cyclic, divisors, is_prime, subgroup_of_order
from .slopes import (
    SlopeSequence,
    enumerate_half_valued,
    enumerate_symmetric_integral,
    is_ordinary,
    is_supersingular,
    make_slope_sequence,
)

__all__ = [
    "SurveyReport",
    "FieldParams",
    "Beta",
    "SearchCapExceeded",
    "achievable_set",
    "upper_bound_Mg",
    "missing_sequences",
    "survey",
    "construct_field_params",
    "theorem23_beta",
    "check_beta_missing",
    "standard_cm_type",
]

SEARCH_CAP_PER_G = 10**6


class SearchCapExceeded(RuntimeError):
    pass


def standard_cm_type(g: int) -> CMType:
    """The interval type ``{0, ..., g-1}`` on Z/2gZ."""
    return interval_cm_type(cyclic(2 * g))


def _require_cyclic(cm: CMType):
    if cm.group.kind != "cyclic":
        raise ValueError(f"expected a CM type on Z/2gZ, got {cm.group}")


def achievable_set(cm: CMType) -> dict[int, SlopeSequence]:
    """Reduction slope sequence for every possible decomposition order ``f | 2g``."""
    _require_cyclic(cm)
    G = cm.group
    return {f: shimura_taniyama_slopes(cm, subgroup_of_order(G, f)) for f in divisors(G.order)}


def upper_bound_Mg(g: int) -> int:
    if g < 1:
        raise ValueError(f"g must be positive, got {g}")
    return 1 + sum(1 for d in divisors(2 * g) if d % 2)


def missing_sequences(cm: CMType) -> set[SlopeSequence]:
    _require_cyclic(cm)
    achieved = set(achievable_set(cm).values())
    return enumerate_symmetric_integral(cm.g) - achieved


@dataclass
class SurveyReport:
    g: int
    cm: CMType
    achievable: dict[int, SlopeSequence]
    m_count: int
    m_bound: int
    missing: set[SlopeSequence] = field(default_factory=set)
    n_count: int = 0

    def half_valued_witnesses(self) -> list[SlopeSequence]:
        """Missing sequences valued in {0, 1/2, 1} that are neither ordinary nor supersingular."""
        half = enumerate_half_valued(self.g)
        return sorted(
            s for s in self.missing & half if not is_ordinary(s) and not is_supersingular(s)
        )

    def to_json(self) -> dict:
        witnesses = set(self.half_valued_witnesses())
        return {
            "g": self.g,
            "group": str(self.cm.group),
            "cm_type": list(self.cm.phi),
            "achievable": {str(f): s.to_json() for f, s in self.achievable.items()},
            "m_count": self.m_count,
            "m_bound": self.m_bound,
            "n_count": self.n_count,
            "missing": [
                {"slopes": s.to_json(), "half_valued_witness": s in witnesses}
                for s in sorted(self.missing)
            ],
        }


def survey(cm: CMType) -> SurveyReport:
    _require_cyclic(cm)
    ach = achievable_set(cm)
    allseq = enumerate_symmetric_integral(cm.g)
    values = set(ach.values())
    return SurveyReport(
        g=cm.g,
        cm=cm,
        achievable=ach,
        m_count=len(values),
        m_bound=upper_bound_Mg(cm.g),
        missing=allseq - values,
        n_count=len(allseq),
    )


@dataclass(frozen=True)
class FieldParams:
    """A prime ``ell = 1 + 2g (mod 4g)`` and the odd index ``m = (ell-1)/2g``."""

    g: int
    ell: int
    m: int


def construct_field_params(g: int, cap: int | None = None) -> FieldParams:
    """Smallest prime in the class ``1 + 2g`` mod ``4g``.

    Gives a cyclic CM field of degree 2g: the fixed field in Q(zeta_ell)
    of the order-m subgroup of (Z/ellZ)^x.
    """
    if g < 1:
        raise ValueError(f"g must be positive, got {g}")
    cap = SEARCH_CAP_PER_G * g if cap is None else cap
    ell = 1 + 2 * g
    for _ in range(cap):
        if is_prime(ell):
            return FieldParams(g, ell, (ell - 1) // (2 * g))
        ell += 4 * g
    raise SearchCapExceeded(f"search cap exceeded: no prime = {1 + 2 * g} mod {4 * g} among {cap} candidates")


@dataclass(frozen=True)
class Beta:
    g: int
    f0: int | None
    beta: SlopeSequence


def theorem23_beta(g: int) -> Beta:
    """Slope sequence missed by every CM abelian variety with Galois CM field of degree 2g.

    For g >= 4 it is built around an ``f0`` coprime to ``2g`` with
    ``1 < f0 < g``; for g = 2, 3 it is (0^{g-1}, 1/2, 1/2, 1^{g-1}).
    """
    if g < 2:
        raise ValueError(f"g must be at least 2, got {g}")
    if g < 4:
        beta = [0] * (g - 1) + [Fraction(1, 2)] * 2 + [1] * (g - 1)
        return Beta(g, None, make_slope_sequence(beta, g))
    f0 = g - 2 if g % 2 else g - 1
    assert math.gcd(f0, 2 * g) == 1 and 1 < f0 < g
    lam = Fraction(1, f0)
    beta = [0] * (g - f0) + [lam] * f0 + [1 - lam] * f0 + [1] * (g - f0)
    return Beta(g, f0, make_slope_sequence(beta, g))


def check_beta_missing(beta: SlopeSequence, cm: CMType) -> bool:
    if beta.g != cm.g:
        raise ValueError(f"beta has length {len(beta)}, CM type has 2g = {2 * cm.g}")
    return beta not in set(achievable_set(cm).values())
