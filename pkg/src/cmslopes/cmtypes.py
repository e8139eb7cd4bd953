"""CM types on cyclic Galois groups and the Shimura-Taniyama slope map.

A reduction at an unramified prime is modelled only through the pair
``(phi, D_p)``: each coset ``aD_p`` contributes the slope
``|phi & aD_p| / |D_p|`` with multiplicity ``|D_p|``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .groups import (
    FiniteAbelianGroup,
    Subgroup,
    complex_conjugation,
    coset_partition,
    frobenius_subgroup,
    units_mod,
)
from .slopes import SlopeSequence, make_slope_sequence

__all__ = [
    "CMType",
    "CMTypeError",
    "validate_cm_type",
    "interval_cm_type",
    "is_primitive",
    "stabilizer",
    "shimura_taniyama_slopes",
    "reduction_slopes_cyclotomic",
    "parse_cm_type",
]


class CMTypeError(ValueError):
    pass


@dataclass(frozen=True)
class CMType:
    group: FiniteAbelianGroup
    phi: tuple[int, ...]

    @property
    def g(self) -> int:
        return self.group.order // 2


def validate_cm_type(group: FiniteAbelianGroup, phi: Iterable[int]) -> CMType:
    """Check that ``phi`` and its conjugate ``phi*c`` partition ``group``."""
    if group.order % 2:
        raise CMTypeError(f"{group} has odd order; it carries no CM type")
    raw = list(phi)
    elems = sorted({group.normalize(a) for a in raw})
    g = group.order // 2
    if len(elems) != len(raw) or len(elems) != g:
        raise CMTypeError(f"a CM type on {group} needs {g} distinct elements, got {raw}")
    c = complex_conjugation(group)
    chosen = set(elems)
    for a in elems:
        b = group.op(a, c)
        if b in chosen:
            raise CMTypeError(f"{a} and its conjugate {b} both lie in phi")
    return CMType(group, tuple(elems))


def interval_cm_type(group: FiniteAbelianGroup) -> CMType:
    """``{0, ..., g-1}`` on Z/2gZ, ``{1, ..., g}`` on (Z/lZ)^x."""
    g = group.order // 2
    start = group.identity
    return validate_cm_type(group, range(start, start + g))


def stabilizer(cm: CMType) -> list[int]:
    G, phi = cm.group, set(cm.phi)
    return [h for h in G.elements if {G.op(a, h) for a in phi} == phi]


def is_primitive(cm: CMType) -> bool:
    return stabilizer(cm) == [cm.group.identity]


def shimura_taniyama_slopes(cm: CMType, D: Subgroup) -> SlopeSequence:
    if D.parent != cm.group:
        raise ValueError(f"subgroup lives in {D.parent}, CM type in {cm.group}")
    f = D.order
    phi = set(cm.phi)
    values = []
    for coset in coset_partition(D):
        values.extend([Fraction(len(phi.intersection(coset)), f)] * f)
    return make_slope_sequence(values, cm.g)


def reduction_slopes_cyclotomic(ell: int, cm: CMType, p: int) -> SlopeSequence:
    if cm.group != units_mod(ell):
        raise ValueError(f"CM type must live on (Z/{ell}Z)^x, got {cm.group}")
    return shimura_taniyama_slopes(cm, frobenius_subgroup(ell, p))


def parse_cm_type(group: FiniteAbelianGroup, text: str) -> CMType:
    """Parse a comma-separated element list such as ``"0,1,2"``."""
    try:
        elems = [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise CMTypeError(f"cannot parse CM type {text!r}") from exc
    return validate_cm_type(group, elems)
