"""Cyclic groups Z/nZ and (Z/lZ)^x with subgroups, cosets and Frobenius data.

Elements are plain canonical integer residues. Primality is decided by trial
division, which is deterministic and fast for the sizes used here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

__all__ = [
    "is_prime",
    "divisors",
    "FiniteAbelianGroup",
    "Subgroup",
    "CosetPartition",
    "cyclic",
    "units_mod",
    "element_order",
    "subgroup_of_order",
    "frobenius_subgroup",
    "coset_partition",
    "complex_conjugation",
    "parse_group",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def divisors(n: int) -> list[int]:
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Either the additive group Z/nZ (``kind="cyclic"``) or the units of Z/lZ (``kind="units"``)."""

    kind: str
    modulus: int

    def __post_init__(self):
        if self.kind == "cyclic":
            if self.modulus < 1:
                raise ValueError(f"cyclic group order must be positive, got {self.modulus}")
        elif self.kind == "units":
            if self.modulus < 3 or not is_prime(self.modulus):
                raise ValueError(f"units-mod requires an odd prime, got {self.modulus}")
        else:
            raise ValueError(f"unknown group kind {self.kind!r}")

    @property
    def order(self) -> int:
        return self.modulus if self.kind == "cyclic" else self.modulus - 1

    @property
    def identity(self) -> int:
        return 0 if self.kind == "cyclic" else 1

    @property
    def elements(self) -> list[int]:
        if self.kind == "cyclic":
            return list(range(self.modulus))
        return list(range(1, self.modulus))

    def contains(self, a: int) -> bool:
        if self.kind == "cyclic":
            return 0 <= a < self.modulus
        return 1 <= a < self.modulus

    def normalize(self, a: int) -> int:
        """Reduce an integer to its canonical residue, rejecting non-units."""
        r = a % self.modulus
        if self.kind == "units" and r == 0:
            raise ValueError(f"{a} is not a unit modulo {self.modulus}")
        return r

    def op(self, a: int, b: int) -> int:
        if self.kind == "cyclic":
            return (a + b) % self.modulus
        return (a * b) % self.modulus

    def power(self, a: int, k: int) -> int:
        if self.kind == "cyclic":
            return (a * k) % self.modulus
        return pow(a, k, self.modulus)

    @cached_property
    def generator(self) -> int:
        if self.kind == "cyclic":
            return 1 % self.modulus
        n = self.order
        qs = _prime_factors(n)
        for a in range(2, self.modulus):
            if all(pow(a, n // q, self.modulus) != 1 for q in qs):
                return a
        raise RuntimeError(f"no primitive root found modulo {self.modulus}")

    def __str__(self):
        return f"Z/{self.modulus}Z" if self.kind == "cyclic" else f"(Z/{self.modulus}Z)^x"


def cyclic(n: int) -> FiniteAbelianGroup:
    return FiniteAbelianGroup("cyclic", n)


def units_mod(ell: int) -> FiniteAbelianGroup:
    return FiniteAbelianGroup("units", ell)


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteAbelianGroup
    elements: tuple[int, ...]

    def __post_init__(self):
        els = set(self.elements)
        G = self.parent
        if not all(G.contains(a) for a in els):
            raise ValueError(f"elements outside {G}")
        if G.identity not in els:
            raise ValueError("subgroup must contain the identity")
        if any(G.op(a, b) not in els for a in els for b in els):
            raise ValueError("subset is not closed under the group operation")

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, a) -> bool:
        return a in self.elements

    def __len__(self):
        return len(self.elements)


@dataclass(frozen=True)
class CosetPartition:
    subgroup: Subgroup
    cosets: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.cosets)

    def __iter__(self):
        return iter(self.cosets)


def element_order(G: FiniteAbelianGroup, a: int) -> int:
    if not G.contains(a):
        raise ValueError(f"{a} is not an element of {G}")
    e, x, k = G.identity, a, 1
    while x != e:
        x = G.op(x, a)
        k += 1
    return k


def _generated(G: FiniteAbelianGroup, a: int) -> Subgroup:
    els, x = [G.identity], a
    while x != G.identity:
        els.append(x)
        x = G.op(x, a)
    return Subgroup(G, tuple(sorted(els)))


def subgroup_of_order(G: FiniteAbelianGroup, f: int) -> Subgroup:
    """The unique subgroup of order ``f`` of the cyclic group ``G``."""
    if f < 1 or G.order % f:
        raise ValueError(f"{f} does not divide |{G}| = {G.order}")
    return _generated(G, G.power(G.generator, G.order // f))


def frobenius_subgroup(ell: int, p: int) -> Subgroup:
    """Decomposition group of ``p`` in Q(zeta_ell): the cyclic subgroup of (Z/ellZ)^x generated by ``p``."""
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if ell < 3 or not is_prime(ell):
        raise ValueError(f"ell={ell} is not an odd prime")
    if p == ell:
        raise ValueError(f"p={p} ramifies in Q(zeta_{ell})")
    G = units_mod(ell)
    return _generated(G, p % ell)


def coset_partition(H: Subgroup) -> CosetPartition:
    G = H.parent
    seen: set[int] = set()
    cosets = []
    for a in G.elements:  # ascending, so identity coset comes first
        if a in seen:
            continue
        coset = tuple(sorted(G.op(a, h) for h in H.elements))
        seen.update(coset)
        cosets.append(coset)
    return CosetPartition(H, tuple(cosets))


def complex_conjugation(G: FiniteAbelianGroup) -> int:
    if G.order % 2:
        raise ValueError(f"{G} has odd order {G.order}; no complex conjugation")
    if G.kind == "cyclic":
        return G.modulus // 2
    return G.modulus - 1


def parse_group(text: str) -> FiniteAbelianGroup:
    """Parse ``cyclic:<n>`` or ``units:<ell>``."""
    kind, _, arg = text.partition(":")
    kind = kind.strip().lower()
    if kind in ("cyclic", "z"):
        return cyclic(int(arg))
    if kind in ("units", "units-mod"):
        return units_mod(int(arg))
    raise ValueError(f"cannot parse group {text!r}; expected cyclic:<n> or units:<ell>")
