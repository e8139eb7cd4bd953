"""Finite fields F_{p^k} as F_p[x]/(m(x)) for a deterministic irreducible m.

Polynomials over F_p are coefficient lists, lowest degree first. Besides the
scalar :class:`FieldElement` there is a numpy batch path (``batch_*``) that
works on arrays of shape ``(n, k)`` and is what point counting uses.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .groups import divisors, is_prime

__all__ = [
    "FieldContext",
    "FieldElement",
    "SquareClass",
    "make_context",
    "is_irreducible",
    "is_square",
    "enumerate_elements",
    "DEFAULT_ENUMERATION_BOUND",
    "batch_elements",
    "batch_mul",
    "batch_pow",
    "batch_square_class",
]

DEFAULT_ENUMERATION_BOUND = 10**8
MAX_P = 2**32
_BATCH_MAX_P = 2**31  # keeps p*p inside int64


# --- dense polynomial helpers over F_p -------------------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], m: Sequence[int], p: int) -> list[int]:
    a = [x % p for x in a]
    _trim(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(a) - 1 >= dm:
        t = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - t * c) % p
        _trim(a)
    return a


def _poly_mulmod(a: Sequence[int], b: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_mod(out, m, p)


def _poly_powmod(a: Sequence[int], e: int, m: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(list(a), m, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, m, p)
        base = _poly_mulmod(base, base, m, p)
        e >>= 1
    return result


def _poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [x * inv % p for x in a]


def _prime_divisors(n: int) -> list[int]:
    return [d for d in divisors(n) if d > 1 and is_prime(d)]


def is_irreducible(m: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic ``m`` of degree k over F_p.

    ``m`` is irreducible iff ``x^(p^k) = x`` mod ``m`` and
    ``gcd(x^(p^(k/r)) - x, m) = 1`` for each prime ``r | k``.
    """
    k = len(m) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    if _poly_sub(_poly_powmod(x, p**k, m, p), x, p):
        return False
    for r in _prime_divisors(k):
        h = _poly_sub(_poly_powmod(x, p ** (k // r), m, p), x, p)
        if len(_poly_gcd(list(m), h, p)) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def _smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    if k == 1:
        return (0, 1)
    # low-degree-first lexicographic order; c0 = 0 means x divides m
    for low in itertools.product(range(1, p), *[range(p)] * (k - 1)):
        m = list(low) + [1]
        if is_irreducible(m, p):
            return tuple(m)
    raise RuntimeError(f"no irreducible polynomial of degree {k} over F_{p}")  # pragma: no cover


# --- field context and scalar elements ------------------------------------------

@dataclass(frozen=True)
class FieldContext:
    p: int
    k: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p**self.k

    def __call__(self, value) -> "FieldElement":
        """Coerce an int (prime-field constant) or a coefficient list."""
        if isinstance(value, FieldElement):
            if value.ctx != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, int):
            coeffs = [value % self.p]
        else:
            coeffs = [int(c) % self.p for c in value]
        red = _poly_mod(coeffs, self.modulus, self.p)
        return FieldElement(self, tuple(red + [0] * (self.k - len(red))))

    def zero(self) -> "FieldElement":
        return self(0)

    def one(self) -> "FieldElement":
        return self(1)

    def gen(self) -> "FieldElement":
        """The class of ``x``."""
        return self([0, 1])

    def describe(self) -> dict:
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus)}

    def __str__(self):
        return f"F_{self.p}^{self.k} = F_{self.p}[x]/({format_poly(self.modulus)})"


def format_poly(coeffs: Sequence[int]) -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        if not mono:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(terms) or "0"


def make_context(p: int, k: int = 1) -> FieldContext:
    if p < 3 or not is_prime(p):
        raise ValueError(f"p={p} must be an odd prime")
    if p >= MAX_P:
        raise ValueError(f"p={p} exceeds the supported bound 2^32")
    if k < 1:
        raise ValueError(f"extension degree must be positive, got {k}")
    return FieldContext(p, k, _smallest_irreducible(p, k))


@dataclass(frozen=True)
class FieldElement:
    ctx: FieldContext
    coeffs: tuple[int, ...]

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.ctx != self.ctx:
                raise ValueError("context mismatch")
            return other
        if isinstance(other, int):
            return self.ctx(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        p = self.ctx.p
        return FieldElement(self.ctx, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.ctx.p
        return FieldElement(self.ctx, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return self.ctx(_poly_mulmod(self.coeffs, other.coeffs, self.ctx.modulus, self.ctx.p))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return self.ctx(_poly_powmod(self.coeffs, e, self.ctx.modulus, self.ctx.p))

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return self ** (self.ctx.q - 2)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.ctx.k == 1:
            return f"{self.coeffs[0]}"
        return f"{list(self.coeffs)}"


class SquareClass(enum.Enum):
    ZERO = "zero"
    SQUARE = "square"
    NON_SQUARE = "non-square"

    @property
    def root_count(self) -> int:
        return {"zero": 1, "square": 2, "non-square": 0}[self.value]


def is_square(z: FieldElement) -> SquareClass:
    """Euler's criterion in F_q."""
    if z.is_zero():
        return SquareClass.ZERO
    e = z ** ((z.ctx.q - 1) // 2)
    return SquareClass.SQUARE if e == z.ctx.one() else SquareClass.NON_SQUARE


def enumerate_elements(ctx: FieldContext, bound: int = DEFAULT_ENUMERATION_BOUND) -> Iterator[FieldElement]:
    if ctx.q > bound:
        raise ValueError(f"|F_{ctx.p}^{ctx.k}| = {ctx.q} exceeds enumeration bound {bound}")
    for coeffs in itertools.product(range(ctx.p), repeat=ctx.k):
        yield FieldElement(ctx, coeffs)


# --- numpy batch arithmetic --------------------------------------------------------

def batch_elements(ctx: FieldContext, start: int, stop: int) -> np.ndarray:
    """Coefficient rows for elements ``start..stop-1`` in :func:`enumerate_elements` order."""
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((stop - start, ctx.k), dtype=np.int64)
    for j in range(ctx.k - 1, -1, -1):
        out[:, j] = idx % ctx.p
        idx //= ctx.p
    return out


def batch_mul(a: np.ndarray, b: np.ndarray, ctx: FieldContext) -> np.ndarray:
    p, k, m = ctx.p, ctx.k, ctx.modulus
    if k == 1:
        return a * b % p
    lazy = k * (p - 1) ** 2 < 2**62  # whole convolution fits in int64 before reducing
    n = a.shape[0]
    prod = [np.zeros(n, dtype=np.int64) for _ in range(2 * k - 1)]
    for i in range(k):
        ai = a[:, i]
        for j in range(k):
            t = ai * b[:, j]
            prod[i + j] += t if lazy else t % p
            if not lazy:
                prod[i + j] %= p
    for d in range(2 * k - 2, k - 1, -1):
        t = prod[d] % p
        for i in range(k):
            if m[i]:
                prod[d - k + i] -= t * m[i]
                if not lazy:
                    prod[d - k + i] %= p
    return np.stack([c % p for c in prod[:k]], axis=1)


def batch_pow(a: np.ndarray, e: int, ctx: FieldContext) -> np.ndarray:
    result = np.zeros_like(a)
    result[:, 0] = 1
    base = a
    while e:
        if e & 1:
            result = batch_mul(result, base, ctx)
        e >>= 1
        if e:
            base = batch_mul(base, base, ctx)
    return result


def batch_square_class(z: np.ndarray, ctx: FieldContext) -> np.ndarray:
    """Number of square roots (0, 1 or 2) of each row of ``z``, by Euler's criterion."""
    if ctx.p >= _BATCH_MAX_P:
        raise ValueError(f"batch arithmetic needs p < 2^31, got {ctx.p}")
    e = batch_pow(z, (ctx.q - 1) // 2, ctx)
    is_zero = ~z.any(axis=1)
    is_one = (e[:, 0] == 1) & ~e[:, 1:].any(axis=1)
    return np.where(is_zero, 1, np.where(is_one, 2, 0))
