"""Honda's curves y^2 = 1 - x^l: point counts, L-polynomials and Newton polygons.

The curve has genus g = (l-1)/2 and good reduction away from 2 and l. Its
smooth projective model has exactly one point at infinity (odd-degree
model), so ``N_k = 1 + #{(x, y) in F_{p^k}^2 : y^2 = 1 - x^l}``.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

from .cmtypes import interval_cm_type, reduction_slopes_cyclotomic
from .fields import (
    DEFAULT_ENUMERATION_BOUND,
    FieldContext,
    batch_elements,
    batch_pow,
    batch_square_class,
    make_context,
)
from .groups import frobenius_subgroup, is_prime, units_mod
from .slopes import SlopeSequence, is_supersingular, make_slope_sequence

__all__ = [
    "CurveParams",
    "LPolynomial",
    "VerificationReport",
    "PointCountCache",
    "CountingError",
    "count_points",
    "l_polynomial",
    "l_polynomial_from_counts",
    "newton_polygon",
    "newton_polygon_slopes",
    "p_adic_valuation",
    "honda_predict",
    "honda_verify",
]

CHUNK = 1 << 17


class CountingError(ArithmeticError):
    """Raised when point counts are inconsistent with a genus-g zeta function."""


@dataclass(frozen=True)
class CurveParams:
    ell: int
    p: int

    def __post_init__(self):
        if self.ell < 3 or not is_prime(self.ell):
            raise ValueError(f"ell={self.ell} must be an odd prime")
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} must be prime")
        if self.p in (2, self.ell):
            raise ValueError(f"y^2 = 1 - x^{self.ell} has bad reduction at p={self.p}")

    @property
    def g(self) -> int:
        return (self.ell - 1) // 2


class PointCountCache:
    """JSON file mapping ``"ell,p,k"`` to ``N_k``; read-through, write-through."""

    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)
        self._data: dict[str, int] = {}
        if self.path.exists():
            self._data = {k: int(v) for k, v in json.loads(self.path.read_text()).items()}

    @staticmethod
    def key(curve: CurveParams, k: int) -> str:
        return f"{curve.ell},{curve.p},{k}"

    def get(self, curve: CurveParams, k: int) -> int | None:
        return self._data.get(self.key(curve, k))

    def put(self, curve: CurveParams, k: int, n: int):
        self._data[self.key(curve, k)] = int(n)
        tmp = self.path.with_suffix(self.path.suffix + ".tmp")
        tmp.write_text(json.dumps(self._data, indent=1, sort_keys=True))
        tmp.replace(self.path)


def _affine_count_range(ctx: FieldContext, ell: int, start: int, stop: int) -> int:
    x = batch_elements(ctx, start, stop)
    z = -batch_pow(x, ell, ctx) % ctx.p
    z[:, 0] = (z[:, 0] + 1) % ctx.p
    return int(batch_square_class(z, ctx).sum())


def _affine_count_job(args) -> int:
    p, k, modulus, ell, start, stop = args
    return _affine_count_range(FieldContext(p, k, modulus), ell, start, stop)


def count_points(
    curve: CurveParams,
    k: int,
    *,
    bound: int = DEFAULT_ENUMERATION_BOUND,
    workers: int = 1,
    cache: PointCountCache | None = None,
    chunk: int = CHUNK,
) -> int:
    """Number of F_{p^k}-points on the smooth projective model.

    The x-range is cut into chunks of ``chunk`` elements; with ``workers > 1``
    chunks are counted in a process pool and summed.
    """
    if cache is not None:
        hit = cache.get(curve, k)
        if hit is not None:
            return hit
    ctx = make_context(curve.p, k)
    if ctx.q > bound:
        raise ValueError(f"|F_{curve.p}^{k}| = {ctx.q} exceeds enumeration bound {bound}")
    ranges = [(s, min(s + chunk, ctx.q)) for s in range(0, ctx.q, chunk)]
    if workers > 1 and len(ranges) > 1:
        jobs = [(ctx.p, ctx.k, ctx.modulus, curve.ell, s, e) for s, e in ranges]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            affine = sum(pool.map(_affine_count_job, jobs))
    else:
        affine = sum(_affine_count_range(ctx, curve.ell, s, e) for s, e in ranges)
    n = affine + 1
    if cache is not None:
        cache.put(curve, k, n)
    return n


# --- L-polynomial ------------------------------------------------------------------

def _power_sums_to_coeffs(s: list[int]) -> list[int]:
    """Newton's identities for P(T) = prod(1 - a_i T): k c_k = -sum_{i=1..k} s_i c_{k-i}."""
    c = [1]
    for k in range(1, len(s) + 1):
        acc = -sum(s[i - 1] * c[k - i] for i in range(1, k + 1))
        if acc % k:
            raise CountingError(f"non-integral coefficient c_{k} = {Fraction(acc, k)}")
        c.append(acc // k)
    return c


def _coeffs_to_power_sums(c: list[int], n: int) -> list[int]:
    """Inverse direction; coefficients beyond the degree count as zero."""
    s: list[int] = []
    for k in range(1, n + 1):
        ck = c[k] if k < len(c) else 0
        s.append(-k * ck - sum(s[i - 1] * (c[k - i] if k - i < len(c) else 0) for i in range(1, k)))
    return s


@dataclass(frozen=True)
class LPolynomial:
    curve: CurveParams
    coefficients: tuple[int, ...]

    def __post_init__(self):
        c, g, p = self.coefficients, self.curve.g, self.curve.p
        if len(c) != 2 * g + 1 or c[0] != 1:
            raise CountingError(f"malformed L-polynomial {c}")
        for i in range(g + 1):
            if c[2 * g - i] != p ** (g - i) * c[i]:
                raise CountingError(f"functional equation fails at c_{2 * g - i}")
        for i, ci in enumerate(c):
            # |c_i| <= C(2g, i) p^(i/2), squared to stay in integers
            if ci * ci > math.comb(2 * g, i) ** 2 * p**i:
                raise CountingError(f"Weil bound violated by c_{i} = {ci}")

    def power_sums(self, n: int) -> list[int]:
        """``s_k = sum(alpha_i^k)`` for k = 1..n."""
        return _coeffs_to_power_sums(list(self.coefficients), n)

    def predicted_count(self, k: int) -> int:
        return self.curve.p**k + 1 - self.power_sums(k)[-1]

    def jacobian_order(self) -> int:
        return sum(self.coefficients)

    def __str__(self):
        return " + ".join(f"{c}*T^{i}" for i, c in enumerate(self.coefficients) if c)


def l_polynomial_from_counts(curve: CurveParams, counts: list[int]) -> LPolynomial:
    g, p = curve.g, curve.p
    if len(counts) < g:
        raise ValueError(f"need N_1..N_{g}, got {len(counts)} counts")
    s = [p**k + 1 - n for k, n in enumerate(counts[:g], start=1)]
    c = _power_sums_to_coeffs(s)
    c += [p ** (g - i) * c[i] for i in range(g - 1, -1, -1)]
    return LPolynomial(curve, tuple(c))


def l_polynomial(curve: CurveParams, **count_kw) -> LPolynomial:
    counts = [count_points(curve, k, **count_kw) for k in range(1, curve.g + 1)]
    return l_polynomial_from_counts(curve, counts)


# --- Newton polygon ----------------------------------------------------------------

def p_adic_valuation(n: int, p: int) -> int | None:
    """``v_p(n)``, with None standing for +infinity at n = 0."""
    if n == 0:
        return None
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def newton_polygon_slopes(coeffs: list[int], p: int) -> list[Fraction]:
    """Slopes of the lower convex hull of ``(i, v_p(c_i))``, each repeated by its run length."""
    pts = [(i, v) for i, c in enumerate(coeffs) if (v := p_adic_valuation(c, p)) is not None]
    hull: list[tuple[int, int]] = []
    for pt in pts:
        # pop while the last turn is not strictly convex from below
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (pt[1] - y1) - (y2 - y1) * (pt[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(pt)
    slopes: list[Fraction] = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        slopes += [Fraction(y2 - y1, x2 - x1)] * (x2 - x1)
    return slopes


def newton_polygon(lp: LPolynomial) -> SlopeSequence:
    slopes = newton_polygon_slopes(list(lp.coefficients), lp.curve.p)
    if len(slopes) != 2 * lp.curve.g:
        raise CountingError(f"Newton polygon has length {len(slopes)}, expected {2 * lp.curve.g}")
    if any(not 0 <= s <= 1 for s in slopes):
        raise CountingError(f"Newton polygon slope outside [0, 1]: {slopes}")
    return make_slope_sequence(slopes, lp.curve.g)


# --- prediction vs computation -----------------------------------------------------

def honda_predict(ell: int, p: int) -> SlopeSequence:
    """Shimura-Taniyama prediction with CM type {1, ..., g} on (Z/lZ)^x."""
    CurveParams(ell, p)
    return reduction_slopes_cyclotomic(ell, interval_cm_type(units_mod(ell)), p)


@dataclass
class VerificationReport:
    curve: CurveParams
    f: int
    predicted: SlopeSequence
    computed: SlopeSequence
    match: bool
    counts: list[int]
    l_poly: LPolynomial
    cross_check_k: int
    cross_check_counted: int
    cross_check_predicted: int
    moduli: dict[int, list[int]] = field(default_factory=dict)

    @property
    def cross_check_ok(self) -> bool:
        return self.cross_check_counted == self.cross_check_predicted

    @property
    def ok(self) -> bool:
        return self.match and self.cross_check_ok

    def to_json(self) -> dict:
        return {
            "ell": self.curve.ell,
            "p": self.curve.p,
            "g": self.curve.g,
            "f": self.f,
            "moduli": {str(k): m for k, m in sorted(self.moduli.items())},
            "counts": self.counts,
            "l_polynomial": [str(c) for c in self.l_poly.coefficients],
            "predicted": self.predicted.to_json(),
            "computed": self.computed.to_json(),
            "supersingular": is_supersingular(self.computed),
            "match": self.match,
            "cross_check": {
                "k": self.cross_check_k,
                "counted": self.cross_check_counted,
                "from_l_polynomial": self.cross_check_predicted,
                "ok": self.cross_check_ok,
            },
        }


def honda_verify(
    ell: int,
    p: int,
    *,
    bound: int = DEFAULT_ENUMERATION_BOUND,
    workers: int = 1,
    cache: PointCountCache | None = None,
    cross_check: bool = True,
) -> VerificationReport:
    """Count points, rebuild the L-polynomial, and compare its Newton polygon with the prediction.

    A mismatch is reported, not raised. With ``cross_check`` the count over
    F_{p^(g+1)} is also taken and compared with the L-polynomial's value.
    """
    curve = CurveParams(ell, p)
    g = curve.g
    kw = dict(bound=bound, workers=workers, cache=cache)
    counts = [count_points(curve, k, **kw) for k in range(1, g + 1)]
    lp = l_polynomial_from_counts(curve, counts)
    computed = newton_polygon(lp)
    predicted = honda_predict(ell, p)
    extra_k = g + 1
    expected = lp.predicted_count(extra_k)
    counted = count_points(curve, extra_k, **kw) if cross_check else expected
    moduli = {k: list(make_context(p, k).modulus) for k in range(1, (extra_k if cross_check else g) + 1)}
    return VerificationReport(
        curve=curve,
        f=frobenius_subgroup(ell, p).order,
        predicted=predicted,
        computed=computed,
        match=predicted == computed,
        counts=counts,
        l_poly=lp,
        cross_check_k=extra_k,
        cross_check_counted=counted,
        cross_check_predicted=expected,
        moduli=moduli,
    )
