"""Verify Honda-curve predictions over a range of primes by point counting."""

import argparse
import time
from dataclasses import dataclass

from cmslopes.groups import is_prime
from cmslopes.honda import PointCountCache, honda_verify


@dataclass
class Config:
    ells: tuple[int, ...] = (3, 5, 7)
    p_max: int = 40
    max_field: int = 2 * 10**6  # skip pairs whose cross-check field is larger
    workers: int = 1
    cache: str | None = None


def main(cfg: Config) -> int:
    cache = PointCountCache(cfg.cache) if cfg.cache else None
    bad = 0
    for ell in cfg.ells:
        g = (ell - 1) // 2
        for p in range(3, cfg.p_max + 1):
            if not is_prime(p) or p == ell or p ** (g + 1) > cfg.max_field:
                continue
            t0 = time.perf_counter()
            r = honda_verify(ell, p, workers=cfg.workers, cache=cache)
            bad += not r.ok
            print(f"ell={ell:<3d} p={p:<4d} f={r.f:<3d} {r.computed.compact():<28s} "
                  f"match={r.match} xcheck={r.cross_check_ok} ({time.perf_counter() - t0:.2f}s)")
    return 1 if bad else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ells", type=int, nargs="+", default=list(Config.ells))
    ap.add_argument("--p-max", type=int, default=Config.p_max)
    ap.add_argument("--max-field", type=int, default=Config.max_field)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--cache")
    a = ap.parse_args()
    raise SystemExit(main(Config(tuple(a.ells), a.p_max, a.max_field, a.workers, a.cache)))
