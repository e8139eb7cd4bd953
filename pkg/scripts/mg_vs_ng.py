"""Tabulate M_g (achievable, interval CM type) against its bound and N_g."""

import argparse
from dataclasses import dataclass

from cmslopes.slopes import enumerate_symmetric_integral
from cmslopes.theorems import achievable_set, standard_cm_type, theorem23_beta, upper_bound_Mg


@dataclass
class Config:
    g_min: int = 2
    g_max: int = 16


def main(cfg: Config):
    print(f"{'g':>3} {'M_g':>4} {'bound':>5} {'N_g':>6}  beta")
    for g in range(cfg.g_min, cfg.g_max + 1):
        m = len(set(achievable_set(standard_cm_type(g)).values()))
        n = len(enumerate_symmetric_integral(g))
        print(f"{g:>3} {m:>4} {upper_bound_Mg(g):>5} {n:>6}  {theorem23_beta(g).beta.compact()}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--g-min", type=int, default=Config.g_min)
    ap.add_argument("--g-max", type=int, default=Config.g_max)
    a = ap.parse_args()
    main(Config(a.g_min, a.g_max))
