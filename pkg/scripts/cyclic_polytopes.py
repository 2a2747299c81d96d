#!/usr/bin/env python3
"""Table of chi_n for cyclic polytopes CP(m, 2n) and CP(m, 2n+1)."""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from relaxcol import SearchConfig, chromatic_number, cyclic_polytope
from relaxcol.errors import BudgetExhausted


@dataclass
class Config:
    max_m: int = 10
    max_n: int = 2
    budget: int | None = 5_000_000


def expected(m: int, dim: int, n: int) -> int:
    if dim == 2 * n:
        return 2 if m % 2 == 0 else 3
    return 4 if n == 1 else 3


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-m", type=int, default=Config.max_m)
    p.add_argument("--max-n", type=int, default=Config.max_n)
    p.add_argument("--budget", type=int, default=Config.budget)
    cfg = Config(**vars(p.parse_args()))
    print(f"{'m':>3} {'d':>3} {'n':>3} {'facets':>7} {'chi_n':>6} {'expected':>9} {'sec':>7}")
    bad = 0
    for n in range(1, cfg.max_n + 1):
        for dim in (2 * n, 2 * n + 1):
            for m in range(dim + 1, cfg.max_m + 1):
                K = cyclic_polytope(m, dim)
                t = time.perf_counter()
                try:
                    r = str(chromatic_number(K, n, SearchConfig(budget=cfg.budget)).number)
                except BudgetExhausted as exc:
                    r = f"{exc.lower}..{exc.upper}"
                want = expected(m, dim, n)
                bad += r != str(want)
                print(f"{m:>3} {dim:>3} {n:>3} {len(K.facets):>7} {r:>6} {want:>9} {time.perf_counter() - t:>7.2f}")
    print("all rows match" if not bad else f"{bad} rows differ")


if __name__ == "__main__":
    main()
