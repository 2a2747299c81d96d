#!/usr/bin/env python3
"""Recompute the facts recorded for the named complexes and print a table.

For each corpus entry: f-vector, Euler characteristic, s-chromatic numbers
for s = 1..dim+1 with their witnesses, and a few labeled coloring counts.
"""

from __future__ import annotations

import argparse
import json
from dataclasses import asdict, dataclass

from relaxcol import chromatic_number, corpus, count_colorings, factorization_certificate


@dataclass
class Config:
    max_colors: int = 7
    json: bool = False


def run(cfg: Config) -> list[dict]:
    rows = []
    for e in corpus():
        K = e.complex
        chi = {}
        certs = {}
        for s in range(1, K.dim + 2):
            r, w = chromatic_number(K, s)
            chi[s] = {"chi": r, "witness": w.one_based()}
            certs[s] = factorization_certificate(K, w, s, complex_id=e.name).factors
        counts = {f"{r},{s}": count_colorings(K, r, s) for s in (1, 2) for r in range(1, cfg.max_colors + 1)}
        rows.append({"name": e.name, "f_vector": list(K.f_vector()), "euler": K.euler_characteristic(),
                     "chi": chi, "counts": counts, "factors": certs})
    return rows


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-colors", type=int, default=Config.max_colors)
    p.add_argument("--json", action="store_true")
    cfg = Config(**vars(p.parse_args()))
    rows = run(cfg)
    if cfg.json:
        print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2))
        return
    for row in rows:
        print(f"{row['name']:6s} f={tuple(row['f_vector'])} euler={row['euler']}")
        for s, v in row["chi"].items():
            print(f"    chi_{s} = {v['chi']}  witness {v['witness']}")
            for fac in row["factors"][s]:
                print(f"        c_{fac['color']} = {fac['poly']}")
        nonzero = {k: v for k, v in row["counts"].items() if v}
        print("    counts (r,s): " + ", ".join(f"({k})={v}" for k, v in nonzero.items()))


if __name__ == "__main__":
    main()
