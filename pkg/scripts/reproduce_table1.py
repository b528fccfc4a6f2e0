"""Recompute the paper's Table 1, print it next to the fixture and time each column.

    python scripts/reproduce_table1.py [--out table1.csv]
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass

from biquadeuclid import table1
from biquadeuclid.biquad import kuroda
from biquadeuclid.genus import BiquadTriple
from biquadeuclid.quadfield import fundamental_unit


@dataclass(frozen=True)
class Config:
    out: str | None = None


def main(cfg: Config) -> int:
    t0 = time.perf_counter()
    rows = [table1.compute_row(*key) for key in table1.TABLE1_TRIPLES]
    elapsed = time.perf_counter() - t0
    print(f"{'(p1,q1,q2)':<14}{'hK':>4} {'Q':>2} {'h0,h1,h2':<10}{'sym':>7}  "
          f"{'eps':<16}{'unit':>5}  E")
    for r in rows:
        k = kuroda(BiquadTriple(r.p1, r.q1, r.q2))
        unit = "" if r.unit_symbol is None else str(r.unit_symbol)
        print(f"{str((r.p1, r.q1, r.q2)).replace(' ', ''):<14}{r.hK:>4} {k.Q:>2} "
              f"{f'{k.h0},{k.h1},{k.h2}':<10}{f'{r.sym1},{r.sym2}':>7}  "
              f"{fundamental_unit(r.p1).render():<16}{unit:>5}  {r.euclidean}")
    diffs = table1.verify()
    print(f"\ncomputed in {elapsed:.2f} s; {26 - len({d.row for d in diffs})}/26 rows "
          f"match the fixture")
    for d in diffs:
        print(f"MISMATCH {d}")
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(table1.render_csv(rows))
    return 1 if diffs else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", help="also write the recomputed CSV here")
    sys.exit(main(Config(**vars(ap.parse_args()))))
