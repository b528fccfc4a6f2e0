"""Count Yes / No / Unknown verdicts over a box of triples, split by genus case.

A finite-range look at the paper's question Q5 (an infinite family of
non-Galois-over-Q Hilbert class fields with a Euclidean ideal class).

    python scripts/scan_families.py --p1-max 50 --q-max 150 [--csv out.csv]
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from dataclasses import dataclass

from biquadeuclid.scan import ScanConfig, render_scan_csv, run_scan


@dataclass(frozen=True)
class Config:
    p1_max: int = 50
    q_max: int = 150
    workers: int = 1
    csv: str | None = None


def main(cfg: Config) -> int:
    records = run_scan(ScanConfig(cfg.p1_max, cfg.q_max, "all", workers=cfg.workers))
    by_verdict = Counter(r["verdict"] for r in records)
    by_case = Counter((r["case"], r["verdict"]) for r in records)
    print(f"{len(records)} triples with p1 <= {cfg.p1_max}, q1 < q2 <= {cfg.q_max}")
    for v in ("Yes", "No", "Unknown"):
        print(f"  {v:<8}{by_verdict[v]:>7}")
    print("\ncase   Yes     No  Unknown")
    for case in sorted({c for c, _ in by_case}, key=int):
        print(f"{case:>4} {by_case[(case, 'Yes')]:>5} {by_case[(case, 'No')]:>6} "
              f"{by_case[(case, 'Unknown')]:>8}")
    if cfg.csv:
        with open(cfg.csv, "w") as fh:
            fh.write(render_scan_csv(records))
    return 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p1-max", type=int, default=Config.p1_max)
    ap.add_argument("--q-max", type=int, default=Config.q_max)
    ap.add_argument("--workers", type=int, default=Config.workers)
    ap.add_argument("--csv", default=None)
    sys.exit(main(Config(**vars(ap.parse_args()))))
