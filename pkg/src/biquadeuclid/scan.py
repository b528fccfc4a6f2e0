"""Batch evaluation of every triple in a box, emitted as CSV rows."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .euclid import Decision, decide_triple
from .genus import BiquadTriple
from .intarith import primes_up_to
from .table1 import COLUMNS, compute_row

SCAN_COLUMNS = COLUMNS + ["verdict", "case", "bullet"]
FILTERS = ("all", "Yes", "No", "Unknown")


@dataclass(frozen=True)
class ScanConfig:
    p1_max: int
    q_max: int
    filter: str = "all"
    with_hk: bool = False
    workers: int = 1

    def __post_init__(self):
        if self.p1_max < 3 or self.q_max < 3:
            raise ValueError("scan bounds must be at least 3")
        if self.filter not in FILTERS:
            raise ValueError(f"filter must be one of {FILTERS}")
        if self.workers < 1:
            raise ValueError("workers must be positive")


def triples(cfg: ScanConfig) -> Iterator[BiquadTriple]:
    """Valid triples with q1 < q2, in lexicographic order."""
    qs = primes_up_to(cfg.q_max)
    for p1 in primes_up_to(cfg.p1_max):
        for i, q1 in enumerate(qs):
            if q1 == p1:
                continue
            for q2 in qs[i + 1:]:
                if q2 != p1:
                    yield BiquadTriple(p1, q1, q2)


def scan_record(t: BiquadTriple, with_hk: bool) -> dict:
    d: Decision = decide_triple(t)
    row = compute_row(*t.as_tuple(), with_hk=with_hk).cells()
    g = d.certificate.genus
    if row["euclidean"] not in ("Y", "N"):
        row["euclidean"] = ""
    row.update(verdict=d.verdict.value, case=str(g.case_label),
               bullet="" if g.bullet is None else str(g.bullet))
    return row


def _chunk(args: tuple[int, list[tuple[int, int, int]], bool, str]) -> list[dict]:
    _, items, with_hk, flt = args
    out = []
    for tup in items:
        rec = scan_record(BiquadTriple(*tup), with_hk)
        if flt == "all" or rec["verdict"] == flt:
            out.append(rec)
    return out


def run_scan(cfg: ScanConfig) -> list[dict]:
    by_p1: dict[int, list] = {}
    for t in triples(cfg):
        by_p1.setdefault(t.p1, []).append(t.as_tuple())
    jobs = [(p1, items, cfg.with_hk, cfg.filter) for p1, items in sorted(by_p1.items())]
    if cfg.workers == 1:
        parts = [_chunk(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            parts = list(pool.map(_chunk, jobs))
    records = [r for part in parts for r in part]
    records.sort(key=lambda r: (int(r["p1"]), int(r["q1"]), int(r["q2"])))
    return records


def render_scan_csv(records: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=SCAN_COLUMNS, lineterminator="\n")
    w.writeheader()
    w.writerows(records)
    return buf.getvalue()

