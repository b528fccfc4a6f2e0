"""The 26-row golden table: fixture loading, row recomputation and cell diffs."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional, Union

from .biquad import class_number_biquad
from .euclid import Verdict, decide_triple
from .genus import BiquadTriple
from .intarith import jacobi
from .quadfield import fundamental_unit, unit_residue_symbol

COLUMNS = ["p1", "q1", "q2", "hK", "sym1", "sym2", "eps_a", "eps_b", "eps_denom",
           "unit_symbol", "euclidean"]
KEY_COLUMNS = ("p1", "q1", "q2")

# row keys, in table order
TABLE1_TRIPLES = [
    (29, 53, 37), (29, 37, 97), (29, 41, 61), (29, 41, 89), (29, 53, 89), (29, 53, 97),
    (37, 53, 29), (37, 29, 97), (37, 41, 53), (37, 41, 61), (37, 53, 73), (37, 53, 89),
    (37, 53, 97), (37, 73, 61), (37, 73, 89), (37, 73, 97), (41, 61, 29), (41, 29, 89),
    (41, 37, 53), (41, 37, 61), (41, 61, 53), (41, 61, 73), (41, 61, 89), (41, 61, 97),
    (41, 73, 89), (41, 73, 97),
]


class FixtureError(ValueError):
    pass


@dataclass(frozen=True)
class Table1Row:
    p1: int
    q1: int
    q2: int
    hK: Optional[int]
    sym1: Optional[int]
    sym2: Optional[int]
    eps_a: int
    eps_b: int
    eps_denom: int
    unit_symbol: Optional[int]
    euclidean: str

    def cells(self) -> dict[str, str]:
        def fmt(v):
            return "" if v is None else str(v)
        return {c: fmt(getattr(self, c)) for c in COLUMNS}


@dataclass(frozen=True)
class CellDiff:
    row: int
    triple: tuple[int, int, int]
    column: str
    fixture: str
    computed: str

    def __str__(self) -> str:
        return (f"row {self.row} {self.triple}: column {self.column}: "
                f"fixture {self.fixture!r}, computed {self.computed!r}")


# -- computing rows -----------------------------------------------------------

def _symbol(p1: int, q: int) -> Optional[int]:
    return jacobi(p1, q) if q % 2 else None


def unit_symbol_cell(p1: int, q1: int, q2: int) -> Optional[int]:
    """Unit residue symbol at the q with (p1/q) = 1, when exactly one q has it."""
    if p1 % 4 != 1:
        return None
    s1, s2 = _symbol(p1, q1), _symbol(p1, q2)
    if {s1, s2} != {1, -1}:
        return None
    q = q1 if s1 == 1 else q2
    if q % 4 != 1:
        return None
    return unit_residue_symbol(p1, q)


def euclidean_cell(verdict: Verdict) -> str:
    return {Verdict.YES: "Y", Verdict.NO: "N"}.get(verdict, verdict.value)


def compute_row(p1: int, q1: int, q2: int, with_hk: bool = True) -> Table1Row:
    t = BiquadTriple(p1, q1, q2)
    eps = fundamental_unit(p1)
    return Table1Row(
        p1, q1, q2,
        class_number_biquad(t) if with_hk else None,
        _symbol(p1, q1), _symbol(p1, q2),
        eps.a, eps.b, eps.denom,
        unit_symbol_cell(p1, q1, q2),
        euclidean_cell(decide_triple(t).verdict),
    )


# -- fixture ------------------------------------------------------------------

def default_fixture_text() -> str:
    return resources.files("biquadeuclid").joinpath("data/table1.csv").read_text()


def _parse_cell(col: str, raw: str, row: int):
    where = f"row {row} column {col}"
    raw = raw.strip()
    if col == "euclidean":
        if raw not in ("Y", "N"):
            raise FixtureError(f"{where}: expected Y or N, got {raw!r}")
        return raw
    if col == "unit_symbol" and raw == "":
        return None
    try:
        v = int(raw)
    except ValueError:
        raise FixtureError(f"{where}: not an integer: {raw!r}") from None
    if col in ("sym1", "sym2", "unit_symbol") and v not in (-1, 1):
        raise FixtureError(f"{where}: symbol must be -1 or 1, got {v}")
    if col == "eps_denom" and v not in (1, 2):
        raise FixtureError(f"{where}: denominator must be 1 or 2, got {v}")
    return v


def load_fixture(text: str) -> list[Table1Row]:
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise FixtureError("fixture is empty") from None
    if header != COLUMNS:
        raise FixtureError(f"bad header {header}, expected {COLUMNS}")
    rows = []
    for i, cells in enumerate(reader, start=1):
        if not cells:
            continue
        if len(cells) != len(COLUMNS):
            raise FixtureError(f"row {i}: expected {len(COLUMNS)} cells, got {len(cells)}")
        values = [_parse_cell(c, raw, i) for c, raw in zip(COLUMNS, cells)]
        rows.append(Table1Row(*values))
    if len(rows) != len(TABLE1_TRIPLES):
        raise FixtureError(f"expected {len(TABLE1_TRIPLES)} rows, got {len(rows)}")
    return rows


def verify(fixture: Union[str, Path, None] = None, skip_hk: bool = False) -> list[CellDiff]:
    """Recompute every derivable cell and return the cells that disagree.

    Row keys are checked against the built-in triple list, and the derived
    columns are recomputed from those keys, so a changed key is reported on
    its own cell.
    """
    text = default_fixture_text() if fixture is None else Path(fixture).read_text()
    rows = load_fixture(text)
    diffs = []
    for i, (row, key) in enumerate(zip(rows, TABLE1_TRIPLES), start=1):
        have = row.cells()
        for col, ref in zip(KEY_COLUMNS, key):
            if have[col] != str(ref):
                diffs.append(CellDiff(i, key, col, have[col], str(ref)))
        want = compute_row(*key, with_hk=not skip_hk).cells()
        for col in COLUMNS[3:]:
            if skip_hk and col == "hK":
                continue
            if have[col] != want[col]:
                diffs.append(CellDiff(i, key, col, have[col], want[col]))
    return diffs


def render_csv(rows: list[Table1Row]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for r in rows:
        w.writerow([r.cells()[c] for c in COLUMNS])
    return buf.getvalue()
