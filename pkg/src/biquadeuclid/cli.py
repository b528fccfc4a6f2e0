"""Command-line front end.

Exit codes: 0 decided, 1 verification mismatch, 2 Unknown, 64 usage or invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import table1
from .biquad import kuroda
from .euclid import NoWitness, Verdict, decide, progression_witness
from .genus import BiquadTriple, InvalidTriple, classify
from .scan import FILTERS, ScanConfig, render_scan_csv, run_scan
from .quadfield import quad_field, fundamental_unit

EXIT_OK, EXIT_MISMATCH, EXIT_UNKNOWN, EXIT_USAGE = 0, 1, 2, 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def dumps(record: dict) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


class _Out:
    def __init__(self, args):
        self.json = args.json
        self.quiet = args.quiet

    def emit(self, headline: str, record: dict, details: Sequence[str] = ()) -> None:
        if self.json:
            print(dumps(record))
            return
        print(headline)
        if not self.quiet:
            for line in details:
                print(f"  {line}")

    def err(self, msg: str) -> None:
        print(msg, file=sys.stderr)


def _triple(args) -> BiquadTriple:
    t = BiquadTriple(args.p1, args.q1, args.q2)
    return t.canonical()


def _cert_lines(d: dict) -> list[str]:
    lines = []
    for k, v in d.items():
        if v is None:
            continue
        if isinstance(v, dict):
            v = ", ".join(f"{kk}={vv}" for kk, vv in v.items())
        lines.append(f"{k}: {v}")
    return lines


def cmd_decide(args, out: _Out) -> int:
    p1, q1, q2 = args.p1, args.q1, args.q2
    if q1 > q2:
        q1, q2 = q2, q1
    d = decide(p1, q1, q2)
    out.emit(d.verdict.value, d.to_dict(), _cert_lines(d.certificate.to_dict()))
    return {Verdict.YES: EXIT_OK, Verdict.NO: EXIT_OK,
            Verdict.UNKNOWN: EXIT_UNKNOWN}.get(d.verdict, EXIT_USAGE)


def cmd_genus(args, out: _Out) -> int:
    t = _triple(args)
    g = classify(t)
    rec = {"triple": list(t.as_tuple()), **g.to_dict()}
    head = "elementary" if g.elementary else "not elementary"
    out.emit(head, rec, _cert_lines(g.to_dict()))
    return EXIT_OK


def cmd_quad(args, out: _Out) -> int:
    data = quad_field(args.m)
    eps = fundamental_unit(args.m)
    rec = {"m": data.m, "D": data.D, "h": data.h, "h_narrow": data.h_narrow,
           "eps": eps.render(), "norm": eps.norm}
    out.emit(f"Q(sqrt({data.m}))", rec,
             [f"D: {data.D}", f"h: {data.h}", f"h+: {data.h_narrow}",
              f"eps: {eps.render()}", f"norm: {eps.norm}"])
    return EXIT_OK


def cmd_hk(args, out: _Out) -> int:
    t = _triple(args)
    k = kuroda(t)
    rec = {"triple": list(t.as_tuple()), "hK": k.h_K, "Q": k.Q,
           "h0": k.h0, "h1": k.h1, "h2": k.h2}
    out.emit(str(k.h_K), rec, [f"Q(K): {k.Q}", f"h0, h1, h2: {k.h0}, {k.h1}, {k.h2}"])
    return EXIT_OK


def cmd_witness(args, out: _Out) -> int:
    t = _triple(args)
    try:
        w = progression_witness(t)
    except NoWitness as exc:
        out.err(f"no witness: {exc}")
        return EXIT_UNKNOWN
    rec = {"triple": list(t.as_tuple()), **w.to_dict()}
    out.emit(f"u = {w.u} (mod {w.l})", rec, [f"first prime: {w.checked_prime}"])
    return EXIT_OK


def cmd_table1(args, out: _Out) -> int:
    if not args.verify:
        rows = [table1.compute_row(*k, with_hk=not args.skip_hk) for k in table1.TABLE1_TRIPLES]
        if out.json:
            for r in rows:
                print(dumps(r.cells()))
        else:
            sys.stdout.write(table1.render_csv(rows))
        return EXIT_OK
    try:
        diffs = table1.verify(args.fixture, skip_hk=args.skip_hk)
    except table1.FixtureError as exc:
        out.err(f"fixture error: {exc}")
        return EXIT_USAGE
    except OSError as exc:
        out.err(f"cannot read fixture: {exc}")
        return EXIT_USAGE
    n = len(table1.TABLE1_TRIPLES)
    bad_rows = {d.row for d in diffs}
    summary = f"{n - len(bad_rows)}/{n} rows match"
    if out.json:
        print(dumps({"rows": n, "matching": n - len(bad_rows),
                     "diffs": [d.__dict__ | {"triple": list(d.triple)} for d in diffs]}))
    else:
        for d in diffs:
            print(f"MISMATCH {d}")
        print(summary)
    return EXIT_MISMATCH if diffs else EXIT_OK


def cmd_scan(args, out: _Out) -> int:
    try:
        cfg = ScanConfig(args.p1_max, args.q_max, args.filter, args.with_hk, args.workers)
    except ValueError as exc:
        out.err(str(exc))
        return EXIT_USAGE
    records = run_scan(cfg)
    if out.json:
        text = "".join(dumps(r) + "\n" for r in records)
    else:
        text = render_scan_csv(records)
    try:
        if args.out in (None, "-"):
            sys.stdout.write(text)
        else:
            with open(args.out, "w") as fh:
                fh.write(text)
    except OSError as exc:
        out.err(f"cannot write output: {exc}")
        return EXIT_USAGE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON records")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                        help="print only the headline")

    parser = _Parser(prog="biquadeuclid", parents=[common],
                     description="Euclidean ideal classes of Q(sqrt(p1), sqrt(q1 q2)).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def triple_cmd(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        for flag in ("--p1", "--q1", "--q2"):
            p.add_argument(flag, type=int, required=True)
        p.set_defaults(func=func)
        return p

    triple_cmd("decide", cmd_decide, "Euclidean verdict with certificate")
    triple_cmd("genus", cmd_genus, "is the genus field Q(sqrt p1, sqrt q1, sqrt q2)?")
    triple_cmd("hk", cmd_hk, "class number of K by Kuroda's formula")
    triple_cmd("witness", cmd_witness, "progression u mod l of generator primes")

    p = sub.add_parser("quad", parents=[common], help="invariants of Q(sqrt(m))")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_quad)

    p = sub.add_parser("table1", parents=[common], help="recompute or verify the golden table")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--skip-hk", action="store_true", help="leave the h_K column out")
    p.add_argument("--fixture", default=None, help="fixture CSV (default: built-in)")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("scan", parents=[common], help="evaluate every triple in a box")
    p.add_argument("--p1-max", type=int, required=True)
    p.add_argument("--q-max", type=int, required=True)
    p.add_argument("--filter", choices=FILTERS, default="all")
    p.add_argument("--out", default=None, help="output file (default: stdout)")
    p.add_argument("--with-hk", action="store_true", help="also fill the h_K column")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    args.json = getattr(args, "json", False)
    args.quiet = getattr(args, "quiet", False)
    out = _Out(args)
    try:
        return args.func(args, out)
    except (InvalidTriple, ValueError) as exc:
        out.err(f"invalid input: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
