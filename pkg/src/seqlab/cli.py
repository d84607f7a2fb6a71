"""Command-line interface: ``seqlab {seq,verify,enumerate,bfile}``.

Exit codes: 0 success or all claims pass, 1 a claim failed, 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional

from . import bfile, colorings, puzzles, words
from .claims import CLAIMS, run_claim
from .errors import DomainError, RangeError
from .report import MAX_COUNTEREXAMPLES, SCHEMA, Report
from .seq_core import METHODS, SeqId
from .sequences import as_seq_id, terms

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# object -> largest accepted size
ENUM_CAPS = {
    "catalan-words": 24,
    "partitions": 20,
    "bubbles": 20,
    "gray": 20,
    "ring-path": 20,
    "run-starts": 32,
}


class UsageError(Exception):
    pass


def _parse_range(text: str):
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected FROM..TO, got {text!r}")
    try:
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected FROM..TO, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seqlab", description="Compute and verify facts about OEIS A000975."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="print terms as 'index value' lines")
    p.add_argument("seq", help="one of: " + ", ".join(s.value for s in SeqId))
    p.add_argument("range", nargs="?", type=_parse_range, help="FROM..TO")
    p.add_argument("--from", dest="first", type=int)
    p.add_argument("--to", dest="last", type=int)
    p.add_argument("--method", help=f"A: {', '.join(METHODS)}; B: rec, scan")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", help="check a claim and print a JSON report")
    p.add_argument("claim", help="claim id or 'all': " + ", ".join(CLAIMS))
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-bits", type=int)
    p.add_argument("--limit", type=int, default=MAX_COUNTEREXAMPLES,
                   help="counterexamples kept per claim")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for 'all'")

    p = sub.add_parser("enumerate", help="list combinatorial objects")
    p.add_argument("object", choices=sorted(ENUM_CAPS))
    p.add_argument("size", nargs="?", type=int)
    p.add_argument("--max-bits", type=int, help="bound for run-starts")
    p.add_argument("--unbased", action="store_true", help="bubbles with an uncolored base")
    p.add_argument("--limit", type=int, help="print at most this many items")
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")

    p = sub.add_parser("bfile", help="export or check OEIS b-files")
    bsub = p.add_subparsers(dest="direction", required=True)
    e = bsub.add_parser("export")
    e.add_argument("seq")
    e.add_argument("--offset", type=int)
    e.add_argument("--count", type=int, required=True)
    e.add_argument("--method")
    e.add_argument("-o", "--output", help="file to write (default stdout)")
    i = bsub.add_parser("import")
    i.add_argument("path")
    i.add_argument("--seq", required=True)
    i.add_argument("--offset", type=int)
    i.add_argument("--method")
    i.add_argument("--limit", type=int, default=MAX_COUNTEREXAMPLES)
    return parser


def cmd_seq(args, out) -> int:
    sid = as_seq_id(args.seq)
    first, last = args.range if args.range else (args.first, args.last)
    if args.first is not None:
        first = args.first
    if args.last is not None:
        last = args.last
    if first is None or last is None:
        raise UsageError("give a range FROM..TO or --from/--to")
    if last < first:
        raise UsageError(f"inverted range {first}..{last}")
    rows = list(terms(sid, first, last, args.method))
    if args.format == "json":
        out.write(json.dumps({"seq": sid.value, "terms": [[i, str(v)] for i, v in rows]}) + "\n")
    else:
        out.write(bfile.format_lines(rows))
    return EXIT_OK


def _bounds(args):
    return {"max_n": args.max_n, "max_bits": args.max_bits, "cap": args.limit}


def _run_one(claim_id: str, bounds: dict) -> dict:
    return run_claim(claim_id, **bounds).to_dict()


def _run_in_batch(claim_id: str, bounds: dict) -> dict:
    # a bound too small for one claim should not sink the whole batch
    try:
        return _run_one(claim_id, bounds)
    except RangeError as exc:
        rep = Report(claim_id, "n/a")
        rep.skip(str(exc))
        return rep.to_dict()


def cmd_verify(args, out) -> int:
    if args.limit < 1:
        raise UsageError("--limit must be >= 1")
    bounds = _bounds(args)
    if args.claim == "all":
        ids = list(CLAIMS)
        if args.jobs > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                reports = list(pool.map(_run_in_batch, ids, [bounds] * len(ids)))
        else:
            reports = [_run_in_batch(c, bounds) for c in ids]
        ok = all(r["status"] != "fail" for r in reports)
        doc = {"schema": SCHEMA, "status": "pass" if ok else "fail", "reports": reports}
        out.write(json.dumps(doc, indent=2) + "\n")
        return EXIT_OK if ok else EXIT_FAIL
    if args.claim not in CLAIMS:
        raise UsageError(f"unknown claim {args.claim!r}; known: all, {', '.join(CLAIMS)}")
    rep = _run_one(args.claim, bounds)
    out.write(json.dumps(rep, indent=2) + "\n")
    return EXIT_OK if rep["status"] != "fail" else EXIT_FAIL


def _enumerate_items(args) -> List[str]:
    obj, size = args.object, args.size
    if obj == "run-starts":
        size = args.max_bits if args.max_bits is not None else size
    if size is None:
        raise UsageError(f"{obj} needs a size")
    if size > ENUM_CAPS[obj]:
        raise UsageError(f"{obj} size {size} exceeds cap {ENUM_CAPS[obj]}")
    if obj == "catalan-words":
        return [w.bits for w in words.enum_catalan(size)]
    if obj == "partitions":
        return [p.seats for p in colorings.enum_partitions(size)]
    if obj == "bubbles":
        return [str(b) for b in colorings.enum_bubbles(size, based=not args.unbased)]
    if obj == "gray":
        return [w.bits for w in puzzles.gray_code(size)]
    if obj == "ring-path":
        return [w.bits for w in puzzles.ring_path(size)]
    return [str(n) for n in words.run_start_indices(size)]


def cmd_enumerate(args, out) -> int:
    if args.format == "dot":
        if args.object != "ring-path":
            raise UsageError("dot output is only available for ring-path")
        if args.size is None or not 1 <= args.size <= 6:
            raise UsageError("dot output needs 1 <= size <= 6")
        out.write(puzzles.to_dot(args.size))
        return EXIT_OK
    items = _enumerate_items(args)
    if args.limit is not None:
        items = items[: args.limit]
    if args.format == "json":
        out.write(json.dumps({"object": args.object, "size": args.size, "items": items}) + "\n")
    else:
        out.write("".join(f"{x}\n" for x in items))
    return EXIT_OK


def cmd_bfile(args, out) -> int:
    if args.direction == "export":
        sid = as_seq_id(args.seq)
        offset = sid.offset if args.offset is None else args.offset
        bf = bfile.export(sid, offset, args.count, args.method)
        if args.output:
            with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
                bfile.write(bf.entries, fh)
        else:
            bfile.write(bf.entries, out)
        return EXIT_OK
    try:
        bf = bfile.read(args.path, args.offset)
    except bfile.BFileError as exc:
        raise UsageError(f"{args.path}: {exc}") from None
    except OSError as exc:
        raise UsageError(str(exc)) from None
    rep = bfile.check(bf, args.seq, args.method, cap=args.limit)
    out.write(rep.to_json(indent=2) + "\n")
    return EXIT_OK if rep.passed else EXIT_FAIL


COMMANDS = {"seq": cmd_seq, "verify": cmd_verify, "enumerate": cmd_enumerate, "bfile": cmd_bfile}


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, DomainError, RangeError, ValueError) as exc:
        print(f"seqlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
