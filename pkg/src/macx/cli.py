"""Command line entry point ``macx``.

    macx double --in k.json [--out l.json]
    macx betti --model {rzk,zk} --in k.json [--full-table]
    macx verify --in k.json [--report out.json] [--figures DIR]
    macx corpus --max-m 4 [--random 50 --m 5 6 --density 0.3 --seed 42]
                [--report corpus.json] [--figures DIR] [--jobs N] [--check]

``verify`` and ``corpus`` exit 0 iff every flag of every report is true.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import __version__
from .complex_core import ComplexError
from .cubical import DEFAULT_CELL_BUDGET, CellBudgetExceeded, betti_rzk
from .doubling import double
from .hochster import hochster_table
from .jsonio import load_complex, write_json
from .trc import (
    check_trc,
    corpus_document,
    exhaustive_corpus,
    random_corpus,
    run_corpus,
)

log = logging.getLogger("macx")


def cmd_double(args) -> int:
    k = load_complex(args.input)
    write_json(double(k).to_json_obj(), args.out)
    return 0


def cmd_betti(args) -> int:
    k = load_complex(args.input)
    if args.model == "rzk":
        table = betti_rzk(k, args.budget)
        out = {"model": "rzk", "betti": table.to_json(), "hrk": table.hrk}
    else:
        hoch = hochster_table(k)
        out = {"model": "zk", "betti": hoch.graded.to_json(), "hrk": hoch.hrk}
        if args.full_table:
            out["table"] = hoch.to_json()
    write_json(out, args.out)
    return 0


def cmd_verify(args) -> int:
    k = load_complex(args.input)
    report = check_trc(k, complex_id=Path(args.input).stem, budget=args.budget, check=args.check)
    doc = corpus_document([report], {"input": str(args.input)})
    write_json(doc, args.report)
    if args.figures:
        from .plotting import render_report

        for path in render_report(report, args.figures):
            log.info("wrote %s", path)
    return 0 if report.ok else 1


def cmd_corpus(args) -> int:
    items = exhaustive_corpus(args.max_m) if args.max_m else []
    if args.random:
        for m in args.m:
            items += random_corpus(args.random, m, args.density, args.seed)
    log.info("checking %d complexes", len(items))
    reports = run_corpus(items, budget=args.budget, check=args.check, jobs=args.jobs)
    params = {
        "max_m": args.max_m,
        "random": args.random,
        "m": args.m if args.random else [],
        "density": args.density,
        "seed": args.seed,
        "check_boundaries": args.check,
    }
    doc = corpus_document(reports, params)
    write_json(doc, args.report)
    if args.figures:
        from .plotting import render_corpus

        for path in render_corpus(reports, args.figures):
            log.info("wrote %s", path)
    for rid in doc["summary"]["failed"]:
        log.error("flags false for %s", rid)
    return 0 if doc["summary"]["all_ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="macx", description=__doc__.split("\n")[0])
    ap.add_argument("--version", action="version", version=f"macx {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("double", parents=[common], help="write the double L(K)")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", default=None, help="output path (stdout if omitted)")
    p.set_defaults(func=cmd_double)

    p = sub.add_parser("betti", parents=[common], help="rational Betti numbers of a (real) moment-angle complex")
    p.add_argument("--model", choices=["rzk", "zk"], required=True)
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--full-table", action="store_true",
                   help="with --model zk, list every (omega, p) contribution")
    p.add_argument("--budget", type=int, default=DEFAULT_CELL_BUDGET)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("verify", parents=[common], help="run every check on one complex")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--report", default=None)
    p.add_argument("--figures", default=None, help="directory for PNG figures and CSV")
    p.add_argument("--budget", type=int, default=DEFAULT_CELL_BUDGET)
    p.add_argument("--check", action="store_true", help="also verify that boundaries square to zero")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("corpus", parents=[common], help="run every check over a corpus of complexes")
    p.add_argument("--max-m", type=int, default=4, help="exhaustive enumeration up to this m (0 to skip)")
    p.add_argument("--random", type=int, default=0, help="random complexes per value of --m")
    p.add_argument("--m", type=int, nargs="+", default=[5])
    p.add_argument("--density", type=float, default=0.3)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--report", default=None)
    p.add_argument("--figures", default=None, help="directory for PNG figures and CSV")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=DEFAULT_CELL_BUDGET)
    p.add_argument("--check", action="store_true", help="also verify that boundaries square to zero")
    p.set_defaults(func=cmd_corpus)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(message)s")
    log.setLevel(logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (ComplexError, CellBudgetExceeded, OSError, ValueError) as exc:
        print(f"macx: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
