"""Command-line front end: ``semischur <subcommand> ...``.

Exit status: 0 success, 1 verification failure, 2 input or parse error.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Sequence, TextIO

from . import census as census_mod
from .families import FamilyError, construct
from .partitions import (
    Partition,
    PartitionError,
    format_partition,
    parse_partition,
    standard_index,
)
from .schur import ModeError, SchurMode, coarsest_schur_ring, enumerate_schur_rings, schur_violation
from .stats import summarize
from .suites import SUITES, run_suite
from .table import CayleyTable, TableError, format_cay, read_cay

log = logging.getLogger("semischur")

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read_tables(path: str) -> list[tuple[CayleyTable, dict]]:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as err:
        raise InputError(f"{path}: {err.strerror}") from None
    try:
        records = read_cay(text)
    except (TableError, ValueError) as err:
        raise InputError(f"{path}: {err}") from None
    if not records:
        raise InputError(f"{path}: no tables")
    return records


def _ring_line(p: Partition) -> str:
    if p.n in (3, 4):
        return f"{standard_index(p)}\t{format_partition(p)}"
    return format_partition(p)


def _title(t: CayleyTable, meta: dict, k: int, many: bool) -> str | None:
    if not many:
        return None
    return f"# {meta.get('name') or t.name or f'record {k}'}"


# ---------------------------------------------------------------- subcommands


def cmd_gen(args, out: TextIO) -> int:
    try:
        t = construct(args.spec)
    except FamilyError as err:
        raise InputError(str(err)) from None
    text = format_cay(t, {"name": args.spec})
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_check(args, out: TextIO) -> int:
    t, _ = _read_tables(args.file)[0]
    try:
        p = parse_partition(args.partition, t.order)
    except PartitionError as err:
        raise InputError(str(err)) from None
    if p.n != t.order:
        raise InputError(f"partition over {p.n} points, table of order {t.order}")
    v = schur_violation(t, p, args.mode)
    if v is None:
        out.write("true\n")
        return EXIT_OK
    out.write(f"false\nwitness: {v}\n")
    return EXIT_FAIL


def cmd_enumerate(args, out: TextIO) -> int:
    records = _read_tables(args.file)
    for k, (t, meta) in enumerate(records):
        head = _title(t, meta, k, len(records) > 1)
        if head:
            out.write(head + "\n")
        rs = enumerate_schur_rings(t, args.mode, strategy=args.strategy, jobs=args.jobs)
        out.write(f"omega={len(rs.rings)}\n")
        for p in rs.rings:
            out.write(_ring_line(p) + "\n")
    return EXIT_OK


def cmd_coarsest(args, out: TextIO) -> int:
    records = _read_tables(args.file)
    for k, (t, meta) in enumerate(records):
        head = _title(t, meta, k, len(records) > 1)
        if head:
            out.write(head + "\n")
        out.write(_ring_line(coarsest_schur_ring(t)) + "\n")
    return EXIT_OK


def _census_records(order: int, jobs: int) -> list[census_mod.CensusRecord]:
    def progress(done: int, total: int) -> None:
        log.info("census order %d: %d/%d work units", order, done, total)

    return census_mod.generate_all(order, jobs=jobs, progress=progress)


def cmd_census(args, out: TextIO) -> int:
    try:
        records = _census_records(args.order, args.jobs)
    except census_mod.CensusError as err:
        raise InputError(str(err)) from None
    if args.format == "cay":
        out.write(census_mod.export_tables(records))
        return EXIT_OK
    header = ["forsythe", "gap", "family", "omega", "rings"]
    rows = []
    for r in records:
        omega = rings = ""
        if args.schur:
            rs = enumerate_schur_rings(r.table).rings
            omega = str(len(rs))
            if r.table.order in (3, 4):
                rings = ",".join(str(i) for i in sorted(standard_index(p) for p in rs))
            else:
                rings = " ".join(format_partition(p) for p in rs)
        width = max(1, len(str(len(records) - 1)))
        rows.append([f"{r.forsythe_index:0{width}d}", "" if r.gap_id is None else str(r.gap_id),
                     r.family_label or "", omega, rings])
    if args.format == "md":
        out.write("| " + " | ".join(header) + " |\n")
        out.write("|" + "---|" * len(header) + "\n")
        for row in rows:
            out.write("| " + " | ".join(c.replace("|", "\\|") for c in row) + " |\n")
    else:
        out.write("\t".join(header) + "\n")
        for row in rows:
            out.write("\t".join(row) + "\n")
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    if args.suite not in SUITES:
        raise InputError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    checks = run_suite(args.suite, args.max_n)
    failed = [c for c in checks if not c.passed]
    for c in checks:
        if c.passed and args.quiet:
            continue
        out.write(c.line() + "\n")
    out.write(f"{args.suite}: {len(checks) - len(failed)}/{len(checks)} passed\n")
    if failed:
        out.write(f"first counterexample: {failed[0].instance} ({failed[0].detail})\n")
        return EXIT_FAIL
    return EXIT_OK


def cmd_stats(args, out: TextIO) -> int:
    try:
        records = _census_records(args.order, args.jobs)
    except census_mod.CensusError as err:
        raise InputError(str(err)) from None
    s = summarize(args.order, (len(enumerate_schur_rings(r.table).rings) for r in records))
    out.write((s.markdown() if args.markdown else s.report()) + "\n")
    return EXIT_OK


def cmd_convert(args, out: TextIO) -> int:
    src = args.input
    if Path(src).is_file() or src == "-":
        for k, (t, meta) in enumerate(_read_tables(src)):
            if k:
                out.write("\n")
            if args.to == "flat":
                out.write(" ".join(map(str, t.flat)) + "\n")
            else:
                out.write(format_cay(t, meta))
        return EXIT_OK
    try:
        p = parse_partition(src, args.n)
    except PartitionError as err:
        raise InputError(str(err)) from None
    if args.to == "rgs":
        out.write(".".join(map(str, p.rgs)) + "\n")
    elif args.to == "index":
        out.write(f"{standard_index(p)}\n")
    else:
        out.write(format_partition(p) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="semischur", description="Schur rings over finite semigroups")
    ap.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = ap.add_subparsers(dest="command", required=True)
    modes = [m.value for m in SchurMode]

    p = sub.add_parser("gen", help="build a family table and emit it as .cay")
    p.add_argument("spec")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", help="test one partition")
    p.add_argument("file")
    p.add_argument("partition", help="class syntax 0|1+2 or RGS 0.1.1")
    p.add_argument("--mode", choices=modes, default="semigroup")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", help="list all Schur rings")
    p.add_argument("file")
    p.add_argument("--mode", choices=modes, default="semigroup")
    p.add_argument("--strategy", choices=["pruned", "naive"], default="pruned")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("coarsest", help="print the coarsest Schur ring")
    p.add_argument("file")
    p.set_defaults(func=cmd_coarsest)

    p = sub.add_parser("census", help="all semigroups of one order up to equivalence")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--schur", action="store_true", help="add Ω and the ring list")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=["tsv", "md", "cay"], default="tsv")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="run a named theorem suite")
    p.add_argument("--suite", required=True, help=", ".join(SUITES))
    p.add_argument("--max-n", type=int, dest="max_n")
    p.add_argument("--quiet", action="store_true", help="print failures only")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", help="Ω distribution and moments for one order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--markdown", action="store_true")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("convert", help="reformat a .cay file or a partition")
    p.add_argument("input", help="a .cay path, '-', or a partition")
    p.add_argument("--to", choices=["cay", "flat", "rgs", "classes", "index"], default="classes")
    p.add_argument("--n", type=int, help="number of points for a partition")
    p.set_defaults(func=cmd_convert)
    return ap


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=err,
                        format="%(message)s")
    try:
        return args.func(args, out)
    except (InputError, ModeError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
