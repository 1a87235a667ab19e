"""Ω of the bundled groups as group, monoid and semigroup, against the published values.

    python scripts/group_table.py --max-order 8
"""
import argparse
import time

from semischur.groups import group_table
from semischur.known import GROUP_COUNTS, GROUP_ORDERS
from semischur.schur import SchurMode, enumerate_schur_rings

MODES = (SchurMode.GROUP, SchurMode.MONOID, SchurMode.SEMIGROUP)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=8)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    print("| group | order | group | monoid | semigroup | published | match | seconds |")
    print("|---|---:|---:|---:|---:|---|---|---:|")
    for name, want in GROUP_COUNTS.items():
        if GROUP_ORDERS[name] > args.max_order:
            continue
        t0 = time.perf_counter()
        t = group_table(name)
        got = tuple(len(enumerate_schur_rings(t, m, jobs=args.jobs).rings) for m in MODES)
        ok = "yes" if got == want else "NO"
        print(f"| {name} | {t.order} | {got[0]} | {got[1]} | {got[2]} | {want} | {ok} | {time.perf_counter() - t0:.1f} |")


if __name__ == "__main__":
    main()
