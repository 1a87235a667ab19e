"""Generate the census of one order with Ω, checkpointing each work unit.

    python scripts/run_census.py 6 --jobs 8 --checkpoint-dir ckpt --out order6
writes order6.tsv (forsythe, gap, family, omega, rings) and order6.cay.
Rerunning with the same checkpoint directory skips finished units.
"""
import argparse
import time
from dataclasses import dataclass
from pathlib import Path

from semischur.census import MAX_ORDER, export_tables, generate_all
from semischur.partitions import format_partition, standard_index
from semischur.schur import enumerate_schur_rings


@dataclass
class Config:
    order: int
    jobs: int = 1
    checkpoint_dir: str | None = None
    out: str | None = None


def parse_args() -> Config:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("order", type=int, choices=range(0, MAX_ORDER + 1))
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--checkpoint-dir")
    ap.add_argument("--out", help="output stem, default order<N>")
    return Config(**vars(ap.parse_args()))


def main(cfg: Config) -> None:
    stem = Path(cfg.out or f"order{cfg.order}")
    t0 = time.perf_counter()

    def progress(done, total):
        print(f"\r{done}/{total} units  {time.perf_counter() - t0:6.1f}s", end="", flush=True)

    records = generate_all(cfg.order, jobs=cfg.jobs, checkpoint_dir=cfg.checkpoint_dir, progress=progress)
    print(f"\n{len(records)} semigroups in {time.perf_counter() - t0:.1f}s")
    lines = ["forsythe\tgap\tfamily\tomega\trings"]
    for r in records:
        rings = enumerate_schur_rings(r.table).rings
        if cfg.order in (3, 4):
            listed = ",".join(str(i) for i in sorted(standard_index(p) for p in rings))
        else:
            listed = " ".join(format_partition(p) for p in rings)
        gap = "" if r.gap_id is None else str(r.gap_id)
        lines.append(f"{r.forsythe_index}\t{gap}\t{r.family_label or ''}\t{len(rings)}\t{listed}")
    stem.with_suffix(".tsv").write_text("\n".join(lines) + "\n")
    stem.with_suffix(".cay").write_text(export_tables(records))
    print(f"wrote {stem}.tsv and {stem}.cay ({time.perf_counter() - t0:.1f}s total)")


if __name__ == "__main__":
    main(parse_args())
