"""Census of semigroups up to equivalence, in Forsythe order.

Generation runs the compiled orderly search per work unit (a short table
prefix), keeps the isomorphism-least tables, and then drops every table whose
opposite relabels to something smaller. Units are independent, so they can run
in worker processes and be checkpointed to disk one file per unit.
"""
from __future__ import annotations

import csv
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence, TextIO

import numpy as np

from . import orderly
from .table import CayleyTable, equivalence_canonical_form, read_cay, write_cay

MAX_ORDER = 6
CHECKPOINT_ENV = "SCHUR_CHECKPOINT_DIR"


class CensusError(ValueError):
    pass


@dataclass(frozen=True)
class CensusRecord:
    forsythe_index: int
    table: CayleyTable
    gap_id: int | None = None
    family_label: str | None = None


# ---------------------------------------------------------------- generation


def _split_depth(n: int) -> int:
    """Prefix length of a work unit; small orders run as a single unit."""
    return 0 if n <= 4 else n + 2


def work_units(n: int) -> np.ndarray:
    sig, inv = orderly.permutation_arrays(n)
    depth = _split_depth(n)
    if depth == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return orderly.search(n, sig, inv, np.zeros(0, dtype=np.int64), depth)


def _run_unit(args: tuple[int, np.ndarray]) -> np.ndarray:
    n, prefix = args
    sig, inv = orderly.permutation_arrays(n)
    return orderly.search(n, sig, inv, np.asarray(prefix, dtype=np.int64), n * n)


def _checkpoint_dir(checkpoint_dir: str | os.PathLike | None) -> Path | None:
    d = checkpoint_dir if checkpoint_dir is not None else os.environ.get(CHECKPOINT_ENV)
    if not d:
        return None
    path = Path(d)
    path.mkdir(parents=True, exist_ok=True)
    return path


def isomorphism_classes(
    n: int, jobs: int = 1, checkpoint_dir: str | os.PathLike | None = None, progress=None
) -> np.ndarray:
    """Flat isomorphism-least tables of order n, sorted lexicographically."""
    if n < 0 or n > MAX_ORDER:
        raise CensusError(f"order {n} outside 0..{MAX_ORDER}")
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    units = work_units(n)
    ckpt = _checkpoint_dir(checkpoint_dir)
    results: list[np.ndarray | None] = [None] * len(units)
    todo = []
    for k in range(len(units)):
        f = ckpt / f"order{n}-unit{k:05d}.npy" if ckpt else None
        if f is not None and f.exists():
            results[k] = np.load(f)
        else:
            todo.append(k)

    def finish(k: int, arr: np.ndarray) -> None:
        results[k] = arr
        if ckpt:
            tmp = ckpt / f"order{n}-unit{k:05d}.tmp.npy"
            np.save(tmp, arr)
            tmp.replace(ckpt / f"order{n}-unit{k:05d}.npy")
        if progress:
            progress(sum(r is not None for r in results), len(units))

    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for k, arr in zip(todo, pool.map(_run_unit, [(n, units[k]) for k in todo])):
                finish(k, arr)
    else:
        for k in todo:
            finish(k, _run_unit((n, units[k])))
    flat = np.concatenate([r.reshape(-1, n * n) for r in results])
    order = np.lexsort(flat.T[::-1])
    return flat[order]


def equivalence_classes(iso: np.ndarray, n: int) -> np.ndarray:
    """Keep a table iff it is no larger than the least relabelling of its opposite."""
    if n == 0:
        return iso
    sig, inv = orderly.permutation_arrays(n)
    keep = []
    for row in iso:
        op = orderly.least_relabelling(orderly.opposite_flat(row, n), n, sig, inv)
        if tuple(row) <= tuple(op):
            keep.append(row)
    return np.array(keep, dtype=np.int64).reshape(-1, n * n)


def _to_table(flat: Sequence[int], n: int) -> CayleyTable:
    flat = [int(x) for x in flat]
    return CayleyTable(tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)))


def generate_all(
    n: int, jobs: int = 1, checkpoint_dir: str | os.PathLike | None = None, progress=None
) -> list[CensusRecord]:
    """One lexicographically least table per equivalence class, in Forsythe order."""
    flat = equivalence_classes(isomorphism_classes(n, jobs, checkpoint_dir, progress), n)
    known = known_rows(n)
    out = []
    for idx, row in enumerate(flat):
        gap = family = None
        if idx < len(known):
            gap, family = known[idx].gap_id, known[idx].family
        out.append(CensusRecord(idx, _to_table(row, n), gap, family))
    return out


@lru_cache(maxsize=None)
def census(n: int) -> tuple[CensusRecord, ...]:
    """Cached single-process census (checkpoint directory still honoured)."""
    return tuple(generate_all(n))


# ---------------------------------------------------------------- embedded row data


@dataclass(frozen=True)
class KnownRow:
    """A listed row for orders 2 to 4: family label, family spec, Ω and ring indices."""

    forsythe: int
    gap_id: int | None
    family: str
    spec: str
    omega: int
    rings: tuple[int, ...]


@lru_cache(maxsize=None)
def known_rows(n: int) -> tuple[KnownRow, ...]:
    """Rows of the published order-n listing (orders 2, 3, 4); empty otherwise."""
    name = f"data/order{n}.tsv"
    res = resources.files("semischur").joinpath(name)
    if not res.is_file():
        return ()
    rows = []
    for rec in csv.DictReader(res.read_text().splitlines(), delimiter="\t"):
        rings = tuple(int(x) for x in rec["rings"].split(",")) if rec["rings"] else ()
        rows.append(
            KnownRow(
                int(rec["forsythe"]),
                int(rec["gap"]) if rec["gap"] else None,
                rec["family"],
                rec["spec"],
                int(rec["omega"]),
                rings,
            )
        )
    return tuple(rows)


def crosswalk_gap(record: CensusRecord) -> int | None:
    """GAP smallsemi id of an order-4 record; None elsewhere."""
    if record.table.order != 4:
        return None
    rows = known_rows(4)
    if 0 <= record.forsythe_index < len(rows):
        return rows[record.forsythe_index].gap_id
    return None


# ---------------------------------------------------------------- ranking, import, export


def forsythe_key(t: CayleyTable) -> tuple[int, ...]:
    return equivalence_canonical_form(t).flat


def rank_tables(tables: Iterable[CayleyTable]) -> list[CensusRecord]:
    """Canonicalize, drop equivalent duplicates and number in lexicographic order."""
    canon = {}
    for t in tables:
        c = equivalence_canonical_form(t)
        canon.setdefault(c.flat, c.named(t.name))
    out = []
    for idx, key in enumerate(sorted(canon)):
        out.append(CensusRecord(idx, canon[key], family_label=canon[key].name))
    return out


def import_tables(stream: TextIO | str, canonicalize: bool = False) -> list[CensusRecord]:
    """Read a ``.cay`` stream; optionally replace each table by its equivalence-least form.

    Forsythe and GAP indices are taken from ``# forsythe:`` / ``# gap:``
    metadata when present, otherwise from record position.
    """
    out = []
    for idx, (t, meta) in enumerate(read_cay(stream)):
        if canonicalize:
            t = equivalence_canonical_form(t)
        fi = int(meta["forsythe"]) if "forsythe" in meta else idx
        gap = int(meta["gap"]) if "gap" in meta else None
        out.append(CensusRecord(fi, t, gap, meta.get("name")))
    return out


def export_tables(records: Iterable[CensusRecord], stream: TextIO | None = None) -> str:
    items = []
    for r in records:
        meta = {"name": r.family_label, "forsythe": r.forsythe_index, "gap": r.gap_id}
        items.append((r.table, meta))
    text = write_cay(items)
    if stream is not None:
        stream.write(text)
    return text


def with_family_labels(records: Sequence[CensusRecord]) -> list[CensusRecord]:
    """Attach known family labels and GAP ids by Forsythe index."""
    out = []
    for r in records:
        known = known_rows(r.table.order)
        if 0 <= r.forsythe_index < len(known):
            k = known[r.forsythe_index]
            r = replace(r, gap_id=k.gap_id, family_label=k.family)
        out.append(r)
    return out
