from __future__ import annotations

import io
from itertools import permutations, product

import numpy as np
import pytest
from hypothesis import given

from semischur import orderly
from semischur.census import (
    CensusError,
    census,
    crosswalk_gap,
    equivalence_classes,
    export_tables,
    forsythe_key,
    generate_all,
    import_tables,
    isomorphism_classes,
    known_rows,
    rank_tables,
    with_family_labels,
    work_units,
)
from semischur.families import construct
from semischur.known import CENSUS_COUNTS, ISOMORPHISM_COUNTS
from semischur.table import AssociativityError, equivalence_canonical_form, opposite, relabel

from strategies import small_semigroups


def _labelled_semigroups(n: int):
    """Every associative table on {0..n-1}, by cell-wise backtracking."""
    cells = [(i, j) for i in range(n) for j in range(n)]
    t = [[None] * n for _ in range(n)]

    def consistent() -> bool:
        for a, b, c in product(range(n), repeat=3):
            ab, bc = t[a][b], t[b][c]
            if ab is None or bc is None:
                continue
            left, right = t[ab][c], t[a][bc]
            if left is not None and right is not None and left != right:
                return False
        return True

    def rec(k: int):
        if k == len(cells):
            yield tuple(x for r in t for x in r)
            return
        i, j = cells[k]
        for v in range(n):
            t[i][j] = v
            if consistent():
                yield from rec(k + 1)
        t[i][j] = None

    yield from rec(0)


def _least_form(flat: tuple[int, ...], n: int, with_opposite: bool) -> tuple[int, ...]:
    rows = [flat[i * n:(i + 1) * n] for i in range(n)]
    variants = [rows]
    if with_opposite:
        variants.append([[rows[j][i] for j in range(n)] for i in range(n)])
    best = None
    for r in variants:
        for p in permutations(range(n)):
            inv = [0] * n
            for a, b in enumerate(p):
                inv[b] = a
            cand = tuple(p[r[inv[a]][inv[b]]] for a in range(n) for b in range(n))
            if best is None or cand < best:
                best = cand
    return best


@pytest.fixture(scope="module")
def brute_force_classes():
    out = {}
    for n in range(1, 5):
        labelled = list(_labelled_semigroups(n))
        iso = {_least_form(f, n, False) for f in labelled}
        eq = {_least_form(f, n, True) for f in iso}
        out[n] = (len(labelled), sorted(iso), sorted(eq))
    return out


@pytest.mark.parametrize("n", range(1, 5))
def test_orderly_generator_matches_brute_force(n, brute_force_classes):
    labelled, iso, eq = brute_force_classes[n]
    assert labelled == {1: 1, 2: 8, 3: 113, 4: 3492}[n]
    assert [tuple(r) for r in isomorphism_classes(n)] == iso
    assert [r.table.flat for r in census(n)] == eq


@pytest.mark.parametrize("n", range(0, 6))
def test_class_counts(n):
    assert len(isomorphism_classes(n)) == ISOMORPHISM_COUNTS[n]
    assert len(census(n)) == CENSUS_COUNTS[n]


@pytest.mark.parametrize("n", range(1, 5))
def test_every_census_table_is_its_own_canonical_form(n):
    for r in census(n):
        assert equivalence_canonical_form(r.table) == r.table


def test_order_five_units_agree_with_single_run(tmp_path):
    units = work_units(5)
    assert len(units) > 1
    sig, inv = orderly.permutation_arrays(5)
    whole = orderly.search(5, sig, inv, np.zeros(0, dtype=np.int64), 25)
    split = isomorphism_classes(5, checkpoint_dir=tmp_path)
    assert sorted(map(tuple, whole)) == [tuple(r) for r in split]
    assert len(list(tmp_path.glob("order5-unit*.npy"))) == len(units)


def test_checkpoints_are_reused(tmp_path):
    first = isomorphism_classes(5, checkpoint_dir=tmp_path)
    seen = []
    again = isomorphism_classes(5, checkpoint_dir=tmp_path, progress=lambda d, t: seen.append(d))
    assert np.array_equal(first, again)
    assert seen == []  # nothing recomputed


def test_parallel_generation_is_deterministic():
    assert np.array_equal(isomorphism_classes(5, jobs=2), isomorphism_classes(5))


def test_order_bounds():
    with pytest.raises(CensusError):
        isomorphism_classes(7)
    with pytest.raises(CensusError):
        isomorphism_classes(-1)


def test_equivalence_pass_keeps_one_per_pair():
    iso = isomorphism_classes(3)
    eq = equivalence_classes(iso, 3)
    assert len(eq) == 18
    keys = {tuple(r) for r in eq}
    assert forsythe_key(construct("LO(3)")) in keys
    assert forsythe_key(construct("RO(3)")) in keys  # same class, same key


@given(small_semigroups(max_n=4))
def test_ranking_is_relabelling_invariant(t):
    key = forsythe_key(t)
    assert forsythe_key(opposite(t)) == key
    assert forsythe_key(relabel(t, list(reversed(range(t.order))))) == key
    assert key in {r.table.flat for r in census(t.order)}


def test_rank_tables_recovers_forsythe_order():
    scrambled = [relabel(r.table, list(reversed(range(4)))) for r in reversed(census(4))]
    ranked = rank_tables(scrambled + [opposite(scrambled[0])])
    assert [r.table.flat for r in ranked] == [r.table.flat for r in census(4)]
    assert [r.forsythe_index for r in ranked] == list(range(126))


def test_export_import_roundtrip():
    records = generate_all(3)
    text = export_tables(records)
    back = import_tables(io.StringIO(text))
    assert [(r.forsythe_index, r.table, r.gap_id, r.family_label) for r in back] == [
        (r.forsythe_index, r.table, r.gap_id, r.family_label) for r in records
    ]


def test_import_canonicalizes_on_request():
    t = relabel(construct("LO(3)"), [2, 0, 1])
    [rec] = import_tables("# name: scrambled\n" + "3\n" + "\n".join(" ".join(map(str, r)) for r in t.rows) + "\n",
                          canonicalize=True)
    assert rec.table.flat == forsythe_key(construct("LO(3)"))
    assert rec.family_label == "scrambled"


def test_import_rejects_nonassociative_with_triple():
    with pytest.raises(AssociativityError, match=r"not associative: \(\d\*\d\)\*\d"):
        import_tables("2\n1 0\n0 0\n")


def test_known_rows_and_crosswalk():
    rows4 = known_rows(4)
    assert len(rows4) == 126 and [k.forsythe for k in rows4] == list(range(126))
    assert sorted(k.gap_id for k in rows4) == list(range(1, 127))
    recs = census(4)
    assert crosswalk_gap(recs[0]) == rows4[0].gap_id
    assert crosswalk_gap(census(3)[0]) is None
    assert known_rows(5) == ()
    labelled = with_family_labels([r for r in recs][:3])
    assert [r.family_label for r in labelled] == [k.family for k in rows4[:3]]


def test_census_records_carry_labels():
    recs = generate_all(4)
    assert recs[124].family_label and recs[125].gap_id == known_rows(4)[125].gap_id
    assert recs[125].table.flat == forsythe_key(construct("Z(4)"))
    assert recs[124].table.flat == forsythe_key(construct("prod(Z(2),Z(2))"))
