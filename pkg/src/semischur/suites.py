"""Named verification suites: closed-form Ω counts and structural invariants.

Each suite yields one ``Check`` per instance so the CLI and the acceptance
tests report the same lines.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator

from . import census as census_mod
from .families import adjoin_identity, adjoin_zero, construct, stack
from .groups import group_table
from .known import CENSUS_COUNTS, GROUP_COUNTS, GROUP_ORDERS, NAMED_OMEGA
from .partitions import bell, common_coarsening, is_refinement
from .schur import SchurMode, enumerate_schur_rings
from .structure import imposition_base, is_three_nilpotent, riisr_enumerate_3nilpotent
from .table import CayleyTable, is_subsemigroup, opposite, zero_of


@dataclass(frozen=True)
class Check:
    instance: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return f"{status}\t{self.instance}" + (f"\t{self.detail}" if self.detail else "")


def _omega(t: CayleyTable, mode: SchurMode = SchurMode.SEMIGROUP) -> int:
    return len(enumerate_schur_rings(t, mode).rings)


def _expect(instance: str, got, want) -> Check:
    return Check(instance, got == want, f"got {got}, expected {want}")


def _census_tables(max_n: int, min_n: int = 1):
    for n in range(min_n, max_n + 1):
        for r in census_mod.census(n):
            yield f"order{n}#{r.forsythe_index:03d}", r.table


# ---------------------------------------------------------------- closed forms


def nullschur(max_n: int = 7) -> Iterator[Check]:
    """Ω(O_n) = bell(n-1), and the rings are exactly the partitions isolating 0."""
    for n in range(1, max_n + 1):
        rings = enumerate_schur_rings(construct(f"O({n})")).rings
        ok = len(rings) == bell(n - 1) and all(len(p.class_of(0)) == 1 for p in rings)
        yield Check(f"O({n})", ok, f"omega {len(rings)}, expected {bell(n - 1)}")


def leftnull(max_n: int = 6) -> Iterator[Check]:
    """Ω(LO_n) = bell(n); among census tables of order n only LO_n attains it (n != 2)."""
    for n in range(1, max_n + 1):
        yield _expect(f"LO({n})", _omega(construct(f"LO({n})")), bell(n))
    for n in range(2, min(max_n, census_mod.MAX_ORDER) + 1):
        hits = [r for r in census_mod.census(n) if _omega(r.table) == bell(n)]
        want = {census_mod.forsythe_key(construct(f"LO({n})"))}
        if n == 2:
            want.add(census_mod.forsythe_key(construct("Z(2)")))
        got = {r.table.flat for r in hits}
        yield Check(f"uniqueness order {n}", got == want, f"{len(got)} tables attain bell({n})")


def star_suite(max_n: int = 5) -> Iterator[Check]:
    for n in range(1, max_n + 1):
        yield _expect(f"K1({n})", _omega(construct(f"K1({n})")), bell(n))


def oro(max_n: int = 6) -> Iterator[Check]:
    for total in range(2, max_n + 1):
        for m in range(1, total):
            yield _expect(f"ORO({m},{total - m})", _omega(construct(f"ORO({m},{total - m})")), bell(total - 1))


def oo(max_n: int = 7) -> Iterator[Check]:
    for total in range(2, max_n + 1):
        for n in range(1, total):
            m = total - n
            yield _expect(f"OO({n},{m})", _omega(construct(f"OO({n},{m})")), bell(n - 1) * bell(m - 1))


def orop(max_n: int = 5) -> Iterator[Check]:
    for n in range(2, max_n + 1):
        yield _expect(f"OROP({n})", _omega(construct(f"OROP({n})")), 2 * bell(n - 2))


def monogenic(max_n: int = 7) -> Iterator[Check]:
    """Ω(Z_{m,n}) = 1 for index m >= 2 and order m + n - 1 <= max_n."""
    for m in range(2, max_n + 1):
        for n in range(1, max_n + 2 - m):
            yield _expect(f"Z({m},{n})", _omega(construct(f"Z({m},{n})")), 1)


def chain_suite(max_n: int = 7) -> Iterator[Check]:
    for n in range(1, max_n + 1):
        yield _expect(f"CH({n})", _omega(construct(f"CH({n})")), 1)


SPOT_VALUES = {
    "LOZ(3)": 12,
    "OZ(3,2)": 7,
    "OZ(2,3)": 4,
    "OLO(3,2)": 7,
    "ORO(3,2)": 15,
    "OLO(2,3)": 6,
    "O(4,2,123)": 3,
    "LOO(2,2,2,6)": 4,
    "LORO(2,1,2,1)": 3,
    "OLO(2,2,1)": 4,
}


def spots(max_n: int = 7) -> Iterator[Check]:
    for spec, want in {**SPOT_VALUES, **NAMED_OMEGA}.items():
        t = construct(spec)
        if t.order <= max_n:
            yield _expect(spec, _omega(t), want)


def stack_suite(max_n: int = 6, samples: int = 40, seed: int = 0) -> Iterator[Check]:
    """Ω(G s H) = Ω(G) Ω(H) on random census pairs with |G| + |H| <= max_n."""
    rng = random.Random(seed)
    pool = [r.table for n in range(1, max_n) for r in census_mod.census(n)]
    done = 0
    while done < samples:
        g, h = rng.choice(pool), rng.choice(pool)
        if g.order + h.order > max_n:
            continue
        done += 1
        got = _omega(stack(g, h))
        want = _omega(g) * _omega(h)
        yield Check(f"stack({_tag(g)},{_tag(h)})", got == want, f"got {got}, expected {want}")


def _tag(t: CayleyTable) -> str:
    return "[" + ";".join(",".join(map(str, r)) for r in t.rows) + "]"


def extensions(max_n: int = 5) -> Iterator[Check]:
    """Ω(G^e) = Ω(G^θ) = Ω(G) for every census table of order <= max_n."""
    for name, t in _census_tables(max_n):
        w = _omega(t)
        a = _omega(adjoin_identity(t))
        b = _omega(adjoin_zero(t))
        yield Check(name, a == w == b, f"G {w}, G^e {a}, G^0 {b}")


# ---------------------------------------------------------------- structural invariants


def imposition(max_n: int = 5) -> Iterator[Check]:
    """Every Schur ring refines the imposition base (layers and stable part)."""
    for name, t in _census_tables(max_n):
        base = imposition_base(t)
        rings = enumerate_schur_rings(t, strategy="naive").rings
        bad = [p for p in rings if not is_refinement(p, base)]
        yield Check(name, not bad, f"{len(bad)} rings cross the base")


def pinning(max_n: int = 5) -> Iterator[Check]:
    """Rings isolate the zero of a zero-semigroup and the identity of G^e."""
    for name, t in _census_tables(max_n):
        z = zero_of(t)
        rings = enumerate_schur_rings(t).rings
        ok = z is None or all(len(p.class_of(z)) == 1 for p in rings)
        if t.order < max_n:
            te = adjoin_identity(t)
            e = te.order - 1
            ok = ok and all(len(p.class_of(e)) == 1 for p in enumerate_schur_rings(te).rings)
        yield Check(name, ok)


def meet_closure(max_n: int = 5) -> Iterator[Check]:
    for name, t in _census_tables(max_n):
        rings = set(enumerate_schur_rings(t).rings)
        bad = [(p, q) for p, q in combinations(rings, 2) if common_coarsening(p, q) not in rings]
        yield Check(name, not bad, f"{len(bad)} pairs not closed")


def singletons(max_n: int = 5) -> Iterator[Check]:
    for name, t in _census_tables(max_n):
        bad = []
        for p in enumerate_schur_rings(t).rings:
            s = p.singletons()
            if s and not is_subsemigroup(t, s):
                bad.append(p)
        yield Check(name, not bad, f"{len(bad)} rings with non-closed singletons")


def opposite_invariance(max_n: int = 5) -> Iterator[Check]:
    for name, t in _census_tables(max_n):
        a = enumerate_schur_rings(t).rings
        b = enumerate_schur_rings(opposite(t)).rings
        yield Check(name, a == b)


def pruned_vs_naive(max_n: int = 5) -> Iterator[Check]:
    for name, t in _census_tables(max_n, min_n=0):
        a = enumerate_schur_rings(t, strategy="pruned").rings
        b = enumerate_schur_rings(t, strategy="naive").rings
        yield Check(name, a == b, f"pruned {len(a)}, naive {len(b)}")


def riisr(max_n: int = 5) -> Iterator[Check]:
    for name, t in _census_tables(max_n):
        if not is_three_nilpotent(t):
            continue
        a = riisr_enumerate_3nilpotent(t).rings
        b = enumerate_schur_rings(t, strategy="naive").rings
        yield Check(name, a == b, f"riisr {len(a)}, generic {len(b)}")


def census_counts(max_n: int = 5) -> Iterator[Check]:
    for n in range(0, min(max_n, census_mod.MAX_ORDER) + 1):
        yield _expect(f"order {n}", len(census_mod.census(n)), CENSUS_COUNTS[n])


def table_rows(max_n: int = 4) -> Iterator[Check]:
    """Ω and ring-index sets of every listed row of orders 2 to 4."""
    from .partitions import standard_index

    for n in range(2, min(max_n, 4) + 1):
        recs = census_mod.census(n)
        for r, k in zip(recs, census_mod.known_rows(n)):
            rings = enumerate_schur_rings(r.table).rings
            got_idx = tuple(sorted(standard_index(p) for p in rings)) if n >= 3 else ()
            want_idx = k.rings if n >= 3 else ()
            ok = len(rings) == k.omega and got_idx == want_idx
            detail = f"omega {len(rings)} vs {k.omega}"
            if n >= 3:
                detail += f", rings {list(got_idx)} vs {list(want_idx)}"
            yield Check(f"order{n}#{r.forsythe_index:03d} {k.spec}", ok, detail)


def family_labels(max_n: int = 4) -> Iterator[Check]:
    """Each listed family spec builds a table equivalent to its own row."""
    for n in range(2, min(max_n, 4) + 1):
        index = {r.table.flat: r.forsythe_index for r in census_mod.census(n)}
        for k in census_mod.known_rows(n):
            t = construct(k.spec)
            got = index.get(census_mod.forsythe_key(t)) if t.order == n else None
            yield _expect(f"order{n}#{k.forsythe:03d} {k.spec}", got, k.forsythe)


def table1(max_n: int = 8) -> Iterator[Check]:
    """Group / monoid / semigroup Ω for the listed groups of order <= max_n."""
    for name, want in GROUP_COUNTS.items():
        if GROUP_ORDERS[name] > max_n:
            continue
        t = group_table(name)
        got = tuple(_omega(t, m) for m in (SchurMode.GROUP, SchurMode.MONOID, SchurMode.SEMIGROUP))
        yield _expect(name, got, want)


SUITES: dict[str, Callable[..., Iterator[Check]]] = {
    "nullschur": nullschur,
    "leftnull": leftnull,
    "star": star_suite,
    "oro": oro,
    "oo": oo,
    "orop": orop,
    "monogenic": monogenic,
    "chain": chain_suite,
    "spots": spots,
    "stack": stack_suite,
    "extensions": extensions,
    "imposition": imposition,
    "pinning": pinning,
    "meet": meet_closure,
    "singletons": singletons,
    "opposite": opposite_invariance,
    "pruned": pruned_vs_naive,
    "riisr": riisr,
    "census": census_counts,
    "rows": table_rows,
    "labels": family_labels,
    "table1": table1,
}


def run_suite(name: str, max_n: int | None = None) -> list[Check]:
    fn = SUITES[name]
    return list(fn() if max_n is None else fn(max_n))
