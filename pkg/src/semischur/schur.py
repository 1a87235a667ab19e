"""Schur rings over finite semigroups: verification, enumeration and analysis.

A partition is a Schur ring when the product of any two of its classes,
taken as a multiset, has constant multiplicity on every class.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations
from typing import Iterable, Sequence

from .partitions import (
    Partition,
    PartitionError,
    bell,
    common_coarsening,
    enumerate_partitions,
    is_refinement,
)
from .ring import set_product
from .table import (
    CayleyTable,
    Morphism,
    automorphism_group,
    identity_of,
    is_group,
    is_subsemigroup,
    subtable,
)


class SchurMode(str, enum.Enum):
    SEMIGROUP = "semigroup"
    MONOID = "monoid"
    GROUP = "group"


class ModeError(ValueError):
    """The table does not meet the requirements of the requested mode."""


@dataclass(frozen=True)
class SchurRingSet:
    table: CayleyTable
    mode: SchurMode
    rings: tuple[Partition, ...]
    complete: bool = True

    def __len__(self) -> int:
        return len(self.rings)

    def __iter__(self):
        return iter(self.rings)

    def __contains__(self, p: Partition) -> bool:
        return p in self.rings


@dataclass(frozen=True)
class Violation:
    """A class pair whose product is not constant on some class."""

    left: tuple[int, ...]
    right: tuple[int, ...]
    target: tuple[int, ...]
    coefficients: tuple[int, ...]
    reason: str = "product not class-constant"

    def __str__(self) -> str:
        if self.reason != "product not class-constant":
            return self.reason
        l = "+".join(map(str, self.left))
        r = "+".join(map(str, self.right))
        tg = "+".join(map(str, self.target))
        return f"({l})({r}) has multiplicities {list(self.coefficients)} on class {tg}"


def _mode(mode: SchurMode | str) -> SchurMode:
    return mode if isinstance(mode, SchurMode) else SchurMode(mode)


def _check_mode(t: CayleyTable, mode: SchurMode) -> int | None:
    if mode is SchurMode.SEMIGROUP:
        return None
    e = identity_of(t)
    if e is None:
        raise ModeError(f"{mode.value} mode needs an identity element")
    if mode is SchurMode.GROUP and not is_group(t):
        raise ModeError("group mode needs a group table")
    return e


def inverses(t: CayleyTable) -> list[int]:
    e = identity_of(t)
    if e is None or not is_group(t):
        raise ModeError("inverses need a group table")
    return [t.rows[x].index(e) for x in range(t.order)]


def schur_violation(t: CayleyTable, p: Partition, mode: SchurMode | str = SchurMode.SEMIGROUP) -> Violation | None:
    """First reason p fails to be a Schur ring in the given mode, or None."""
    mode = _mode(mode)
    if p.n != t.order:
        raise PartitionError(f"partition over {p.n} points, table of order {t.order}")
    e = _check_mode(t, mode)
    classes = p.classes
    for X in classes:
        for Y in classes:
            vec = set_product(t, X, Y)
            for C in classes:
                c0 = vec[C[0]]
                if any(vec[c] != c0 for c in C):
                    return Violation(X, Y, C, tuple(vec[c] for c in C))
    if e is not None and len(p.class_of(e)) != 1:
        return Violation((), (), p.class_of(e), (), f"identity {e} is not a singleton class")
    if mode is SchurMode.GROUP:
        inv = inverses(t)
        for X in classes:
            star = {inv[x] for x in X}
            if not p.is_union_of_classes(star):
                return Violation(X, (), tuple(sorted(star)), (), f"inverse set of {'+'.join(map(str, X))} is not a union of classes")
    return None


def is_schur_ring(t: CayleyTable, p: Partition, mode: SchurMode | str = SchurMode.SEMIGROUP) -> bool:
    return schur_violation(t, p, mode) is None


# ---------------------------------------------------------------- enumeration


def _naive(t: CayleyTable, mode: SchurMode) -> list[Partition]:
    return [p for p in enumerate_partitions(t.order) if is_schur_ring(t, p, mode)]


def _subsets(items: Sequence[int]):
    for k in range(len(items) + 1):
        yield from combinations(items, k)


def _pruned(t: CayleyTable, base: Partition, mode: SchurMode) -> list[Partition]:
    """Class-by-class search constrained to refinements of ``base``.

    Classes are chosen in order of their least element.  After each class is
    fixed, every product involving it is computed; its multiplicities must be
    constant on the finished classes, and the unassigned elements are split
    by their multiplicity profile.  Each later class must stay inside one part
    of that split, so every candidate reaching the end is a Schur ring.
    """
    n = t.order
    rows = t.rows
    if n == 0:
        return [Partition(())]
    e = _check_mode(t, mode)
    start_sig: dict[int, tuple] = {x: (base.rgs[x],) for x in range(n)}
    if e is not None:
        start_sig[e] = ("identity",)
    inv = inverses(t) if mode is SchurMode.GROUP else None

    labels = [-1] * n
    classes: list[list[int]] = []
    found: list[Partition] = []

    def product_vec(xs, ys):
        out = [0] * n
        for x in xs:
            rx = rows[x]
            for y in ys:
                out[rx[y]] += 1
        return out

    def constant_on_finished(vec) -> bool:
        for C in classes:
            c0 = vec[C[0]]
            for c in C:
                if vec[c] != c0:
                    return False
        return True

    def rec(unassigned: list[int], sig: dict[int, tuple]) -> None:
        if not unassigned:
            if inv is not None:
                for C in classes:
                    lab = labels[inv[C[0]]]
                    if any(labels[inv[c]] != lab for c in C):
                        return
                    # the inverse set must be a whole class when it meets one
                    if len(classes[lab]) != len(C):
                        return
            found.append(Partition.from_labels(labels))
            return
        u = unassigned[0]
        key = sig[u]
        block = [x for x in unassigned[1:] if sig[x] == key]
        for extra in _subsets(block):
            C = [u, *extra]
            k = len(classes)
            for c in C:
                labels[c] = k
            classes.append(C)
            vecs = [product_vec(C, C)]
            for X in classes[:-1]:
                vecs.append(product_vec(C, X))
                vecs.append(product_vec(X, C))
            if all(constant_on_finished(v) for v in vecs):
                cset = set(C)
                rest = [x for x in unassigned if x not in cset]
                new_sig = {x: sig[x] + tuple(v[x] for v in vecs) for x in rest}
                rec(rest, new_sig)
            classes.pop()
            for c in C:
                labels[c] = -1

    rec(list(range(n)), start_sig)
    return found


def enumerate_schur_rings(
    t: CayleyTable,
    mode: SchurMode | str = SchurMode.SEMIGROUP,
    strategy: str = "pruned",
    base: Partition | None = None,
    jobs: int = 1,
) -> SchurRingSet:
    """All Schur rings of t in the given mode, sorted by RGS.

    ``naive`` tests every partition; ``pruned`` searches only refinements of
    ``base`` (by default the imposition base, which every Schur ring refines).
    """
    mode = _mode(mode)
    _check_mode(t, mode)
    if base is not None and base.n != t.order:
        raise PartitionError(f"base partition over {base.n} points, table of order {t.order}")
    if strategy == "naive":
        rings = _naive(t, mode)
        if base is not None:
            rings = [p for p in rings if is_refinement(p, base)]
    elif strategy == "pruned":
        if base is None:
            from .structure import imposition_base

            base = imposition_base(t)
        if jobs > 1:
            rings = _pruned_parallel(t, base, mode, jobs)
        else:
            rings = _pruned(t, base, mode)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return SchurRingSet(t, mode, tuple(sorted(rings)), True)


def _pruned_parallel(t: CayleyTable, base: Partition, mode: SchurMode, jobs: int) -> list[Partition]:
    # split on the class that contains element 0
    from concurrent.futures import ProcessPoolExecutor

    n = t.order
    if n == 0:
        return [Partition(())]
    block = [x for x in range(1, n) if base.rgs[x] == base.rgs[0]]
    firsts = [tuple(sorted((0, *extra))) for extra in _subsets(block)]
    tasks = [(t.rows, base.rgs, mode.value, f) for f in firsts]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        parts = list(ex.map(_split_first_class, tasks))
    return [Partition(r) for part in parts for r in part]


def _split_first_class(args):
    rows, base_rgs, mode_value, first = args
    t = CayleyTable(rows)
    n = t.order
    # force the first class by giving its members a private base label
    labels = [("rest", b) for b in base_rgs]
    for x in first:
        labels[x] = ("first",)
    base = Partition.from_labels(labels)
    mode = SchurMode(mode_value)
    return [p.rgs for p in _pruned(t, base, mode) if p.class_of(0) == first]


def omega(t: CayleyTable, mode: SchurMode | str = SchurMode.SEMIGROUP, strategy: str = "pruned") -> int:
    """Number of Schur rings of t in the given mode."""
    return len(enumerate_schur_rings(t, mode, strategy))


def coarsest_schur_ring(t: CayleyTable, rings: Iterable[Partition] | None = None) -> Partition:
    """The Schur ring that every Schur ring refines."""
    rs = list(rings) if rings is not None else list(enumerate_schur_rings(t).rings)
    top = reduce(common_coarsening, rs, Partition.discrete(t.order))
    assert all(is_refinement(p, top) for p in rs)
    return top


def restrict(t: CayleyTable, p: Partition, subset: Iterable[int]) -> Partition:
    """Classes of p inside a union of classes, relabelled over the sorted subset."""
    h = sorted(set(subset))
    if not p.is_union_of_classes(h):
        raise PartitionError(f"{h} is not a union of classes of {p}")
    if not is_subsemigroup(t, h):
        raise PartitionError(f"{h} is not closed under multiplication")
    return Partition.from_labels([p.rgs[x] for x in h])


def restricted_table(t: CayleyTable, subset: Iterable[int]) -> CayleyTable:
    return subtable(t, subset)


# ---------------------------------------------------------------- classification


def orbit_partition(n: int, group: Iterable[Morphism]) -> Partition:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in group:
        for x in range(n):
            a, b = find(x), find(g.map[x])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return Partition.from_labels([find(x) for x in range(n)])


def _closure(gens: Sequence[Morphism], n: int) -> frozenset[tuple[int, ...]]:
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = tuple(g.map[x] for x in a)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return frozenset(seen)


def is_automorphic(t: CayleyTable, p: Partition, aut: Sequence[Morphism] | None = None) -> bool:
    """True iff p is the orbit partition of some group of automorphisms.

    The largest candidate is the group of automorphisms mapping every class to
    itself; p is automorphic exactly when that group's orbits are the classes.
    """
    aut = automorphism_group(t) if aut is None else aut
    labels = p.rgs
    stab = [g for g in aut if all(labels[g.map[x]] == labels[x] for x in range(t.order))]
    return orbit_partition(t.order, stab) == p


def automorphic_schur_rings(t: CayleyTable, max_generators: int = 2) -> SchurRingSet:
    """Orbit partitions of the subgroups of Aut(t) generated by at most two elements."""
    n = t.order
    aut = automorphism_group(t)
    subgroups = set()
    for k in range(max_generators + 1):
        for gens in combinations(aut, k):
            subgroups.add(_closure(gens, n))
    parts = {orbit_partition(n, [Morphism(m) for m in h]) for h in subgroups}
    return SchurRingSet(t, SchurMode.SEMIGROUP, tuple(sorted(parts)), True)


def classify(t: CayleyTable, p: Partition) -> frozenset[str]:
    """Tags from {discrete, indiscrete, trivial, automorphic} that apply to p."""
    tags = set()
    n = t.order
    if p.is_discrete():
        tags.add("discrete")
    if n >= 1 and p.is_indiscrete():
        tags.add("indiscrete")
    cls = p.classes
    if len(cls) == 2 and any(len(c) == 1 for c in cls):
        tags.add("trivial")
    if is_automorphic(t, p):
        tags.add("automorphic")
    return frozenset(tags)


def indiscrete_is_schur(t: CayleyTable) -> bool:
    """G^2 = |G| G, the criterion for the one-class partition."""
    n = t.order
    vec = set_product(t, range(n), range(n))
    return all(c == n for c in vec)


def omega_upper_bound(t: CayleyTable, coarsest: Partition | None = None) -> int:
    top = coarsest if coarsest is not None else coarsest_schur_ring(t)
    out = 1
    for c in top.classes:
        out *= bell(len(c))
    return out
