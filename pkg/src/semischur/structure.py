"""Power ideals, indecomposable layers, and the partitions they force."""
from __future__ import annotations

from dataclasses import dataclass

from .partitions import Partition, enumerate_partitions
from .ring import set_product
from .schur import SchurMode, SchurRingSet
from .table import CayleyTable, element_roles, zero_of


@dataclass(frozen=True)
class DecompositionProfile:
    """The chain G ⊇ G^2 ⊇ ..., its layers G^k - G^(k+1), and the stable part."""

    powers: tuple[frozenset[int], ...]
    layers: tuple[frozenset[int], ...]
    ginfty: frozenset[int]
    nilpotency_class: int | None

    def report(self) -> str:
        lines = [f"I_{k + 1}: {_fmt(layer)}" for k, layer in enumerate(self.layers)]
        lines.append(f"G^inf: {_fmt(self.ginfty)}")
        nil = "none" if self.nilpotency_class is None else str(self.nilpotency_class)
        lines.append(f"nilpotency: {nil}")
        return "\n".join(lines)


def _fmt(s) -> str:
    return "{" + ",".join(str(x) for x in sorted(s)) + "}"


def decomposition_profile(t: CayleyTable) -> DecompositionProfile:
    n = t.order
    rows = t.rows
    cur = frozenset(range(n))
    powers = [cur]
    while True:
        nxt = frozenset(rows[x][y] for x in cur for y in range(n))
        if nxt == cur:
            break
        powers.append(nxt)
        cur = nxt
    layers = tuple(powers[k] - powers[k + 1] for k in range(len(powers) - 1))
    ginfty = powers[-1]
    nil = None
    z = zero_of(t)
    if z is not None and ginfty == {z}:
        # least k with G^k = {zero}
        nil = len(powers)
    elif n == 0:
        nil = None
    return DecompositionProfile(tuple(powers), layers, ginfty, nil)


def indecomposables(t: CayleyTable) -> frozenset[int]:
    """Elements that are not a product of two elements."""
    products = {x for r in t.rows for x in r}
    return frozenset(range(t.order)) - products


def imposition_base(t: CayleyTable) -> Partition:
    """One class per nonempty layer plus one class for the stable part."""
    prof = decomposition_profile(t)
    labels = [-1] * t.order
    k = 0
    for layer in prof.layers:
        if layer:
            for x in layer:
                labels[x] = k
            k += 1
    for x in prof.ginfty:
        labels[x] = k
    return Partition.from_labels(labels)


def indivisible_idempotents(t: CayleyTable) -> frozenset[int]:
    """Idempotents e whose only factorization is e*e."""
    n = t.order
    rows = t.rows
    out = set()
    for e in element_roles(t).idempotents:
        if all(rows[x][y] != e or (x == e and y == e) for x in range(n) for y in range(n)):
            out.add(e)
    return frozenset(out)


class NotNilpotentError(ValueError):
    pass


def is_three_nilpotent(t: CayleyTable) -> bool:
    z = zero_of(t)
    if z is None:
        return False
    rows = t.rows
    n = t.order
    return all(rows[rows[x][y]][w] == z for x in range(n) for y in range(n) for w in range(n))


def riisr_enumerate_3nilpotent(t: CayleyTable) -> SchurRingSet:
    """Schur rings of a semigroup with G^3 = {zero}, built layer by layer.

    Pick any partition of the indecomposables; the products of its classes
    split the second layer by multiplicity; every refinement of that split,
    together with the singleton zero, gives a Schur ring, and all arise so.
    """
    if not is_three_nilpotent(t):
        raise NotNilpotentError("table is not 3-nilpotent")
    n = t.order
    z = zero_of(t)
    first = sorted(indecomposables(t))
    second = sorted(set(range(n)) - set(first) - {z})
    rings = []
    for p1 in enumerate_partitions(len(first)):
        cls1 = [[first[i] for i in c] for c in p1.classes]
        profile = {x: () for x in second}
        for X in cls1:
            for Y in cls1:
                vec = set_product(t, X, Y)
                for x in second:
                    profile[x] = profile[x] + (vec[x],)
        keys = sorted(set(profile.values()))
        groups = [[x for x in second if profile[x] == key] for key in keys]
        # every refinement of the multiplicity split: independent partitions of each part
        for choice in _product_of_partitions([len(g) for g in groups]):
            labels = [None] * n
            labels[z] = ("zero",)
            for k, c in enumerate(cls1):
                for x in c:
                    labels[x] = ("first", k)
            for g_idx, (g, part) in enumerate(zip(groups, choice)):
                for i, x in enumerate(g):
                    labels[x] = ("second", g_idx, part.rgs[i])
            rings.append(Partition.from_labels(labels))
    return SchurRingSet(t, SchurMode.SEMIGROUP, tuple(sorted(set(rings))), True)


def _product_of_partitions(sizes):
    if not sizes:
        yield ()
        return
    for p in enumerate_partitions(sizes[0]):
        for rest in _product_of_partitions(sizes[1:]):
            yield (p, *rest)
