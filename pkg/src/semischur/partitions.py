"""Set partitions of {0..n-1} stored as restricted-growth strings (RGS)."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


class PartitionError(ValueError):
    pass


def _normalize(labels: Sequence[int]) -> tuple[int, ...]:
    """Relabel arbitrary class labels into restricted-growth form."""
    seen: dict[int, int] = {}
    out = []
    for x in labels:
        if x not in seen:
            seen[x] = len(seen)
        out.append(seen[x])
    return tuple(out)


@dataclass(frozen=True, order=True)
class Partition:
    """A partition of {0..n-1}; ``rgs[i]`` is the class label of i."""

    rgs: tuple[int, ...]

    def __post_init__(self):
        rgs = tuple(int(x) for x in self.rgs)
        top = -1
        for i, x in enumerate(rgs):
            if x < 0 or x > top + 1:
                raise PartitionError(f"not a restricted growth string at position {i}: {rgs}")
            top = max(top, x)
        object.__setattr__(self, "rgs", rgs)

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "Partition":
        return cls(_normalize(labels))

    @classmethod
    def from_classes(cls, classes: Iterable[Iterable[int]], n: int | None = None) -> "Partition":
        classes = [sorted(set(c)) for c in classes]
        classes = [c for c in classes if c]
        size = sum(len(c) for c in classes)
        if n is None:
            n = size
        labels = [-1] * n
        for k, c in enumerate(classes):
            for x in c:
                if not 0 <= x < n:
                    raise PartitionError(f"element {x} outside 0..{n - 1}")
                if labels[x] != -1:
                    raise PartitionError(f"element {x} in two classes")
                labels[x] = k
        if -1 in labels:
            raise PartitionError(f"element {labels.index(-1)} not covered")
        return cls.from_labels(labels)

    @classmethod
    def discrete(cls, n: int) -> "Partition":
        return cls(tuple(range(n)))

    @classmethod
    def indiscrete(cls, n: int) -> "Partition":
        return cls((0,) * n)

    @property
    def n(self) -> int:
        return len(self.rgs)

    @property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = []
        for i, x in enumerate(self.rgs):
            if x == len(out):
                out.append([])
            out[x].append(i)
        return tuple(tuple(c) for c in out)

    @property
    def num_classes(self) -> int:
        return max(self.rgs) + 1 if self.rgs else 0

    def class_of(self, x: int) -> tuple[int, ...]:
        lab = self.rgs[x]
        return tuple(i for i, y in enumerate(self.rgs) if y == lab)

    def is_discrete(self) -> bool:
        return self.num_classes == self.n

    def is_indiscrete(self) -> bool:
        return self.num_classes <= 1

    def singletons(self) -> frozenset[int]:
        return frozenset(c[0] for c in self.classes if len(c) == 1)

    def is_union_of_classes(self, subset: Iterable[int]) -> bool:
        s = set(subset)
        return all(set(c) <= s or not (set(c) & s) for c in self.classes)

    def __str__(self) -> str:
        return format_partition(self)


def format_partition(p: Partition) -> str:
    """Class syntax: ``0|1+2|3``."""
    return "|".join("+".join(str(x) for x in c) for c in p.classes)


def parse_partition(text: str, n: int | None = None) -> Partition:
    """Accept class syntax ``0|1+2|3`` or RGS syntax ``0.0.1.2``."""
    text = text.strip().strip("{}").replace(" ", "")
    if not text:
        return Partition(())
    try:
        if "|" in text or "+" in text:
            classes = [[int(x) for x in c.split("+")] for c in text.split("|")]
            return Partition.from_classes(classes, n)
        if "." in text:
            return Partition(tuple(int(x) for x in text.split(".")))
        if n is not None and n > 1:
            # a single element with no separators only describes order 1
            return Partition.from_classes([[int(text)]], n)
        return Partition.from_classes([[int(text)]])
    except ValueError as err:
        raise PartitionError(f"cannot parse partition {text!r}: {err}") from None


@lru_cache(maxsize=None)
def bell(n: int) -> int:
    """Bell number via the Bell triangle."""
    if n < 0:
        raise ValueError("bell(n) needs n >= 0")
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def enumerate_partitions(n: int, prefix: Sequence[int] = ()) -> Iterator[Partition]:
    """All partitions of {0..n-1} in lexicographic RGS order.

    The stream starts at the all-zero string (the one-class partition) and
    ends at the discrete partition.  With ``prefix`` only the strings that
    start with it are produced, which splits the space for parallel work.
    """
    prefix = tuple(prefix)
    if len(prefix) > n:
        return
    if prefix:
        Partition(prefix)  # validates the growth condition
    if n == 0:
        yield Partition(())
        return
    rgs = list(prefix) + [0] * (n - len(prefix))
    top = [0] * n
    m = -1
    for i, x in enumerate(prefix):
        m = max(m, x)
        top[i] = m
    start = len(prefix)
    if start == 0:
        rgs[0] = 0
        top[0] = 0
        start = 1
    for i in range(start, n):
        top[i] = top[i - 1]
    while True:
        yield Partition(tuple(rgs))
        i = n - 1
        while i >= start and rgs[i] > top[i - 1]:
            i -= 1
        if i < start:
            return
        rgs[i] += 1
        top[i] = max(top[i - 1], rgs[i])
        for j in range(i + 1, n):
            rgs[j] = 0
            top[j] = top[j - 1]


def is_refinement(p: Partition, q: Partition) -> bool:
    """True iff every class of q is a union of classes of p."""
    if p.n != q.n:
        raise PartitionError("partitions over different ground sets")
    image: dict[int, int] = {}
    for a, b in zip(p.rgs, q.rgs):
        if image.setdefault(a, b) != b:
            return False
    return True


def common_coarsening(p: Partition, q: Partition) -> Partition:
    """Finest partition coarser than both (merge overlapping classes)."""
    if p.n != q.n:
        raise PartitionError("partitions over different ground sets")
    parent = list(range(p.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for part in (p, q):
        first: dict[int, int] = {}
        for i, lab in enumerate(part.rgs):
            if lab in first:
                a, b = find(first[lab]), find(i)
                if a != b:
                    parent[max(a, b)] = min(a, b)
            else:
                first[lab] = i
    return Partition.from_labels([find(i) for i in range(p.n)])


def common_refinement(p: Partition, q: Partition, q_offset: int = 0) -> Partition:
    """Coarsest partition finer than both.

    ``q`` lives on {q_offset .. q_offset + q.n - 1}.  Equal ground sets give
    classwise intersections; a ground set starting right after p's gives the
    disjoint union of the two class lists.
    """
    if q_offset == 0 and p.n == q.n:
        return Partition.from_labels([(a, b) for a, b in zip(p.rgs, q.rgs)])
    if q_offset == p.n or (p.n == 0 and q_offset == 0):
        shift = p.num_classes
        return Partition(p.rgs + tuple(x + shift for x in q.rgs))
    raise PartitionError("ground sets overlap without being equal")


def disjoint_union(*parts: Partition) -> Partition:
    out = Partition(())
    for part in parts:
        out = common_refinement(out, part, out.n)
    return out


# conventional 1-based listing of the partitions of 3 and 4 points, keyed by merged blocks
_INDEX3 = {
    (): 1,
    ((1, 2),): 2,
    ((0, 1),): 3,
    ((0, 2),): 4,
    ((0, 1, 2),): 5,
}
_INDEX4 = {
    (): 1,
    ((0, 1),): 2,
    ((0, 2),): 3,
    ((0, 3),): 4,
    ((0, 1), (2, 3)): 5,
    ((0, 2), (1, 3)): 6,
    ((0, 3), (1, 2)): 7,
    ((1, 2),): 8,
    ((1, 3),): 9,
    ((2, 3),): 10,
    ((0, 1, 2),): 11,
    ((0, 1, 3),): 12,
    ((0, 2, 3),): 13,
    ((1, 2, 3),): 14,
    ((0, 1, 2, 3),): 15,
}


def standard_index(p: Partition) -> int:
    """1-based position of p in the conventional listing for 3 or 4 points.

    Three points: discrete, {1,2}, {0,1}, {0,2}, one class.  Four points:
    discrete, the three pairs through 0, the three pairings, the pairs avoiding
    0, the four triples, one class.
    """
    table = {3: _INDEX3, 4: _INDEX4}.get(p.n)
    if table is None:
        raise PartitionError(f"standard index defined for 3 or 4 points, not {p.n}")
    key = tuple(c for c in p.classes if len(c) > 1)
    return table[key]


def from_standard_index(n: int, index: int) -> Partition:
    table = {3: _INDEX3, 4: _INDEX4}.get(n)
    if table is None:
        raise PartitionError(f"standard index defined for 3 or 4 points, not {n}")
    for key, idx in table.items():
        if idx == index:
            singles = [[x] for x in range(n) if not any(x in c for c in key)]
            return Partition.from_classes(list(key) + singles, n)
    raise PartitionError(f"no partition with index {index}")
