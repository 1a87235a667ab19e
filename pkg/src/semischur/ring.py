"""Integer-coefficient elements of a semigroup ring and their products."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .partitions import Partition
from .table import CayleyTable


@dataclass(frozen=True)
class ElementVector:
    """Coefficient vector over the elements of a semigroup."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def __add__(self, other: "ElementVector") -> "ElementVector":
        _check_lengths(self, other)
        return ElementVector(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, k: int) -> "ElementVector":
        return ElementVector(tuple(k * a for a in self.coeffs))

    @property
    def mass(self) -> int:
        return sum(self.coeffs)

    def support(self) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.coeffs) if c)


def _check_lengths(u: ElementVector, v: ElementVector) -> None:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")


def simple_quantity(t: CayleyTable, subset: Iterable[int]) -> ElementVector:
    """0/1 indicator vector of a subset."""
    s = set(subset)
    for x in s:
        if not 0 <= x < t.order:
            raise ValueError(f"element {x} outside 0..{t.order - 1}")
    return ElementVector(tuple(1 if i in s else 0 for i in range(t.order)))


def product(t: CayleyTable, u: ElementVector, v: ElementVector) -> ElementVector:
    """Bilinear product: the coefficient of z is the sum of u_i v_j over i*j = z."""
    _check_lengths(u, v)
    if len(u) != t.order:
        raise ValueError(f"vectors of length {len(u)} over a table of order {t.order}")
    out = [0] * t.order
    rows = t.rows
    for i, a in enumerate(u.coeffs):
        if not a:
            continue
        ri = rows[i]
        for j, b in enumerate(v.coeffs):
            if b:
                out[ri[j]] += a * b
    return ElementVector(tuple(out))


def set_product(t: CayleyTable, xs: Sequence[int], ys: Sequence[int]) -> list[int]:
    """Coefficients of the product of two simple quantities (the multiset XY)."""
    out = [0] * t.order
    rows = t.rows
    for x in xs:
        rx = rows[x]
        for y in ys:
            out[rx[y]] += 1
    return out


def is_class_constant(v: ElementVector | Sequence[int], p: Partition) -> bool:
    """True iff v is constant on every class of p, i.e. v lies in the span of p."""
    coeffs = v.coeffs if isinstance(v, ElementVector) else v
    if len(coeffs) != p.n:
        raise ValueError(f"length mismatch: {len(coeffs)} vs {p.n}")
    first: dict[int, int] = {}
    for c, lab in zip(coeffs, p.rgs):
        if first.setdefault(lab, c) != c:
            return False
    return True
