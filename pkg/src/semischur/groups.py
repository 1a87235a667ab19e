"""Small group tables, shipped as ``.cay`` data and rebuilt from presentations.

``group_table(name)`` reads the bundled data file; ``build_group(name)``
regenerates a table from generators and is what the data file was made from.
"""
from __future__ import annotations

from functools import lru_cache
from importlib import resources
from typing import Callable, Sequence

from .families import cyclic, direct_product
from .table import CayleyTable, read_cay


def _from_elements(elements: Sequence, mul: Callable, name: str) -> CayleyTable:
    index = {x: i for i, x in enumerate(elements)}
    rows = tuple(tuple(index[mul(a, b)] for b in elements) for a in elements)
    return CayleyTable(rows, name)


def _perm_group(gens: Sequence[tuple[int, ...]], name: str) -> CayleyTable:
    """Closure of permutation generators; identity first, then breadth-first order."""
    n = len(gens[0])
    ident = tuple(range(n))
    elements = [ident]
    seen = {ident}
    i = 0
    while i < len(elements):
        a = elements[i]
        for g in gens:
            c = tuple(g[a[x]] for x in range(n))
            if c not in seen:
                seen.add(c)
                elements.append(c)
        i += 1

    def compose(a, b):  # apply a, then b
        return tuple(b[a[x]] for x in range(n))

    return _from_elements(elements, compose, name)


def _dihedral(n: int) -> CayleyTable:
    rot = tuple((x + 1) % n for x in range(n))
    ref = tuple((-x) % n for x in range(n))
    return _perm_group([rot, ref], f"D{n}")


def _quaternion() -> CayleyTable:
    # unit quaternions as (sign, basis) with basis in 1, i, j, k
    basis = {("1", "1"): (1, "1")}
    for u in "ijk":
        basis[("1", u)] = (1, u)
        basis[(u, "1")] = (1, u)
        basis[(u, u)] = (-1, "1")
    basis[("i", "j")] = (1, "k")
    basis[("j", "k")] = (1, "i")
    basis[("k", "i")] = (1, "j")
    basis[("j", "i")] = (-1, "k")
    basis[("k", "j")] = (-1, "i")
    basis[("i", "k")] = (-1, "j")
    elements = [(s, u) for u in "1ijk" for s in (1, -1)]

    def mul(a, b):
        s, u = basis[(a[1], b[1])]
        return (a[0] * b[0] * s, u)

    return _from_elements(elements, mul, "Q8")


def _dicyclic12() -> CayleyTable:
    # a^k x^e with a^6 = 1, x^2 = a^3, x a = a^-1 x
    elements = [(k, e) for e in (0, 1) for k in range(6)]

    def mul(p, q):
        k, e = p
        l, f = q
        if e == 0:
            return ((k + l) % 6, f)
        k2 = (k - l) % 6
        if f == 1:
            return ((k2 + 3) % 6, 0)
        return (k2, 1)

    return _from_elements(elements, mul, "Dic12")


def _product(*orders: int) -> CayleyTable:
    t = cyclic(orders[0])
    for m in orders[1:]:
        t = direct_product(t, cyclic(m))
    return t


_BUILDERS: dict[str, Callable[[], CayleyTable]] = {
    "V4": lambda: _product(2, 2),
    "S3": lambda: _perm_group([(1, 0, 2), (1, 2, 0)], "S3"),
    "D4": lambda: _dihedral(4),
    "Q8": _quaternion,
    "E8": lambda: _product(2, 2, 2),
    "Z4xZ2": lambda: _product(4, 2),
    "E9": lambda: _product(3, 3),
    "D5": lambda: _dihedral(5),
    "A4": lambda: _perm_group([(1, 2, 0, 3), (1, 0, 3, 2)], "A4"),
    "D6": lambda: _dihedral(6),
    "Dic12": _dicyclic12,
    "Z6xZ2": lambda: _product(6, 2),
    "D7": lambda: _dihedral(7),
}

GROUP_NAMES = tuple(_BUILDERS) + tuple(f"Z{n}" for n in range(1, 16))


def build_group(name: str) -> CayleyTable:
    if name in _BUILDERS:
        return _BUILDERS[name]().named(name)
    if name.startswith("Z") and name[1:].isdigit():
        return cyclic(int(name[1:])).named(name)
    raise KeyError(f"unknown group {name!r}")


@lru_cache(maxsize=1)
def _bundled() -> dict[str, CayleyTable]:
    text = resources.files("semischur").joinpath("data/groups.cay").read_text()
    return {meta["name"]: t for t, meta in read_cay(text)}


def group_table(name: str) -> CayleyTable:
    """A named group table: bundled data first, then cyclic groups by formula."""
    data = _bundled()
    if name in data:
        return data[name]
    return build_group(name)
