"""Cayley tables: validation, element roles, opposites, morphisms, canonical forms."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Iterator, Sequence, TextIO


class TableError(ValueError):
    """Raised for malformed or non-associative tables."""


class AssociativityError(TableError):
    def __init__(self, triple: tuple[int, int, int], message: str | None = None):
        self.triple = triple
        i, j, k = triple
        super().__init__(message or f"not associative: ({i}*{j})*{k} != {i}*({j}*{k})")


def _first_nonassociative(rows: Sequence[Sequence[int]]) -> tuple[int, int, int] | None:
    n = len(rows)
    for i in range(n):
        ri = rows[i]
        for j in range(n):
            ij = ri[j]
            rij = rows[ij]
            rj = rows[j]
            for k in range(n):
                if rij[k] != ri[rj[k]]:
                    return (i, j, k)
    return None


@dataclass(frozen=True)
class CayleyTable:
    """A finite semigroup given by its multiplication table.

    ``rows[i][j]`` is the product ``i*j``.  Construction checks the entry
    range and associativity, so every instance is a semigroup.
    """

    rows: tuple[tuple[int, ...], ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        for i, r in enumerate(rows):
            if len(r) != n:
                raise TableError(f"row {i} has length {len(r)}, expected {n}")
            for j, x in enumerate(r):
                if not 0 <= x < n:
                    raise TableError(f"entry ({i},{j}) = {x} out of range 0..{n - 1}")
        bad = _first_nonassociative(rows)
        if bad is not None:
            raise AssociativityError(bad)

    @property
    def order(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def mul(self, i: int, j: int) -> int:
        return self.rows[i][j]

    @property
    def flat(self) -> tuple[int, ...]:
        return tuple(x for r in self.rows for x in r)

    def named(self, name: str | None) -> "CayleyTable":
        return CayleyTable(self.rows, name)

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"CayleyTable{label}({[list(r) for r in self.rows]})"


def validate(raw: Sequence[Sequence[int]], name: str | None = None) -> CayleyTable:
    """Validate a raw square array; raises TableError / AssociativityError."""
    return CayleyTable(tuple(tuple(r) for r in raw), name)


def is_associative(raw: Sequence[Sequence[int]]) -> bool:
    return _first_nonassociative(raw) is None


# ---------------------------------------------------------------- roles


@dataclass(frozen=True)
class ElementRoles:
    left_zeros: frozenset[int]
    right_zeros: frozenset[int]
    zeros: frozenset[int]
    left_identities: frozenset[int]
    right_identities: frozenset[int]
    identities: frozenset[int]
    idempotents: frozenset[int]


def element_roles(t: CayleyTable) -> ElementRoles:
    n = t.order
    rows = t.rows
    rng = range(n)
    lz = frozenset(x for x in rng if all(rows[x][y] == x for y in rng))
    rz = frozenset(x for x in rng if all(rows[y][x] == x for y in rng))
    li = frozenset(x for x in rng if all(rows[x][y] == y for y in rng))
    ri = frozenset(x for x in rng if all(rows[y][x] == y for y in rng))
    idem = frozenset(x for x in rng if rows[x][x] == x)
    return ElementRoles(lz, rz, lz & rz, li, ri, li & ri, idem)


def zero_of(t: CayleyTable) -> int | None:
    z = element_roles(t).zeros
    return next(iter(z)) if z else None


def identity_of(t: CayleyTable) -> int | None:
    e = element_roles(t).identities
    return next(iter(e)) if e else None


def is_commutative(t: CayleyTable) -> bool:
    r = t.rows
    return all(r[i][j] == r[j][i] for i in range(t.order) for j in range(i))


def is_group(t: CayleyTable) -> bool:
    e = identity_of(t)
    if e is None:
        return t.order == 0
    return all(e in row for row in t.rows)


def opposite(t: CayleyTable) -> CayleyTable:
    n = t.order
    name = f"op({t.name})" if t.name else None
    return CayleyTable(tuple(tuple(t.rows[j][i] for j in range(n)) for i in range(n)), name)


def relabel(t: CayleyTable, sigma: Sequence[int]) -> CayleyTable:
    """Image of t under the bijection i -> sigma[i]."""
    n = t.order
    inv = [0] * n
    for old, new in enumerate(sigma):
        inv[new] = old
    rows = tuple(
        tuple(sigma[t.rows[inv[a]][inv[b]]] for b in range(n)) for a in range(n)
    )
    return CayleyTable(rows, t.name)


def subtable(t: CayleyTable, elements: Iterable[int]) -> CayleyTable:
    """Induced table on a subsemigroup, relabelled in increasing order."""
    elems = sorted(set(elements))
    pos = {x: i for i, x in enumerate(elems)}
    try:
        rows = tuple(tuple(pos[t.rows[x][y]] for y in elems) for x in elems)
    except KeyError:
        raise TableError(f"{elems} is not closed under multiplication") from None
    return CayleyTable(rows)


def is_subsemigroup(t: CayleyTable, elements: Iterable[int]) -> bool:
    s = set(elements)
    return all(t.rows[x][y] in s for x in s for y in s)


# ---------------------------------------------------------------- morphisms

ISOMORPHISM = "isomorphism"
ANTI_ISOMORPHISM = "anti-isomorphism"


@dataclass(frozen=True)
class Morphism:
    map: tuple[int, ...]
    kind: str = ISOMORPHISM

    def __call__(self, x: int) -> int:
        return self.map[x]

    def compose(self, other: "Morphism") -> "Morphism":
        """self after other."""
        kind = ISOMORPHISM if self.kind == other.kind else ANTI_ISOMORPHISM
        return Morphism(tuple(self.map[x] for x in other.map), kind)

    def inverse(self) -> "Morphism":
        inv = [0] * len(self.map)
        for i, x in enumerate(self.map):
            inv[x] = i
        return Morphism(tuple(inv), self.kind)


def _signature(t: CayleyTable, x: int, anti: bool) -> tuple:
    """Relabelling invariants of an element, used to prune morphism search."""
    n = t.order
    rows = t.rows
    row = [rows[x][y] for y in range(n)]
    col = [rows[y][x] for y in range(n)]
    if anti:
        row, col = col, row
    sq = rows[x][x]
    # order of x in the monogenic subsemigroup
    seen = {x}
    p = x
    while True:
        p = rows[p][x]
        if p in seen:
            break
        seen.add(p)
    return (
        sq == x,
        all(v == x for v in row),
        all(v == x for v in col),
        row == list(range(n)),
        col == list(range(n)),
        len(set(row)),
        len(set(col)),
        sum(1 for r in rows for v in r if v == x),
        len(seen),
    )


def _morphisms(a: CayleyTable, b: CayleyTable, anti: bool, find_all: bool) -> Iterator[tuple[int, ...]]:
    n = a.order
    if b.order != n:
        return
    ra, rb = a.rows, b.rows
    sa = [_signature(a, x, False) for x in range(n)]
    sb = [_signature(b, x, anti) for x in range(n)]
    if sorted(sa) != sorted(sb):
        return
    cands = [[y for y in range(n) if sb[y] == sa[x]] for x in range(n)]
    # most constrained elements first; zeros and identities have singleton candidate lists
    order = sorted(range(n), key=lambda x: (len(cands[x]), x))
    image = [-1] * n
    used = [False] * n
    products_to: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for p in range(n):
        for q in range(n):
            products_to[ra[p][q]].append((p, q))

    def consistent(x: int) -> bool:
        fx = image[x]
        for y in range(n):
            fy = image[y]
            if fy < 0:
                continue
            for p, q, fp, fq in ((x, y, fx, fy), (y, x, fy, fx)):
                pq = ra[p][q]
                fpq = image[pq]
                target = rb[fq][fp] if anti else rb[fp][fq]
                if fpq >= 0:
                    if fpq != target:
                        return False
                elif used[target]:
                    return False
        # pairs checked earlier while their product was still unassigned
        for p, q in products_to[x]:
            fp, fq = image[p], image[q]
            if fp >= 0 and fq >= 0 and fx != (rb[fq][fp] if anti else rb[fp][fq]):
                return False
        return True

    def rec(depth: int) -> Iterator[tuple[int, ...]]:
        if depth == n:
            yield tuple(image)
            return
        x = order[depth]
        for y in cands[x]:
            if used[y]:
                continue
            image[x] = y
            used[y] = True
            if consistent(x):
                yield from rec(depth + 1)
            image[x] = -1
            used[y] = False

    yield from rec(0)


def find_morphism(a: CayleyTable, b: CayleyTable, kind: str = ISOMORPHISM) -> Morphism | None:
    """A bijection a -> b of the requested kind, or None."""
    if kind not in (ISOMORPHISM, ANTI_ISOMORPHISM):
        raise ValueError(f"unknown morphism kind {kind!r}")
    for m in _morphisms(a, b, kind == ANTI_ISOMORPHISM, False):
        return Morphism(m, kind)
    return None


def is_equivalent(a: CayleyTable, b: CayleyTable) -> bool:
    return find_morphism(a, b) is not None or find_morphism(a, b, ANTI_ISOMORPHISM) is not None


def automorphism_group(t: CayleyTable) -> list[Morphism]:
    return [Morphism(m) for m in _morphisms(t, t, False, True)]


# ---------------------------------------------------------------- canonical forms


def _min_relabelled(rows: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Row-major lexicographically least relabelled table, flattened."""
    n = len(rows)
    best: list[int] | None = None
    cells = [(a, b) for a in range(n) for b in range(n)]
    sigma = [0] * n
    for inv in permutations(range(n)):
        for new, old in enumerate(inv):
            sigma[old] = new
        if best is None:
            best = [sigma[rows[inv[a]][inv[b]]] for a, b in cells]
            continue
        for pos, (a, b) in enumerate(cells):
            v = sigma[rows[inv[a]][inv[b]]]
            w = best[pos]
            if v != w:
                if v < w:
                    best[pos] = v
                    best[pos + 1:] = [sigma[rows[inv[c]][inv[d]]] for c, d in cells[pos + 1:]]
                break
    return tuple(best or ())


def _unflatten(flat: Sequence[int], n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))


def canonical_form(t: CayleyTable) -> CayleyTable:
    """Least table, in row-major lexicographic order, isomorphic to t."""
    return CayleyTable(_unflatten(_min_relabelled(t.rows), t.order), t.name)


def equivalence_canonical_form(t: CayleyTable) -> CayleyTable:
    """Least table isomorphic or anti-isomorphic to t."""
    a = _min_relabelled(t.rows)
    b = _min_relabelled(opposite(t).rows)
    return CayleyTable(_unflatten(min(a, b), t.order), t.name)


# ---------------------------------------------------------------- .cay text format


def format_cay(t: CayleyTable, meta: dict[str, object] | None = None) -> str:
    lines = []
    meta = dict(meta or {})
    if t.name and "name" not in meta:
        meta["name"] = t.name
    for key in ("name", "forsythe", "gap"):
        if meta.get(key) is not None:
            lines.append(f"# {key}: {meta[key]}")
    lines.append(str(t.order))
    lines.extend(" ".join(str(x) for x in r) for r in t.rows)
    return "\n".join(lines) + "\n"


def parse_cay_stream(text: str) -> list[tuple[CayleyTable, dict[str, str]]]:
    """Parse one or more blank-line-separated ``.cay`` records.

    Errors carry the 1-based line number; associativity failures also name
    the record index and the witness triple.
    """
    records: list[tuple[CayleyTable, dict[str, str]]] = []
    lines = text.split("\n")
    i = 0
    while i < len(lines):
        if not lines[i].strip():
            i += 1
            continue
        meta: dict[str, str] = {}
        while i < len(lines) and lines[i].lstrip().startswith("#"):
            body = lines[i].lstrip()[1:]
            if ":" in body:
                k, v = body.split(":", 1)
                meta[k.strip()] = v.strip()
            i += 1
        if i >= len(lines) or not lines[i].strip():
            raise TableError(f"line {i + 1}: expected table order")
        try:
            n = int(lines[i].strip())
        except ValueError:
            raise TableError(f"line {i + 1}: bad order {lines[i].strip()!r}") from None
        start = i + 1
        rows = []
        for r in range(n):
            ln = start + r
            if ln >= len(lines) or not lines[ln].strip():
                raise TableError(f"line {ln + 1}: expected {n} rows")
            try:
                row = [int(x) for x in lines[ln].split()]
            except ValueError:
                raise TableError(f"line {ln + 1}: non-integer entry") from None
            if len(row) != n:
                raise TableError(f"line {ln + 1}: expected {n} entries, got {len(row)}")
            rows.append(row)
        try:
            t = CayleyTable(tuple(tuple(r) for r in rows), meta.get("name"))
        except AssociativityError as err:
            raise AssociativityError(
                err.triple, f"record {len(records)} (line {i + 1}): {err}"
            ) from None
        except TableError as err:
            raise TableError(f"record {len(records)} (line {i + 1}): {err}") from None
        records.append((t, meta))
        i = start + n
    return records


def read_cay(stream: TextIO | str) -> list[tuple[CayleyTable, dict[str, str]]]:
    text = stream if isinstance(stream, str) else stream.read()
    return parse_cay_stream(text)


def write_cay(items: Iterable[tuple[CayleyTable, dict[str, object]] | CayleyTable]) -> str:
    chunks = []
    for it in items:
        if isinstance(it, CayleyTable):
            chunks.append(format_cay(it))
        else:
            chunks.append(format_cay(*it))
    return "\n".join(chunks)
