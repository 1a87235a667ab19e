"""Constructors for named semigroup families and extensions.

Zero-bearing families put the zero at index 0.  Every constructor returns a
validated CayleyTable, so associativity is re-checked on each build.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .partitions import Partition, PartitionError
from .table import CayleyTable, element_roles, opposite, relabel, zero_of


class FamilyError(ValueError):
    """Bad parameters or a violated construction precondition."""


def _build(n: int, f: Callable[[int, int], int], name: str | None = None) -> CayleyTable:
    return CayleyTable(tuple(tuple(f(i, j) for j in range(n)) for i in range(n)), name)


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise FamilyError(msg)


# ---------------------------------------------------------------- atomic families


def null(n: int) -> CayleyTable:
    """O_n: every product is the zero 0."""
    _need(n >= 1, "null semigroup needs n >= 1")
    return _build(n, lambda i, j: 0, f"O{n}")


def left_null(n: int) -> CayleyTable:
    """LO_n: xy = x."""
    _need(n >= 1, "left-null semigroup needs n >= 1")
    return _build(n, lambda i, j: i, f"LO{n}")


def right_null(n: int) -> CayleyTable:
    """RO_n: xy = y."""
    _need(n >= 1, "right-null semigroup needs n >= 1")
    return _build(n, lambda i, j: j, f"RO{n}")


def chain(n: int) -> CayleyTable:
    """CH_n: a chain under meet; 0 is the zero and n-1 the identity."""
    _need(n >= 1, "chain needs n >= 1")
    return _build(n, min, f"CH{n}")


def star(n: int) -> CayleyTable:
    """K_{1,n}: zero 0 and idempotents 1..n whose distinct products are 0."""
    _need(n >= 0, "K1 needs n >= 0")
    return _build(n + 1, lambda i, j: i if i == j else 0, f"K1_{n}")


def cyclic(n: int) -> CayleyTable:
    """Z_n with identity 0 and generator 1."""
    _need(n >= 1, "cyclic group needs n >= 1")
    return _build(n, lambda i, j: (i + j) % n, f"Z{n}")


def monogenic(index: int, period: int) -> CayleyTable:
    """Z_{m,n}: <z | z^m = z^(m+n)>; element i stands for z^(i+1)."""
    _need(index >= 1 and period >= 1, "monogenic needs index, period >= 1")
    m, p = index, period

    def mul(i: int, j: int) -> int:
        s = i + j + 2
        if s >= m:
            s = m + (s - m) % p
        return s - 1

    return _build(m + p - 1, mul, f"Z{m},{p}")


def _digits(k: int, base: int, count: int) -> list[int]:
    """Most significant digit first, zero padded."""
    out = []
    for _ in range(count):
        out.append(k % base)
        k //= base
    return out[::-1]


def nilpotent_block(m: int, n: int, k: int) -> CayleyTable:
    """O(m,n,k): products vanish except on the last n elements, whose n x n
    block holds the base-m digits of k in reading order."""
    _need(m >= 1 and n >= 0, "O(m,n,k) needs m >= 1, n >= 0")
    _need(0 <= k < m ** (n * n), f"k must lie in [0, {m ** (n * n)})")
    block = _digits(k, m, n * n)

    def mul(i: int, j: int) -> int:
        if i < m or j < m:
            return 0
        return block[(i - m) * n + (j - m)]

    return _build(m + n, mul, f"O({m},{n},{k})")


def _lo_block(l: int, m: int, n: int, k: int, right_action: bool, tag: str) -> CayleyTable:
    _need(l >= 1 and m >= 0 and n >= 0, f"{tag} needs l >= 1")
    _need(0 <= k < l ** (n * m), f"k must lie in [0, {l ** (n * m)})")
    block = _digits(k, l, n * m)
    lm = l + m

    def mul(x: int, y: int) -> int:
        if x < lm:
            return x
        if y < l or y >= lm:
            return y if right_action else 0
        return block[(x - lm) * m + (y - l)]

    return _build(l + m + n, mul, f"{tag}({l},{m},{n},{k})")


def loo(l: int, m: int, n: int, k: int) -> CayleyTable:
    """LOO(l,m,n,k): blocks L, M, N; L and M are left zeros, N kills L and N,
    and the N x M block holds base-l digits of k."""
    return _lo_block(l, m, n, k, False, "LOO")


def loro(l: int, m: int, n: int, k: int) -> CayleyTable:
    """LORO(l,m,n,k): as LOO but N acts as a right identity on L and N."""
    return _lo_block(l, m, n, k, True, "LORO")


def orop(n: int) -> CayleyTable:
    """OROP_n: null part {0..n-1} with two idempotents a = n and b = n+1.

    For x in the null part: x a = 0, a x = x, x b = x, b x = 0.  Also
    a b = 1 and b a = 0.
    """
    _need(n >= 2, "OROP needs n >= 2")
    a, b = n, n + 1

    def mul(x: int, y: int) -> int:
        if x < n and y < n:
            return 0
        if x < n:
            return 0 if y == a else x
        if y < n:
            return y if x == a else 0
        if x == y:
            return x
        return 1 if (x, y) == (a, b) else 0

    return _build(n + 2, mul, f"OROP{n}")


# ---------------------------------------------------------------- unary extensions


def adjoin_identity(g: CayleyTable) -> CayleyTable:
    """G^e: a new identity appended as the last element."""
    n = g.order

    def mul(i: int, j: int) -> int:
        if i == n:
            return j
        if j == n:
            return i
        return g.rows[i][j]

    return _build(n + 1, mul, f"({g.name})^e" if g.name else None)


def adjoin_zero(g: CayleyTable) -> CayleyTable:
    """G^θ: a new zero placed at index 0."""
    n = g.order

    def mul(i: int, j: int) -> int:
        if i == 0 or j == 0:
            return 0
        return g.rows[i - 1][j - 1] + 1

    return _build(n + 1, mul, f"({g.name})^0" if g.name else None)


def _zero(g: CayleyTable, what: str) -> int:
    z = zero_of(g)
    _need(z is not None, f"{what} needs a zero-semigroup")
    return z


def mutant(g: CayleyTable) -> CayleyTable:
    """G^μ: a new element absorbing every element of G whose square is the zero."""
    z = _zero(g, "mutant")
    return roster(g, z, range(g.order), range(g.order), hat=True).named(
        f"({g.name})^mu" if g.name else None
    )


def clone(g: CayleyTable, x: int | Sequence[int]) -> CayleyTable:
    """G[x]: a copy x' of x with the same row and column, and x'x' = xx.

    A sequence clones each listed element in turn (repeats allowed).
    """
    xs = [x] if isinstance(x, int) else list(x)
    out = g
    for y in xs:
        out = roster(out, y, (), ())
    return out.named(f"{g.name}[{','.join(map(str, xs))}]" if g.name else None)


def clone_idem(g: CayleyTable, x: int | Sequence[int]) -> CayleyTable:
    """G[x^]: a clone of an idempotent x that is itself idempotent."""
    xs = [x] if isinstance(x, int) else list(x)
    out = g
    for y in xs:
        _need(g.rows[y][y] == y, f"idempotent clone of non-idempotent {y}")
        out = roster(out, y, (), (), hat=True)
    return out.named(f"{g.name}[{','.join(map(str, xs))}^]" if g.name else None)


# ---------------------------------------------------------------- binary constructions


def direct_product(g: CayleyTable, h: CayleyTable) -> CayleyTable:
    """G x H with (a, b) stored at a*|H| + b."""
    m = h.order

    def mul(i: int, j: int) -> int:
        a, b = divmod(i, m)
        c, d = divmod(j, m)
        return g.rows[a][c] * m + h.rows[b][d]

    return _build(g.order * m, mul, f"{g.name}x{h.name}" if g.name and h.name else None)


def stack(g: CayleyTable, h: CayleyTable) -> CayleyTable:
    """G s H: G first, then H; mixed products land on the G factor."""
    n = g.order

    def mul(i: int, j: int) -> int:
        if i < n and j < n:
            return g.rows[i][j]
        if i >= n and j >= n:
            return h.rows[i - n][j - n] + n
        return i if i < n else j

    return _build(n + h.order, mul, f"stack({g.name},{h.name})" if g.name and h.name else None)


def twist(g: CayleyTable, h: CayleyTable) -> CayleyTable:
    """G t H: G first, then H; gh is G's zero and hg is H's zero.

    When G has no zero but is left-null, this is the semi-twist: xg = x and
    gx is H's zero.
    """
    n = g.order
    zh = _zero(h, "twist") + n
    zg = zero_of(g)
    if zg is None:
        roles = element_roles(g)
        _need(len(roles.left_zeros) == n, "twist needs G to be a zero-semigroup or left-null")

    def mul(i: int, j: int) -> int:
        if i < n and j < n:
            return g.rows[i][j]
        if i >= n and j >= n:
            return h.rows[i - n][j - n] + n
        if i < n:
            return i if zg is None else zg
        return zh

    return _build(n + h.order, mul, f"twist({g.name},{h.name})" if g.name and h.name else None)


def semi_twist(n: int, h: CayleyTable) -> CayleyTable:
    return twist(left_null(n), h)


def unite(g: CayleyTable, h: CayleyTable) -> CayleyTable:
    """G u H: the twist with both zeros identified; zero at 0, then G, then H."""
    zg = _zero(g, "unite")
    zh = _zero(h, "unite")
    gl = [x for x in range(g.order) if x != zg]
    hl = [x for x in range(h.order) if x != zh]
    gi = {zg: 0, **{x: i + 1 for i, x in enumerate(gl)}}
    hi = {zh: 0, **{x: i + 1 + len(gl) for i, x in enumerate(hl)}}
    back = [("g", zg)] + [("g", x) for x in gl] + [("h", x) for x in hl]

    def mul(i: int, j: int) -> int:
        (s, a), (u, b) = back[i], back[j]
        if s == "g" and u == "g":
            return gi[g.rows[a][b]]
        if s == "h" and u == "h":
            return hi[h.rows[a][b]]
        return 0

    return _build(len(back), mul, f"unite({g.name},{h.name})" if g.name and h.name else None)


def semi_stack(n: int, g: CayleyTable, action: Sequence[Sequence[int]]) -> CayleyTable:
    """LO_n semi-stacked with G: LO_n first; xg = x and gx = action[g][x]."""
    _need(len(action) == g.order, "action needs one permutation per element of G")
    for perm in action:
        _need(sorted(perm) == list(range(n)), f"{list(perm)} is not a permutation of 0..{n - 1}")

    def mul(i: int, j: int) -> int:
        if i < n:
            return i
        if j < n:
            return action[i - n][j]
        return g.rows[i - n][j - n] + n

    return _build(n + g.order, mul)


def loz(n: int) -> CayleyTable:
    """LOZ_n: LO_n semi-stacked with Z_n acting by cyclic shifts."""
    action = [[(x + k) % n for x in range(n)] for k in range(n)]
    return semi_stack(n, cyclic(n), action).named(f"LOZ{n}")


# ---------------------------------------------------------------- rosters


@dataclass(frozen=True)
class RosterSpec:
    x: int
    H: frozenset[int]
    K: frozenset[int]
    case: str
    hat: bool = False


def _prime_complement(g: CayleyTable, s: frozenset[int]) -> bool:
    """G - S is a prime ideal: S is closed and xy in S forces x, y in S."""
    rows = g.rows
    n = g.order
    for a in range(n):
        for b in range(n):
            ab = rows[a][b]
            if (a in s and b in s) != (ab in s):
                return False
    return True


def check_roster(g: CayleyTable, x: int, H: Iterable[int], K: Iterable[int], hat: bool = False) -> RosterSpec:
    """Verify the roster preconditions and pick the square rule case."""
    H = frozenset(H)
    K = frozenset(K)
    n = g.order
    rows = g.rows
    _need(0 <= x < n, f"roster element {x} outside 0..{n - 1}")
    for y in H:
        _need(0 <= y < n and rows[y][x] == x, f"non-stabilizer member: {y}*{x} != {x}")
    for y in K:
        _need(0 <= y < n and rows[x][y] == x, f"non-stabilizer member: {x}*{y} != {x}")
    _need(_prime_complement(g, H), f"non-prime complement: G - {sorted(H)}")
    _need(_prime_complement(g, K), f"non-prime complement: G - {sorted(K)}")
    if hat:
        _need(rows[x][x] == x, f"hat roster on non-idempotent {x}")
        _need(H == K, "hat roster needs H = K")
    if H <= K:
        case = "a"
    elif K <= H:
        case = "b"
    elif x in H and x in K:
        case = "c"
    elif x not in H and x not in K:
        case = "d"
    else:
        raise FamilyError("condition (*) failure: none of the four cases applies")
    return RosterSpec(x, H, K, case, hat)


def roster(g: CayleyTable, x: int, H: Iterable[int], K: Iterable[int], hat: bool = False) -> CayleyTable:
    """Adjoin x' (index n): y x' = x' for y in H, else y x; x' z = x' for z in K,
    else x z; the square of x' follows the case rule."""
    spec = check_roster(g, x, H, K, hat)
    n = g.order
    rows = g.rows
    xp = n
    col = [xp if y in spec.H else rows[y][x] for y in range(n)]
    row = [xp if z in spec.K else rows[x][z] for z in range(n)]
    xpx = row[x]  # x' x
    xxp = col[x]  # x x'
    sq = rows[x][x]
    if spec.hat:
        square = xp if xpx == sq else sq
    elif spec.case == "a":
        square = xpx
    elif spec.case == "b":
        square = xxp
    elif spec.case == "c":
        square = xp
    else:
        square = sq
    out = [list(r) + [col[i]] for i, r in enumerate(rows)]
    out.append(row + [square])
    try:
        return CayleyTable(tuple(tuple(r) for r in out))
    except ValueError as err:
        raise FamilyError(f"internal defect: roster produced a non-semigroup ({err})") from err


def roster_hat(g: CayleyTable, x: int, H: Iterable[int]) -> CayleyTable:
    H = frozenset(H)
    return roster(g, x, H, H, hat=True)


def iterated_roster(g: CayleyTable, xs: Sequence[int], H: Iterable[int], K: Iterable[int]) -> CayleyTable:
    """Roster each element of the multiset xs in turn with the same H and K."""
    H = frozenset(H)
    K = frozenset(K)
    for x in xs:
        _need(x not in H and x not in K, f"iterated roster needs {x} outside H and K")
    out = g
    for x in xs:
        out = roster(out, x, H, K)
    return out


def roster_schur_lift(
    g: CayleyTable, p: Partition, xs: Sequence[int], H: Iterable[int], K: Iterable[int]
) -> Partition:
    """Extend a Schur ring of G over the rostered table by one class of clones."""
    H = frozenset(H)
    K = frozenset(K)
    _need(p.n == g.order, "partition and table differ in size")
    _need(p.is_union_of_classes(set(xs)), f"{sorted(set(xs))} is not a union of classes")
    for s in (H, K):
        _need(p.is_union_of_classes(s), f"{sorted(s)} is not a union of classes")
        _need(all(g.rows[a][b] in s for a in s for b in s), f"{sorted(s)} is not a subsemigroup")
    labels = list(p.rgs) + [p.num_classes] * len(xs)
    return Partition.from_labels(labels)


# ---------------------------------------------------------------- O-extensions


def og(base: CayleyTable, n: int) -> CayleyTable:
    """OG_n: zero 0, null elements 1..n-1, then G; xg = 0 and gx = x."""
    _need(n >= 1, "OG needs n >= 1")
    m = base.order

    def mul(i: int, j: int) -> int:
        if i < n and j < n:
            return 0
        if i >= n and j >= n:
            return base.rows[i - n][j - n] + n
        if i < n:
            return 0
        return j

    return _build(n + m, mul, f"O{base.name}{n}" if base.name else None)


def og_two(base: CayleyTable, m: int, n: int) -> CayleyTable:
    """OG_{m,n}: OG_m with n-1 clones of the zero that G fixes from the right.

    Layout: zero, the m-1 null elements, the n-1 clones, then G.
    """
    _need(n >= 1, "OG_{m,n} needs n >= 1")
    t = og(base, m)
    gset = range(m, m + base.order)
    for _ in range(n - 1):
        t = roster(t, 0, (), gset)
    # move G behind the clones
    size = t.order
    g_old = list(gset)
    clones = list(range(m + base.order, size))
    order = list(range(m)) + clones + g_old
    sigma = [0] * size
    for new, old in enumerate(order):
        sigma[old] = new
    return relabel(t, sigma).named(f"O{base.name}{m},{n}" if base.name else None)


def olo_three(l: int, m: int, n: int) -> CayleyTable:
    return og_two(left_null(n), l, m).named(f"OLO{l},{m},{n}")


# ---------------------------------------------------------------- spec language


@dataclass(frozen=True)
class FamilySpec:
    """A parsed family expression: a constructor tag with arguments."""

    tag: str
    args: tuple = ()
    kwargs: tuple = ()

    def __str__(self) -> str:
        parts = [str(a) if not isinstance(a, frozenset) else "{" + ",".join(map(str, sorted(a))) + "}" for a in self.args]
        for k, v in self.kwargs:
            if isinstance(v, frozenset):
                v = "{" + ",".join(map(str, sorted(v))) + "}"
            elif isinstance(v, tuple):
                v = "[" + ",".join(map(str, v)) + "]"
            parts.append(f"{k}={v}")
        return f"{self.tag}({', '.join(parts)})"


def parse_spec(text: str) -> FamilySpec:
    """Parse expressions such as ``stack(Z(2), O(4,2,123))``.

    Nested constructors, integers, sets ``{1,2}``, lists ``[0,0]`` and
    keyword arguments ``x=0`` are accepted.
    """
    import ast

    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as err:
        raise FamilyError(f"cannot parse family spec {text!r}: {err.msg}") from None

    def conv(node):
        if isinstance(node, ast.Call):
            if not isinstance(node.func, ast.Name):
                raise FamilyError(f"bad constructor in {text!r}")
            args = tuple(conv(a) for a in node.args)
            kwargs = tuple((k.arg, conv(k.value)) for k in node.keywords)
            return FamilySpec(node.func.id, args, kwargs)
        if isinstance(node, ast.Name):
            return FamilySpec(node.id)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            raise FamilyError("negative parameters are not allowed")
        if isinstance(node, ast.Set):
            return frozenset(conv(e) for e in node.elts)
        if isinstance(node, ast.Dict) and not node.keys:
            return frozenset()
        if isinstance(node, (ast.List, ast.Tuple)):
            return tuple(conv(e) for e in node.elts)
        raise FamilyError(f"unsupported syntax in {text!r}: {ast.dump(node)[:40]}")

    return conv(tree.body)


def _ints(spec: FamilySpec, counts: Sequence[int]) -> tuple[int, ...]:
    _need(len(spec.args) in counts, f"{spec.tag} takes {' or '.join(map(str, counts))} arguments")
    _need(all(isinstance(a, int) for a in spec.args), f"{spec.tag} needs integer arguments")
    return spec.args


def _table_arg(a) -> CayleyTable:
    _need(isinstance(a, FamilySpec), f"expected a semigroup, got {a!r}")
    return construct(a)


def _set(v) -> frozenset[int]:
    if isinstance(v, int):
        return frozenset([v])
    return frozenset(v)


def _og_family(base_ctor):
    def build(spec: FamilySpec) -> CayleyTable:
        args = _ints(spec, (2, 3))
        if len(args) == 2:
            m, n = args
            return og(base_ctor(n), m).named(f"{spec.tag}{m},{n}")
        l, m, n = args
        return og_two(base_ctor(n), l, m).named(f"{spec.tag}{l},{m},{n}")

    return build


def _oro(spec: FamilySpec) -> CayleyTable:
    args = _ints(spec, (2, 3))
    if len(args) == 2:
        return _og_family(right_null)(spec)
    # ORO_{l,m,n} is the opposite of OLO_{m,l,n}
    l, m, n = args
    return opposite(olo_three(m, l, n)).named(f"ORO{l},{m},{n}")


def _O(spec: FamilySpec) -> CayleyTable:
    args = _ints(spec, (1, 3))
    return null(*args) if len(args) == 1 else nilpotent_block(*args)


def _Z(spec: FamilySpec) -> CayleyTable:
    args = _ints(spec, (1, 2))
    return cyclic(*args) if len(args) == 1 else monogenic(*args)


def _OG(spec: FamilySpec) -> CayleyTable:
    _need(len(spec.args) in (2, 3), "OG takes a semigroup and one or two sizes")
    base = _table_arg(spec.args[0])
    if len(spec.args) == 2:
        return og(base, spec.args[1])
    return og_two(base, spec.args[1], spec.args[2])


def _kw(spec: FamilySpec) -> dict:
    return dict(spec.kwargs)


def _roster(spec: FamilySpec, hat: bool) -> CayleyTable:
    g = _table_arg(spec.args[0])
    kw = _kw(spec)
    rest = list(spec.args[1:])
    x = kw.get("x", rest.pop(0) if rest else None)
    _need(x is not None, "roster needs x=")
    H = _set(kw.get("H", rest.pop(0) if rest else frozenset()))
    if hat:
        return roster_hat(g, x, H)
    K = _set(kw.get("K", rest.pop(0) if rest else frozenset()))
    if isinstance(x, tuple):
        return iterated_roster(g, x, H, K)
    return roster(g, x, H, K)


def _clone(spec: FamilySpec, idem: bool) -> CayleyTable:
    g = _table_arg(spec.args[0])
    kw = _kw(spec)
    x = kw.get("x", kw.get("X", spec.args[1] if len(spec.args) > 1 else None))
    _need(x is not None, "clone needs x=")
    xs = [x] if isinstance(x, int) else sorted(x) if isinstance(x, frozenset) else list(x)
    return clone_idem(g, xs) if idem else clone(g, xs)


def _semistack(spec: FamilySpec) -> CayleyTable:
    n = spec.args[0]
    _need(isinstance(n, int), "semistack(n, G, phi=[...]) needs an integer n")
    g = _table_arg(spec.args[1])
    phi = _kw(spec).get("phi")
    _need(phi is not None, "semistack needs phi=[...]")
    return semi_stack(n, g, [list(p) for p in phi])


def _group(spec: FamilySpec) -> CayleyTable:
    from .groups import group_table

    _need(len(spec.args) == 1 and isinstance(spec.args[0], FamilySpec), "group(NAME)")
    return group_table(spec.args[0].tag)


CONSTRUCTORS: dict[str, Callable[[FamilySpec], CayleyTable]] = {
    "O": _O,
    "LO": lambda s: left_null(*_ints(s, (1,))),
    "RO": lambda s: right_null(*_ints(s, (1,))),
    "CH": lambda s: chain(*_ints(s, (1,))),
    "K1": lambda s: star(*_ints(s, (1,))),
    "Z": _Z,
    "LOO": lambda s: loo(*_ints(s, (4,))),
    "LORO": lambda s: loro(*_ints(s, (4,))),
    "OROP": lambda s: orop(*_ints(s, (1,))),
    "LOZ": lambda s: loz(*_ints(s, (1,))),
    "OG": _OG,
    "OO": _og_family(null),
    "ORO": lambda s: _oro(s),
    "OLO": _og_family(left_null),
    "OCH": _og_family(chain),
    "OZ": _og_family(cyclic),
    "OK": _og_family(star),
    "ident": lambda s: adjoin_identity(_table_arg(s.args[0])),
    "zero": lambda s: adjoin_zero(_table_arg(s.args[0])),
    "mutant": lambda s: mutant(_table_arg(s.args[0])),
    "op": lambda s: opposite(_table_arg(s.args[0])),
    "clone": lambda s: _clone(s, False),
    "iclone": lambda s: _clone(s, True),
    "prod": lambda s: direct_product(_table_arg(s.args[0]), _table_arg(s.args[1])),
    "stack": lambda s: stack(_table_arg(s.args[0]), _table_arg(s.args[1])),
    "twist": lambda s: twist(_table_arg(s.args[0]), _table_arg(s.args[1])),
    "unite": lambda s: unite(_table_arg(s.args[0]), _table_arg(s.args[1])),
    "semitwist": lambda s: semi_twist(s.args[0], _table_arg(s.args[1])),
    "semistack": _semistack,
    "roster": lambda s: _roster(s, False),
    "rhat": lambda s: _roster(s, True),
    "group": _group,
}


def construct(spec: FamilySpec | str) -> CayleyTable:
    """Compile a family spec (or its text form) to a validated table."""
    if isinstance(spec, str):
        text = spec
        spec = parse_spec(spec)
    else:
        text = str(spec)
    ctor = CONSTRUCTORS.get(spec.tag)
    if ctor is None:
        from .groups import GROUP_NAMES, group_table

        if spec.tag in GROUP_NAMES and not spec.args:
            return group_table(spec.tag)
        raise FamilyError(f"unknown constructor {spec.tag!r}")
    try:
        t = ctor(spec)
    except (TypeError, IndexError) as err:
        raise FamilyError(f"bad arguments for {spec.tag}: {err}") from None
    return t if t.name else t.named(text)
