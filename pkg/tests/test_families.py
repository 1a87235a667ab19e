from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from semischur.census import census, known_rows
from semischur.families import (
    FamilyError,
    adjoin_identity,
    adjoin_zero,
    check_roster,
    construct,
    og,
    parse_spec,
    roster,
    stack,
    twist,
    unite,
)
from semischur.partitions import bell
from semischur.schur import omega
from semischur.table import CayleyTable, identity_of, is_group, zero_of

from strategies import small_semigroups


def test_spec_parser_nesting_and_keywords():
    s = parse_spec("roster(K1(2), x=0, H={1}, K={2})")
    assert s.tag == "roster"
    assert s.args[0].tag == "K1" and s.args[0].args == (2,)
    assert dict(s.kwargs) == {"x": 0, "H": frozenset({1}), "K": frozenset({2})}
    assert str(parse_spec("stack(Z(2),Z(3))")) == "stack(Z(2), Z(3))"


@pytest.mark.parametrize("bad", ["LO(", "LO(-1)", "nope(2)", "LO(3)+1", "x.y(2)", "LO(1,2,3)"])
def test_spec_errors(bad):
    with pytest.raises(FamilyError):
        construct(bad)


def test_defining_identities_of_atomic_families():
    n = 4
    lo, ro, o, ch, k = (construct(s) for s in (f"LO({n})", f"RO({n})", f"O({n})", f"CH({n})", f"K1({n})"))
    for x in range(n):
        for y in range(n):
            assert lo.mul(x, y) == x and ro.mul(x, y) == y and o.mul(x, y) == 0
            assert ch.mul(x, y) == min(x, y)
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            assert k.mul(x, y) == (x if x == y else 0)
    assert is_group(construct("Z(5)"))


@pytest.mark.parametrize("m, p", [(1, 3), (2, 1), (3, 2), (4, 3)])
def test_monogenic_index_and_period(m, p):
    t = construct(f"Z({m},{p})")
    assert t.order == m + p - 1
    # powers of the generator: z^k is element k-1
    z = 0
    powers = [z]
    for _ in range(2 * (m + p)):
        powers.append(t.mul(powers[-1], z))
    assert powers[m - 1] == powers[m + p - 1]
    assert len(set(powers[: m + p - 1])) == m + p - 1


def test_og_defining_identities():
    g = construct("LO(2)")
    t = og(g, 3)
    for x in range(3):
        for h in range(3, 5):
            assert t.mul(x, h) == 0 and t.mul(h, x) == x
    assert zero_of(t) == 0


def test_stack_twist_unite_layouts():
    g, h = construct("O(2)"), construct("K1(1)")
    s = stack(g, h)
    assert all(s.mul(a, b) == a and s.mul(b, a) == a for a in range(2) for b in range(2, 4))
    t = twist(g, h)
    assert all(t.mul(a, b) == 0 and t.mul(b, a) == 2 for a in range(2) for b in range(2, 4))
    u = unite(g, h)
    assert u.order == 3 and zero_of(u) == 0


def test_extensions_place_new_elements():
    g = construct("LO(2)")
    assert identity_of(adjoin_identity(g)) == 2
    assert zero_of(adjoin_zero(g)) == 0


def test_roster_condition_is_checked():
    with pytest.raises(FamilyError, match="stabilizer"):
        check_roster(construct("Z(2)"), 0, {1}, set())
    t = roster(construct("K1(2)"), 0, {1}, {2})
    assert isinstance(t, CayleyTable) and t.order == 4


@given(small_semigroups(max_n=3))
def test_extensions_preserve_omega(t):
    w = omega(t)
    assert omega(adjoin_identity(t)) == w == omega(adjoin_zero(t))


@given(small_semigroups(max_n=3), small_semigroups(max_n=3))
def test_stack_multiplies_omega(g, h):
    assert omega(stack(g, h)) == omega(g) * omega(h)


@pytest.mark.parametrize("n", range(1, 6))
def test_star_and_null_closed_forms(n):
    assert omega(construct(f"K1({n})")) == bell(n)
    assert omega(construct(f"O({n})")) == bell(n - 1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_listed_family_specs_name_their_rows(n):
    from semischur.census import forsythe_key

    index = {r.table.flat: r.forsythe_index for r in census(n)}
    for k in known_rows(n):
        assert index[forsythe_key(construct(k.spec))] == k.forsythe, k.spec


def test_constructed_tables_are_named():
    assert construct("LO(3)").name
    assert construct("group(S3)").order == 6
    assert construct("S3").order == 6


@given(st.integers(1, 4), st.integers(1, 3))
def test_oro_closed_form(m, n):
    assert omega(construct(f"ORO({m},{n})")) == bell(m + n - 1)
