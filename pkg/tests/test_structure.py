from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from semischur.census import census
from semischur.families import construct
from semischur.partitions import Partition, is_refinement
from semischur.schur import enumerate_schur_rings
from semischur.structure import (
    NotNilpotentError,
    decomposition_profile,
    imposition_base,
    indecomposables,
    indivisible_idempotents,
    is_three_nilpotent,
    riisr_enumerate_3nilpotent,
)
from semischur.table import is_commutative, is_subsemigroup, relabel

from strategies import small_semigroups


def test_profile_of_monogenic_nilpotent():
    # Z_{4,1} with zero z^4: layers {z}, {z^2}, {z^3}
    t = construct("Z(4,1)")
    prof = decomposition_profile(t)
    assert [sorted(layer) for layer in prof.layers] == [[0], [1], [2]]
    assert prof.ginfty == {3}
    assert prof.nilpotency_class == 4
    assert "nilpotency: 4" in prof.report()


def test_profile_of_nilpotent_block():
    t = construct("O(4,2,123)")
    prof = decomposition_profile(t)
    assert prof.layers == ({4, 5}, {1, 2, 3}) and prof.ginfty == {0}
    assert str(imposition_base(t)) == "0|1+2+3|4+5"
    rings = [str(p) for p in riisr_enumerate_3nilpotent(t).rings]
    assert rings == ["0|1+2|3|4+5", "0|1|2|3|4+5", "0|1|2|3|4|5"]


def test_profile_of_monogenic_index_three():
    prof = decomposition_profile(construct("Z(3,1)"))
    assert prof.layers == ({0}, {1}) and prof.ginfty == {2}


def test_groups_and_monoids_have_no_indecomposables():
    prof = decomposition_profile(construct("Z(5)"))
    assert prof.layers == () and prof.ginfty == set(range(5))
    assert imposition_base(construct("Z(5)")) == Partition.indiscrete(5)
    assert indecomposables(construct("ident(O(3))")) == frozenset()
    assert str(imposition_base(construct("O(4)"))) == "0|1+2+3"


def test_profile_of_a_band():
    prof = decomposition_profile(construct("LO(3)"))
    assert prof.layers == () and prof.ginfty == {0, 1, 2} and prof.nilpotency_class is None


def test_indecomposables_and_indivisible_idempotents():
    assert indecomposables(construct("O(3)")) == {1, 2}
    assert indivisible_idempotents(construct("K1(3)")) == {1, 2, 3}
    assert indivisible_idempotents(construct("LO(3)")) == frozenset()


def test_adjoined_identity_is_indivisible():
    t = construct("ident(O(2))")
    assert indivisible_idempotents(t) == {2}


def test_orop_has_two_indivisible_idempotents():
    # with beta*alpha = zero both alpha and beta factor only as their own squares
    t = construct("OROP(2)")
    alpha, beta = 2, 3
    assert t.mul(alpha, beta) == 1 and t.mul(beta, alpha) == 0
    assert indivisible_idempotents(t) == {alpha, beta}


def test_orop_is_the_noncommutative_counterexample():
    t = construct("OROP(2)")
    merged = [p for p in enumerate_schur_rings(t).rings if p.class_of(2) == (2, 3)]
    assert merged and not is_commutative(t)


@given(small_semigroups(max_n=4))
def test_power_ideals_are_unions_of_classes(t):
    prof = decomposition_profile(t)
    for p in enumerate_schur_rings(t).rings:
        for gk in prof.powers:
            assert p.is_union_of_classes(gk)
            assert all(t.mul(x, y) in gk and t.mul(y, x) in gk for x in gk for y in range(t.order))


@given(small_semigroups(max_n=4))
def test_commutative_indivisible_idempotents_are_unions_of_classes(t):
    if not is_commutative(t):
        return
    ind = indivisible_idempotents(t)
    for p in enumerate_schur_rings(t).rings:
        assert p.is_union_of_classes(ind)


@given(small_semigroups(max_n=4))
def test_every_ring_refines_the_imposition_base(t):
    base = imposition_base(t)
    for p in enumerate_schur_rings(t, strategy="naive").rings:
        assert is_refinement(p, base)


@given(small_semigroups(max_n=4))
def test_singleton_elements_form_a_subsemigroup(t):
    for p in enumerate_schur_rings(t).rings:
        s = p.singletons()
        if s:
            assert is_subsemigroup(t, s)


THREE_NILPOTENT = [r.table for n in range(1, 5) for r in census(n) if is_three_nilpotent(r.table)]


@given(st.sampled_from(THREE_NILPOTENT), st.data())
def test_riisr_matches_generic_enumeration(t, data):
    t = relabel(t, data.draw(st.permutations(range(t.order))))
    assert riisr_enumerate_3nilpotent(t).rings == enumerate_schur_rings(t, strategy="naive").rings


@pytest.mark.parametrize("n", [3, 4, 5])
def test_riisr_on_every_three_nilpotent_census_table(n):
    hits = 0
    for r in census(n):
        if is_three_nilpotent(r.table):
            hits += 1
            assert riisr_enumerate_3nilpotent(r.table).rings == enumerate_schur_rings(r.table, strategy="naive").rings
    assert hits > 0


def test_riisr_rejects_other_tables():
    with pytest.raises(NotNilpotentError):
        riisr_enumerate_3nilpotent(construct("LO(2)"))


@pytest.mark.slow
def test_order_six_rings_refine_base_and_match_riisr():
    for r in census(6):
        t = r.table
        base = imposition_base(t)
        unconstrained = enumerate_schur_rings(t, base=Partition.indiscrete(6)).rings
        assert all(is_refinement(p, base) for p in unconstrained)
        if is_three_nilpotent(t):
            assert riisr_enumerate_3nilpotent(t).rings == unconstrained
