"""Cut completions, way-below, ideals and the continuity checks."""

import random

import pytest

from ordkit import (
    CutLattice,
    FinitePoset,
    NotALatticeError,
    all_cuts_bruteforce,
    enumerate_posets,
    enumerate_preorders,
    frink_ideals,
    ideal_way_below,
    ideal_way_below_matrix,
    is_complete_lattice,
    is_continuous_lattice,
    is_precontinuous,
    join_of,
    macneille,
    meet_of,
    precontinuity_completion_check,
    quotient,
    transitive_reflexive_closure,
    way_below,
    way_below_matrix,
)


def poset(n, pairs):
    pre = transitive_reflexive_closure(n, pairs)
    return FinitePoset(n, pre.up)


CHAIN3 = poset(3, [(0, 1), (1, 2)])
VEE = poset(3, [(0, 2), (1, 2)])
ANTICHAIN2 = poset(2, [])
DIAMOND = poset(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


def test_meet_and_join():
    assert meet_of(DIAMOND, 0b0110) == 0
    assert join_of(DIAMOND, 0b0110) == 3
    assert join_of(DIAMOND, 0) == 0   # least upper bound of nothing is bottom
    assert meet_of(DIAMOND, 0) == 3
    assert join_of(ANTICHAIN2, 0b11) is None
    assert meet_of(VEE, 0b011) is None


def test_is_complete_lattice():
    assert is_complete_lattice(DIAMOND)
    assert is_complete_lattice(poset(1, []))
    assert not is_complete_lattice(ANTICHAIN2)   # no top, no bottom
    assert not is_complete_lattice(VEE)          # no bottom
    assert not is_complete_lattice(FinitePoset(0, ()))
    total = transitive_reflexive_closure(2, [(0, 1), (1, 0)])
    assert not is_complete_lattice(total)        # not antisymmetric


def test_chain_completion():
    lat = macneille(CHAIN3)
    assert lat.cuts == (0b001, 0b011, 0b111)
    assert lat.embed == (0, 1, 2)
    assert lat.order.up == (7, 6, 4)


def test_antichain_completion_is_a_diamond():
    lat = macneille(ANTICHAIN2)
    assert lat.cuts == (0b00, 0b01, 0b10, 0b11)
    assert lat.embed == (1, 2)
    assert lat.order.up == (0b1111, 0b1010, 0b1100, 0b1000)
    assert lat.meet(1, 2) == 0
    assert lat.join(1, 2) == 3
    assert lat.index_of(0b10) == 2


def test_vee_completion():
    # the empty cut appears because the two minimal elements meet nowhere
    lat = macneille(VEE)
    assert lat.cuts == (0b000, 0b001, 0b010, 0b111)
    assert lat.embed == (1, 2, 3)


def test_empty_and_singleton_completions():
    assert macneille(FinitePoset(0, ())).cuts == (0,)
    lat = macneille(poset(1, []))
    assert lat.cuts == (1,)
    assert lat.embed == (0,)


def test_completion_matches_bruteforce_exhaustively():
    for n in range(5):
        for p in enumerate_posets(n):
            lat = macneille(p)
            assert set(lat.cuts) == all_cuts_bruteforce(p)
            assert is_complete_lattice(lat.order)


def test_completion_matches_bruteforce_randomized():
    rng = random.Random(7011)
    for _ in range(200):
        n = rng.randint(5, 7)
        pairs = [
            (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4
        ]
        p = poset(n, pairs)
        assert set(macneille(p).cuts) == all_cuts_bruteforce(p)


def test_cutlattice_constructor_rejects_bad_families():
    with pytest.raises(ValueError):
        CutLattice(CHAIN3, (0b001, 0b111))         # down set of 1 missing
    with pytest.raises(ValueError):
        CutLattice(CHAIN3, (0b001, 0b011))         # carrier missing
    with pytest.raises(ValueError):
        CutLattice(CHAIN3, (0b001, 0b010, 0b011, 0b111))  # {1} is not a cut
    with pytest.raises(ValueError):
        CutLattice(ANTICHAIN2, (0b01, 0b10, 0b11))  # not meet closed


def test_way_below_needs_a_complete_lattice():
    with pytest.raises(NotALatticeError):
        way_below_matrix(ANTICHAIN2)
    with pytest.raises(NotALatticeError):
        is_continuous_lattice(VEE)


def test_way_below_on_the_diamond():
    assert way_below_matrix(DIAMOND) == DIAMOND.up
    assert way_below_matrix(DIAMOND, brute=True) == DIAMOND.up
    assert way_below(DIAMOND, 0, 3)
    assert not way_below(DIAMOND, 3, 0, brute=True)


def test_way_below_routes_agree_on_all_small_completions():
    for n in range(5):
        for p in enumerate_posets(n):
            lat = macneille(p).order
            assert way_below_matrix(lat, brute=True) == way_below_matrix(lat)
            assert is_continuous_lattice(lat)
            assert is_continuous_lattice(lat, brute=True)


def test_frink_ideals_chain():
    assert frink_ideals(poset(2, [(0, 1)])) == (0b01, 0b11)
    assert frink_ideals(poset(2, [(0, 1)]), allow_empty=False) == (0b01, 0b11)


def test_frink_ideals_antichain():
    # no bottom, so the empty set is a legitimate ideal here
    assert frink_ideals(ANTICHAIN2) == (0b00, 0b01, 0b10, 0b11)
    assert frink_ideals(ANTICHAIN2, allow_empty=False) == (0b01, 0b10, 0b11)


def test_frink_ideals_with_a_bottom():
    # a bottom element forces itself into every ideal, the empty set drops out
    assert frink_ideals(CHAIN3) == (0b001, 0b011, 0b111)
    assert frink_ideals(CHAIN3, allow_empty=True) == frink_ideals(
        CHAIN3, allow_empty=False
    )


def test_frink_ideals_are_down_sets():
    for n in range(5):
        for p in enumerate_posets(n):
            for i in frink_ideals(p):
                assert p.down_set(i) == i


def test_ideal_way_below_collapses_to_the_order():
    for n in range(5):
        for p in enumerate_posets(n):
            assert ideal_way_below_matrix(p, brute=True) == p.up
            assert ideal_way_below_matrix(p) == p.up
    assert ideal_way_below(CHAIN3, 0, 2, brute=True)
    assert not ideal_way_below(CHAIN3, 2, 0, brute=True)


def test_precontinuity_exhaustive():
    for n in range(5):
        for q in enumerate_preorders(n):
            assert is_precontinuous(q)
            assert is_precontinuous(q, brute=True)
            assert precontinuity_completion_check(q)


def test_precontinuity_sees_through_the_quotient():
    q = transitive_reflexive_closure(4, [(0, 1), (1, 0), (1, 2), (2, 3)])
    assert quotient(q).target.n == 3
    assert is_precontinuous(q)
    assert precontinuity_completion_check(q)


def test_completion_of_a_random_poset_embeds_it():
    rng = random.Random(3350)
    for _ in range(100):
        n = rng.randint(1, 6)
        pairs = [
            (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4
        ]
        p = poset(n, pairs)
        lat = macneille(p)
        for x in range(n):
            for y in range(n):
                assert p.leq(x, y) == lat.order.leq(lat.embed[x], lat.embed[y])
