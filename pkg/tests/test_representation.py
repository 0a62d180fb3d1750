"""Numeric families, their induced preorders and the completion pipeline."""

import random
from fractions import Fraction

import pytest

from ordkit import (
    FinitePoset,
    NotClassConstantError,
    cone_invariance_check,
    converse_completion_witness,
    enumerate_posets,
    enumerate_preorders,
    grid_family,
    is_multi_utility,
    is_rp_multi_utility,
    is_rp_utility,
    is_separating,
    lattice_closure,
    lattice_interpolate,
    lift_through_quotient,
    preorder_from_family,
    push_to_quotient,
    quotient,
    representation_roundtrip,
    rp_family_from_linear_extensions,
    scott_omega_rp_family,
    sup_norm_distance,
    threshold_topologies,
    transitive_reflexive_closure,
)

F = Fraction


def poset(n, pairs):
    pre = transitive_reflexive_closure(n, pairs)
    return FinitePoset(n, pre.up)


CHAIN3 = poset(3, [(0, 1), (1, 2)])
ANTICHAIN2 = poset(2, [])


def test_sup_norm_distance():
    assert sup_norm_distance((F(0), F(1)), (F(1, 6), F(1))) == F(1, 6)
    assert sup_norm_distance((), ()) == 0
    with pytest.raises(ValueError):
        sup_norm_distance((F(0),), (F(0), F(1)))


def test_preorder_from_family():
    fam = ((F(0), F(1, 2), F(1)),)
    assert preorder_from_family(3, fam) == CHAIN3
    # the empty family cannot tell anything apart
    assert preorder_from_family(2, ()).up == (0b11, 0b11)
    with pytest.raises(ValueError):
        preorder_from_family(2, ((F(0),),))


def test_multi_utility_and_separation():
    fam = ((F(0), F(1)), (F(1), F(0)))
    assert is_multi_utility(fam, ANTICHAIN2)
    assert is_separating(fam, ANTICHAIN2)
    assert not is_multi_utility(((F(0), F(1)),), ANTICHAIN2)
    assert not is_separating(((F(0), F(0)),), ANTICHAIN2)


def test_rp_utility():
    assert is_rp_utility((F(0), F(1, 2), F(1)), CHAIN3)
    # monotone but flat on a strict pair
    assert not is_rp_utility((F(0), F(0), F(1)), CHAIN3)
    assert is_rp_utility((F(1, 3), F(1, 3)), ANTICHAIN2)
    assert is_rp_multi_utility(((F(0), F(1, 2), F(1)),), CHAIN3)


def test_rp_family_from_linear_extensions():
    assert rp_family_from_linear_extensions(CHAIN3) == ((F(0), F(1, 2), F(1)),)
    assert rp_family_from_linear_extensions(ANTICHAIN2) == (
        (F(0), F(1)),
        (F(1), F(0)),
    )
    assert rp_family_from_linear_extensions(poset(1, [])) == ((F(0),),)
    assert rp_family_from_linear_extensions(FinitePoset(0, ())) == ((),)


def test_rp_family_represents_every_small_poset():
    for n in range(5):
        for p in enumerate_posets(n):
            fam = rp_family_from_linear_extensions(p)
            assert is_rp_multi_utility(fam, p)


def test_lattice_closure():
    fam = ((F(0), F(1)), (F(1), F(0)))
    assert lattice_closure(fam) == (
        (F(0), F(0)),
        (F(0), F(1)),
        (F(1), F(0)),
        (F(1), F(1)),
    )
    assert lattice_closure(()) == ()
    single = ((F(1, 2), F(1, 3)),)
    assert lattice_closure(single) == single


def test_cone_invariance():
    fam = rp_family_from_linear_extensions(CHAIN3)
    assert cone_invariance_check(3, fam)
    fam2 = rp_family_from_linear_extensions(ANTICHAIN2)
    assert cone_invariance_check(2, fam2)


class TestInterpolation:
    def test_member_is_found(self):
        closed = lattice_closure(((F(0), F(1)), (F(1), F(0))))
        got, fail = lattice_interpolate((F(0), F(1)), closed)
        assert got == (F(0), F(1))
        assert fail is None
        got, fail = lattice_interpolate((F(1), F(1)), closed)
        assert got == (F(1), F(1))

    def test_missing_pair_is_reported(self):
        fam = ((F(0), F(0)),)
        got, fail = lattice_interpolate((F(0), F(1)), fam)
        assert got is None
        assert fail == (0, 1)
        # the reported pair really has no two-point witness
        assert not any(f[0] == F(0) and f[1] == F(1) for f in fam)

    def test_needs_lattice_closed_family(self):
        fam = ((F(0), F(1)), (F(1), F(0)))  # closure adds the constants
        with pytest.raises(ValueError):
            lattice_interpolate((F(0), F(1)), fam)
        got, _ = lattice_interpolate((F(0), F(1)), fam, validate=False)
        assert got == (F(0), F(1))

    def test_empty_carrier(self):
        assert lattice_interpolate((), ()) == ((), None)

    def test_pairwise_matching_suffices_randomized(self):
        """Whenever every pair of points has a witnessing member, the
        function itself is in the family."""
        rng = random.Random(4812)
        values = (F(0), F(1, 2), F(1))
        for _ in range(120):
            n = rng.randint(1, 3)
            gens = [
                tuple(rng.choice(values) for _ in range(n))
                for _ in range(rng.randint(1, 3))
            ]
            closed = lattice_closure(gens)
            phi = tuple(rng.choice(values) for _ in range(n))
            got, fail = lattice_interpolate(phi, closed, validate=False)
            if got is not None:
                assert got == phi
                assert phi in closed
                assert sup_norm_distance(got, phi) == 0
            else:
                x, y = fail
                assert not any(
                    f[x] == phi[x] and f[y] == phi[y] for f in closed
                )


class TestGridFamily:
    def test_chain_counts(self):
        chain2 = poset(2, [(0, 1)])
        assert grid_family(chain2, 1) == (
            (F(0), F(0)),
            (F(0), F(1)),
            (F(1), F(1)),
        )
        assert grid_family(chain2, 1, strict=True) == ((F(0), F(1)),)

    def test_strict_needs_enough_values(self):
        assert grid_family(CHAIN3, 1, strict=True) == ()
        assert len(grid_family(CHAIN3, 2, strict=True)) == 1

    def test_equivalent_points_share_values(self):
        q = transitive_reflexive_closure(2, [(0, 1), (1, 0)])
        fam = grid_family(q, 1)
        assert fam == ((F(0), F(0)), (F(1), F(1)))

    def test_rejects_degenerate_grid(self):
        with pytest.raises(ValueError):
            grid_family(CHAIN3, 0)

    def test_members_are_monotone(self):
        for p in enumerate_posets(3):
            for f in grid_family(p, 2):
                for x, y in p.pairs():
                    assert f[x] <= f[y]
            for f in grid_family(p, 3, strict=True):
                assert is_rp_utility(f, p)


def test_push_and_lift():
    q = transitive_reflexive_closure(3, [(0, 1), (1, 0), (1, 2)])
    qm = quotient(q)
    assert push_to_quotient(qm, (F(0), F(0), F(1))) == (F(0), F(1))
    assert lift_through_quotient(qm, (F(0), F(1))) == (F(0), F(0), F(1))
    with pytest.raises(NotClassConstantError):
        push_to_quotient(qm, (F(0), F(1), F(1)))
    with pytest.raises(ValueError):
        push_to_quotient(qm, (F(0),))
    with pytest.raises(ValueError):
        lift_through_quotient(qm, (F(0),))


def test_scott_omega_family_on_the_antichain():
    fam = scott_omega_rp_family(ANTICHAIN2)
    assert fam == ((F(1, 3), F(2, 3)), (F(2, 3), F(1, 3)))
    assert is_rp_multi_utility(fam, ANTICHAIN2)


def test_scott_omega_family_on_the_chain():
    fam = scott_omega_rp_family(CHAIN3)
    assert is_rp_multi_utility(fam, CHAIN3)
    assert len(fam) == 1


def test_scott_omega_family_exhaustive():
    for n in range(4):
        for q in enumerate_preorders(n):
            fam = scott_omega_rp_family(q)
            assert is_rp_multi_utility(fam, q)
            for f in fam:
                for x in range(n):
                    for y in range(n):
                        if q.equiv(x, y):
                            assert f[x] == f[y]


def test_converse_completion_witness():
    fam = scott_omega_rp_family(ANTICHAIN2)
    assert converse_completion_witness(ANTICHAIN2, fam) is True
    with pytest.raises(ValueError):
        converse_completion_witness(ANTICHAIN2, ((F(0), F(0)),))


def test_threshold_topologies():
    fam = ((F(0), F(1, 2), F(1)),)
    tu, tl = threshold_topologies(3, fam)
    assert tu.opens == (0, 0b100, 0b110, 0b111)
    assert tl.opens == (0, 0b001, 0b011, 0b111)


def test_roundtrip_report_fields():
    report = representation_roundtrip(CHAIN3)
    assert report.separating
    assert report.lattice_closed
    assert report.cone_invariant
    assert report.closure_invariant
    assert report.product_closed
    assert report.threshold_certified
    assert report.reverse_separating
    assert report.reverse_closure_invariant
    assert report.all_hold()


def test_roundtrip_exhaustive_small():
    for n in range(4):
        for p in enumerate_posets(n):
            assert representation_roundtrip(p).all_hold()
