import math

import pytest

import quandles as Q


def involutory_by_scan(q):
    """Independent implementation: (x>y)>y == x over all pairs."""
    return all(Q.apply(q, Q.apply(q, x, y), y) == x
               for x in q.elements() for y in q.elements())


class TestInvolutory:
    @pytest.mark.parametrize("n", range(3, 9))
    def test_dihedral_family(self, n):
        assert Q.is_involutory(Q.dihedral(n))

    def test_trivial(self):
        assert Q.is_involutory(Q.trivial(4))

    def test_conj_s3_is_not(self, battery):
        assert not Q.is_involutory(battery["conj_s3"])

    def test_agrees_with_direct_scan(self, battery):
        for name, q in battery.items():
            assert Q.is_involutory(q) == involutory_by_scan(q), name

    def test_rejects_unchecked_input(self):
        broken = Q.from_table(2, [[1, 2], [1, 2]])
        with pytest.raises(Q.NotAQuandleError):
            Q.is_involutory(broken)


class TestAbelian:
    def test_affine_is_abelian(self):
        g = Q.AbelianGroupSpec((5,))
        assert Q.is_abelian(Q.affine(g, Q.scalar_automorphism(g, 2)))

    def test_trivial(self):
        assert Q.is_abelian(Q.trivial(4))

    def test_conj_s3_is_not(self, battery):
        assert not Q.is_abelian(battery["conj_s3"])


class TestLeftDistributive:
    def test_dihedral_3(self):
        assert Q.is_left_distributive(Q.dihedral(3))

    def test_trivial(self):
        assert Q.is_left_distributive(Q.trivial(5))

    def test_abelian_implies_left_distributive(self, battery):
        for name, q in battery.items():
            if Q.is_abelian(q):
                assert Q.is_left_distributive(q), name


class TestConnected:
    @pytest.mark.parametrize("n", range(3, 10))
    def test_dihedral_iff_odd(self, n):
        assert Q.is_connected(Q.dihedral(n)) == (n % 2 == 1)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_trivial_iff_singleton(self, n):
        assert Q.is_connected(Q.trivial(n)) == (n == 1)

    def test_q1_orbits(self):
        assert not Q.is_connected(Q.Q1)
        assert Q.orbits(Q.Q1) == ((1,), (2,), (3,), (4, 7, 10), (5, 8, 11), (6, 9, 12))

    def test_agrees_with_orbit_count(self, battery):
        for name, q in battery.items():
            assert Q.is_connected(q) == (len(Q.orbits(q)) == 1), name


class TestCyclicType:
    def test_dihedral_3(self):
        assert Q.is_cyclic_type(Q.dihedral(3))

    def test_trivial_3(self):
        assert not Q.is_cyclic_type(Q.trivial(3))

    def test_order_1_rejected(self):
        with pytest.raises(ValueError):
            Q.is_cyclic_type(Q.trivial(1))

    def test_cyclic_type_implies_connected(self, battery):
        members = [q for q in battery.values() if q.order >= 2]
        members += list(Q.census(3)) + list(Q.census(4))
        seen_one = False
        for q in members:
            if Q.is_cyclic_type(q):
                seen_one = True
                assert Q.is_connected(q)
        assert seen_one


class TestConjugateIdentities:
    def test_hold_on_battery(self, battery):
        for name, q in battery.items():
            assert Q.conjugate_identities(q), name


class TestCentralizer:
    @pytest.mark.parametrize("a", [1, 2, 3, 4])
    def test_trivial_is_singleton(self, a):
        assert Q.centralizer(Q.trivial(4), a) == (a,)

    @pytest.mark.parametrize("a", [1, 2, 3])
    def test_dihedral3_is_everything(self, a):
        assert Q.centralizer(Q.dihedral(3), a) == (1, 2, 3)

    def test_q1_element_1(self):
        assert Q.centralizer(Q.Q1, 1) == (1,)

    def test_membership_is_symmetric(self, battery):
        for q in battery.values():
            for a in q.elements():
                for x in Q.centralizer(q, a):
                    assert a in Q.centralizer(q, x)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            Q.centralizer(Q.trivial(3), 4)


class TestAbelianGroupSpecs:
    def test_order_8_has_three_classes(self):
        specs = Q.abelian_group_specs(8)
        assert [s.cyclic_factors for s in specs] == [(8,), (2, 4), (2, 2, 2)]

    def test_order_12_invariant_chains(self):
        specs = Q.abelian_group_specs(12)
        assert [s.cyclic_factors for s in specs] == [(12,), (2, 6)]

    def test_order_1(self):
        assert [s.cyclic_factors for s in Q.abelian_group_specs(1)] == [()]


class TestEnumerateAutomorphisms:
    def test_cyclic_counts_euler_phi(self):
        for n, phi in ((2, 1), (3, 2), (4, 2), (5, 4), (6, 2), (12, 4)):
            g = Q.AbelianGroupSpec((n,))
            assert sum(1 for _ in Q.enumerate_automorphisms(g)) == phi, n

    def test_elementary_abelian_gl(self):
        g = Q.AbelianGroupSpec((2, 2))
        assert sum(1 for _ in Q.enumerate_automorphisms(g)) == 6  # |GL(2,2)|

    def test_images_rebuild_the_permutation(self):
        g = Q.AbelianGroupSpec((2, 4))
        for t, images in Q.enumerate_automorphisms(g):
            assert Q.automorphism_from_images(g, images) == t


class TestAlexanderRecognize:
    def test_trivial_4_recognized_by_identity(self):
        w = Q.alexander_recognize(Q.trivial(4))
        assert w is not None
        assert w.automorphism().is_identity()
        assert w.reproduces(Q.trivial(4))

    def test_dihedral_3_recognized_by_negation(self):
        w = Q.alexander_recognize(Q.dihedral(3))
        assert w.group.cyclic_factors == (3,)
        assert w.automorphism() == Q.negation_automorphism(w.group)

    def test_round_trip(self):
        g = Q.AbelianGroupSpec((4,))
        q = Q.affine(g, Q.scalar_automorphism(g, 3))
        w = Q.alexander_recognize(q)
        assert w is not None and w.reproduces(q)

    def test_non_affine_returns_none(self):
        # unequal orbit sizes rule out any affine presentation
        q = Q.swap_rule(0, 1).to_quandle()
        assert Q.alexander_recognize(q) is None

    def test_budget_exceeded_is_an_error(self):
        with pytest.raises(Q.BudgetExceededError):
            Q.alexander_recognize(Q.trivial(16))
        assert Q.alexander_recognize(Q.trivial(16), max_order=16) is not None

    def test_recognized_implies_abelian(self):
        for q in (Q.trivial(4), Q.dihedral(5), Q.TABLE1):
            if Q.alexander_recognize(q) is not None:
                assert Q.is_abelian(q)


class TestLemmaSumCheck:
    def test_z12_times_5(self):
        g = Q.AbelianGroupSpec((12,))
        assert Q.lemma_sum_check(g, Q.scalar_automorphism(g, 5))

    def test_z3_negation(self):
        g = Q.AbelianGroupSpec((3,))
        assert Q.lemma_sum_check(g, Q.negation_automorphism(g))

    def test_z7_times_3(self):
        g = Q.AbelianGroupSpec((7,))
        assert Q.lemma_sum_check(g, Q.scalar_automorphism(g, 3))

    def test_all_units_up_to_12(self):
        for n in range(2, 13):
            g = Q.AbelianGroupSpec((n,))
            for r in range(1, n + 1):
                if math.gcd(r, n) == 1:
                    assert Q.lemma_sum_check(g, Q.scalar_automorphism(g, r)), (n, r)

    def test_invalid_automorphism_rejected(self):
        g = Q.AbelianGroupSpec((4,))
        with pytest.raises(ValueError, match="not additive"):
            Q.lemma_sum_check(g, Q.Permutation((1, 3, 2, 4)))


class TestAffineBattery:
    def test_recognition_round_trips_up_to_8(self):
        for n in range(1, 9):
            for g in Q.abelian_group_specs(n):
                for t, _ in Q.enumerate_automorphisms(g):
                    q = Q.affine(g, t)
                    w = Q.alexander_recognize(q)
                    assert w is not None, (g.cyclic_factors, t.images)
                    assert w.reproduces(q)
                    assert Q.is_abelian(q)
