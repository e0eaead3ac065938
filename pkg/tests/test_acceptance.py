"""Acceptance suite: one test per criterion, each printing a pass/fail line
and enforcing its runtime bound. Run with -s to see the lines as they pass.

All expected values are exact; the independent oracles (3^9 scan,
all-bijections isomorphism, labeled-table enumeration) live inline.
"""

import math
import time
from contextlib import contextmanager
from itertools import product as cart

import quandles as Q
from quandles.cli import main

from conftest import brute_isomorphic


@contextmanager
def criterion(number, title, limit_seconds):
    start = time.perf_counter()
    try:
        yield
    except Exception:
        print(f"criterion {number} [{title}]: FAIL")
        raise
    elapsed = time.perf_counter() - start
    assert elapsed < limit_seconds, f"criterion {number} took {elapsed:.2f}s, limit {limit_seconds}s"
    print(f"criterion {number} [{title}]: PASS ({elapsed:.2f}s)")


def test_c1_table_fidelity(capsys):
    with criterion(1, "table fidelity", 1.0):
        assert main(["check", "paper:table1"]) == 0
        capsys.readouterr()
        assert Q.apply(Q.Q1, 4, 7) == 10
        spot_cells = [
            (Q.TABLE1, 1, 1, 1),
            (Q.TABLE1, 3, 2, 4),
            (Q.TABLE1, 4, 4, 4),
            (Q.Q1, 7, 10, 4),
            (Q.Q1, 12, 6, 9),
            (Q.Q1, 6, 9, 12),
            (Q.Q2, 1, 3, 2),
            (Q.Q2, 4, 9, 11),
            (Q.Q2, 8, 6, 10),
            (Q.Q2, 11, 12, 10),
        ]
        assert len(spot_cells) >= 9
        for q, x, y, expected in spot_cells:
            assert Q.apply(q, x, y) == expected, (q.name, x, y)


def test_c2_inner_structure_reproduction():
    with criterion(2, "inner structure reproduction", 1.0):
        st = Q.inner_structure(Q.Q1)
        expected_cycles = (
            [()] * 3
            + [((7, 10), (8, 11), (9, 12))] * 3
            + [((4, 10), (5, 11), (6, 12))] * 3
            + [((4, 7), (5, 8), (6, 9))] * 3
        )
        for y, want in enumerate(expected_cycles, start=1):
            assert st.translations[y - 1].cycles() == want, f"R({y})"
        assert st.count_of_order[2] == 9
        assert Q.inner_structure(Q.Q2).count_of_order[2] == 10


def test_c3_non_isomorphism_certificate():
    with criterion(3, "non-isomorphism certificate", 1.0):
        res = Q.are_isomorphic(Q.Q1, Q.Q2)
        assert not res.isomorphic
        assert res.certificate == "generator order spectrum: {1:3,2:9} vs {1:2,2:10}"


def test_c4_literal_rule_audit():
    with criterion(4, "literal case-table audit", 1.0):
        report_a = Q.validate_rule(Q.literal_rule_A())
        assert not report_a.right_invertibility.ok
        assert report_a.right_invertibility.witnesses == ((2, 0, 2),)
        assert Q.literal_rule_A().entry(0, 2) == Q.literal_rule_A().entry(2, 2) == 2

        report_b = Q.validate_rule(Q.literal_rule_B())
        assert not report_b.idempotency.ok
        assert report_b.idempotency.witnesses == (2,)
        assert Q.literal_rule_B().entry(2, 2) == 1


def test_c5_repair_completeness():
    with criterion(5, "phase rule repair completeness", 5.0):
        rules = Q.enumerate_phase_rules()
        assert len(rules) == 5
        classes = Q.classify_family([r.to_quandle() for r in rules])
        assert len(classes) == 3

        # independent oracle: all 3^9 candidate tables through the axiom checker
        valid = set()
        for combo in cart(range(3), repeat=9):
            rows = (combo[0:3], combo[3:6], combo[6:9])
            q = Q.Quandle(3, tuple(tuple(v + 1 for v in r) for r in rows))
            if Q.check_axioms(q, witness_cap=1).overall:
                valid.add(rows)
        assert valid == {r.f for r in rules}


def test_c6_reconciliation():
    with criterion(6, "decomposition reconciliation", 1.0):
        base1, rule1 = Q.decompose3(Q.Q1, "xa")
        assert base1 == Q.BASE_B and rule1 == Q.trivial_rule()
        base2, rule2 = Q.decompose3(Q.Q2, "xa")
        assert base2 == Q.BASE_B and rule2 == Q.swap_rule(0, 1)
        assert rule2.name == "swap01"
        assert Q.emit_table(Q.product3(Q.BASE_B, rule1, "xa")) == Q.emit_table(Q.Q1)
        assert Q.emit_table(Q.product3(Q.BASE_B, rule2, "xa")) == Q.emit_table(Q.Q2)


def test_c7_transfer_audit_battery():
    with criterion(7, "transfer audit battery", 10.0):
        bases = [Q.trivial(3), Q.dihedral(3), Q.dihedral(4), Q.TABLE1, Q.BASE_B]
        rules = Q.enumerate_phase_rules()
        connectivity_disagreements = 0
        for base in bases:
            for rule in rules:
                report = Q.audit_transfer(base, rule)
                assert Q.check_axioms(report.product, witness_cap=1).overall
                for rec in report.records:
                    assert rec.claim == "iff"
                    assert rec.agrees in (True, False)
                if report.record("connected").agrees is False:
                    connectivity_disagreements += 1
        assert connectivity_disagreements >= 1
        # the named disagreement: connected base, phase-preserving rule
        rec = Q.audit_transfer(Q.dihedral(3), Q.trivial_rule()).record("connected")
        assert rec.holds_on_base is True and rec.holds_on_product is False


def test_c8_preliminaries_fact_suite():
    with criterion(8, "preliminaries fact suite", 60.0):
        for n in range(3, 10):
            assert Q.is_connected(Q.dihedral(n)) == (n % 2 == 1), n
        for n in range(1, 7):
            assert Q.is_connected(Q.trivial(n)) == (n == 1), n

        for n in range(1, 13):
            g = Q.AbelianGroupSpec((n,)) if n > 1 else Q.AbelianGroupSpec(())
            for r in range(1, n + 1):
                if math.gcd(r, n) == 1:
                    assert Q.lemma_sum_check(g, Q.scalar_automorphism(g, r)), (n, r)

        for n in range(1, 9):
            for g in Q.abelian_group_specs(n):
                for t, _ in Q.enumerate_automorphisms(g):
                    q = Q.affine(g, t)
                    w = Q.alexander_recognize(q)
                    assert w is not None, (g.cyclic_factors, t.images)
                    assert w.reproduces(q)
                    assert Q.is_abelian(q)


def test_c9_classifier_soundness():
    with criterion(9, "classifier soundness", 60.0):
        assert len(Q.census(3)) == 3
        for n in (1, 2, 3, 4):
            reps = Q.census(n)
            for i in range(len(reps)):
                for j in range(i, len(reps)):
                    ours = Q.are_isomorphic(reps[i], reps[j])
                    assert ours.isomorphic == brute_isomorphic(reps[i], reps[j]), (n, i, j)
                    if ours.isomorphic:
                        # soundness: the returned mapping is a real isomorphism
                        phi = ours.mapping
                        assert all(
                            phi(Q.apply(reps[i], x, y)) == Q.apply(reps[j], phi(x), phi(y))
                            for x in reps[i].elements() for y in reps[i].elements())
