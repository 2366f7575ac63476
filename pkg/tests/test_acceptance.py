"""Acceptance gate: one test per criterion, each with its runtime bound.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""
import time

from schurkit import expansion
from schurkit.expansion import SchurExpansion, diff_schur_positive, lr_expand, multiply, omega, ribbon_expand
from schurkit.posets import poset, support_classes
from schurkit.shapes import (
    SkewShape,
    cols_of,
    descent_positions,
    dominance_leq,
    enumerate_compositions,
    enumerate_partitions,
    enumerate_skew_shapes,
    ribbon,
    rotate180,
    rows_of,
    transpose,
    transpose_skew,
)
from schurkit.tableaux import Filling, descent_set
from schurkit.theorems import (
    construct_witness_syt,
    enumerate_equitable,
    has_full_support,
    verify_conjecture_max,
    verify_theorem_main,
    verify_theorem_support,
)


def fresh():
    expansion.clear_memo()
    return time.perf_counter()


def E(d):
    return SchurExpansion.from_dict(d)


def test_criterion_1_fixture_expansions(criterion):
    done = criterion(1, "fixture expansions")
    t0 = fresh()
    assert lr_expand(SkewShape((4, 4, 3), (2,))) == E({(4, 4, 1): 1, (4, 3, 2): 1})
    assert lr_expand(SkewShape((3, 3, 2, 1), (2, 1, 1))) == E(
        {(3, 2): 1, (3, 1, 1): 1, (2, 2, 1): 2, (2, 1, 1, 1): 1}
    )
    # frozen from the Kostka-inversion oracle in tests/oracles.py
    assert lr_expand(SkewShape((3, 3, 1, 1), (2, 1))) == E(
        {(3, 2): 1, (3, 1, 1): 1, (2, 2, 1): 1, (2, 1, 1, 1): 1}
    )
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0
    done(f"({elapsed:.3f}s)")


def test_criterion_2_support_example(criterion):
    done = criterion(2, "support of rib(233) and its support class")
    t0 = fresh()
    want = {(6, 2), (6, 1, 1), (5, 3), (5, 2, 1), (4, 4), (4, 3, 1), (4, 2, 2), (3, 3, 2)}
    assert lr_expand(ribbon((2, 3, 3))).support() == want
    trio = {ribbon((2, 3, 3)), ribbon((3, 2, 3)), ribbon((3, 3, 2))}
    holding = [c for c in support_classes(8) if ribbon((2, 3, 3)) in c.members]
    assert len(holding) == 1 and set(holding[0].members) == trio
    done(f"({time.perf_counter() - t0:.1f}s)")


def test_criterion_3_ribbon_oracle(criterion):
    done = criterion(3, "descent-set route equals LR route on all ribbons, N <= 8")
    t0 = fresh()
    mismatches = checked = 0
    for n in range(1, 9):
        for alpha in enumerate_compositions(n):
            checked += 1
            mismatches += ribbon_expand(alpha) != lr_expand(ribbon(alpha))
    assert checked == 2**8 - 1 and mismatches == 0
    done(f"({checked} ribbons, {time.perf_counter() - t0:.1f}s)")


def test_criterion_4_main_theorem(criterion):
    done = criterion(4, "maximal-support theorem: posets N <= 7, supports N <= 10")
    t0 = fresh()
    bad = []
    for n in range(1, 8):
        bad += verify_theorem_main(n, with_poset=True).counterexamples
    for n in range(8, 11):
        bad += verify_theorem_support(n).counterexamples
    assert bad == []
    done(f"({time.perf_counter() - t0:.1f}s)")


EXAMPLE_INNER = {
    (10, 4, 4): [[1, 2, 3, 6, 8, 9, 11, 12], [4, 5, 7, 10], [13, 14, 15]],
    (9, 9): [[1, 2, 3, 5, 6, 8, 9, 11, 12], [4, 7, 10, 13, 14, 15]],
}
EXAMPLE_RESULT = {
    (10, 4, 4): ((1, 2, 3, 6, 8, 9, 11, 12, 15, 18), (4, 5, 7, 10), (13, 14, 16, 17)),
    (9, 9): ((1, 2, 3, 5, 6, 8, 9, 12, 15), (4, 7, 10, 11, 13, 14, 16, 17, 18)),
}


def test_criterion_5_witness(criterion):
    done = criterion(5, "witness SYT: worked example exact, all admissible pairs N <= 9")
    t0 = fresh()
    alpha = (3,) * 6
    for lam, rows in EXAMPLE_INNER.items():
        t = construct_witness_syt(alpha, lam, Filling.straight(rows))
        assert t.rows == EXAMPLE_RESULT[lam]
    count = 0
    for n in range(1, 10):
        for l in range(1, n + 1):
            for alpha in enumerate_equitable(n, l):
                want = frozenset(descent_positions(alpha))
                for lam in enumerate_partitions(n):
                    if len(lam) <= l and lam[0] <= n - l + 1:
                        t = construct_witness_syt(alpha, lam)
                        assert t.shape == SkewShape(lam) and t.is_standard() and descent_set(t) == want
                        count += 1
    done(f"({count} pairs, {time.perf_counter() - t0:.1f}s)")


def test_criterion_6_small_poset_structure(criterion):
    done = criterion(6, "P_4 / Supp_4 structure, P_5 not graded, P_6 not a join-semilattice")
    t0 = fresh()
    p4 = poset(4, "schur")
    conn = p4.connected_part()
    assert len(conn) == 7 and len(conn.maximal()) == 4
    s4 = poset(4, "support")
    assert [set(c.members) for c in s4.elements] == [set(c.members) for c in p4.elements]
    assert (s4.leq == p4.leq).all()
    assert poset(5, "schur").is_graded() is False
    assert poset(6, "schur").is_join_semilattice() is False
    done(f"({time.perf_counter() - t0:.1f}s)")


def test_criterion_7_diagonal_ribbon_conjecture(criterion):
    done = criterion(7, "maximal connected classes of P_N are {R, rotated R}, N <= 6")
    t0 = fresh()
    for n in range(1, 7):
        rep = verify_conjecture_max(n)
        assert rep.passed, rep.counterexamples
    done(f"({time.perf_counter() - t0:.1f}s)")


def test_criterion_8_product_identity(criterion):
    done = criterion(8, "ribbon product identity and rib(323) below rib(233)")
    t0 = fresh()
    lhs = multiply(ribbon_expand((2, 2)), ribbon_expand((3, 2, 2)))
    rhs = ribbon_expand((2, 2, 3, 2, 2)) + ribbon_expand((2, 5, 2, 2))
    assert lhs.terms == rhs.terms
    assert diff_schur_positive(ribbon((2, 3, 3)), ribbon((3, 2, 3))) is True
    done(f"({time.perf_counter() - t0:.1f}s)")


def test_criterion_9_full_support(criterion):
    done = criterion(9, "full-support classification")
    t0 = fresh()
    assert has_full_support(ribbon((4, 4, 2)))
    assert has_full_support(ribbon((4, 2, 4)))
    assert has_full_support(ribbon((2, 4, 2)))
    assert not has_full_support(ribbon((4, 2, 2)))
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0
    done(f"({elapsed:.3f}s)")


def test_criterion_10_property_suites(criterion):
    done = criterion(10, "interval/extreme N <= 8, rotation/omega/involution N <= 7, ribbon rows+cols N <= 12")
    t0 = fresh()
    for n in range(1, 9):
        for a in enumerate_skew_shapes(n):
            e = lr_expand(a)
            lo, hi = rows_of(a), transpose(cols_of(a))
            assert e.coeff(lo) == 1 and e.coeff(hi) == 1
            assert all(dominance_leq(lo, lam) and dominance_leq(lam, hi) for lam in e.support())
    for n in range(1, 8):
        for a in enumerate_skew_shapes(n):
            e = lr_expand(a)
            assert rotate180(rotate180(a)) == a and transpose_skew(transpose_skew(a)) == a
            assert lr_expand(rotate180(a)) == e
            assert lr_expand(transpose_skew(a)) == omega(e)
            assert omega(omega(e)) == e
    for n in range(1, 13):
        for alpha in enumerate_compositions(n):
            r = ribbon(alpha)
            assert r.n_rows + r.n_cols == n + 1
    elapsed = time.perf_counter() - t0
    assert elapsed < 600
    done(f"({elapsed:.1f}s)")
