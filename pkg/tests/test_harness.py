import pytest

from idealsearch.bounds import query_bound
from idealsearch.errors import InvariantViolation
from idealsearch.fixtures import demo_ideal, demo_poset
from idealsearch.generate import gen_chain, gen_complete_tree, gen_random_pointed
from idealsearch.harness import (
    SweepRow,
    rows_from_csv,
    rows_to_csv,
    sweep_trees,
    verify_small_exhaustive,
    worst_case_strategy,
)
from idealsearch.oracle import fixed_ideal_oracle
from idealsearch.poset import Ideal, build_poset
from idealsearch.strategy import run


def test_worst_case_singleton():
    worst, witness = worst_case_strategy(build_poset([0], []), 1)
    assert worst == 1
    assert witness in (Ideal.empty(), Ideal.principal(0))


def test_worst_case_chain10_budget1():
    worst, witness = worst_case_strategy(gen_chain(10), 1)
    assert worst == 10
    assert witness == Ideal.empty()


def test_worst_case_tree_within_bound():
    worst, _ = worst_case_strategy(gen_complete_tree(2, 4), 2)
    assert worst <= query_bound(2, 2, 4) == 7


def test_worst_case_empty():
    assert worst_case_strategy(build_poset([], []), 3) == (0, Ideal.empty())


def test_worst_case_matches_per_ideal_maximum():
    # the shared-prefix walk must agree with running every ideal separately
    corpus = [gen_chain(n) for n in range(1, 7)]
    corpus += [gen_complete_tree(2, 3), gen_complete_tree(3, 2)]
    corpus += [gen_random_pointed(3, 4, seed) for seed in range(15)]
    for p in corpus:
        for k in (1, 2, 3):
            walk, _ = worst_case_strategy(p, k)
            brute = max(
                run(p, k, fixed_ideal_oracle(p, ideal))[1].total_queries
                for ideal in p.enumerate_ideals()
            )
            assert walk == brute, (p, k, walk, brute)


def test_worst_case_demo():
    p = demo_poset()
    worst, _ = worst_case_strategy(p, 3)
    assert worst <= query_bound(3, 4, 6)
    _, transcript = run(p, 3, fixed_ideal_oracle(p, demo_ideal()))
    assert transcript.total_queries <= worst


def test_sweep_row_values():
    rows = sweep_trees(2, 2, 4)
    assert [r.n for r in rows] == [1, 2, 3, 4]
    last = rows[-1]
    assert last.tree_size == 15
    assert last.f == 7
    assert last.tau == 5  # capacity(2,4) = 10 < 15 <= capacity(2,5) = 15
    assert last.exact_q is not None
    assert rows[0].worst_case == 1  # singleton tree


def test_sweep_degree_one_rows():
    for row in sweep_trees(1, 3, 6):
        assert row.f == -(-row.n // 3) + 3 - 1


def test_sweep_invariant_violation_raises():
    bad = SweepRow(
        l=2, k=2, n=3, tree_size=7, f=5, tau=9,
        m_growth=1.0, M_growth=100.0, worst_case=5, exact_q=None,
    )
    with pytest.raises(InvariantViolation):
        bad.check()


def test_csv_round_trip_bit_exact():
    rows = sweep_trees(2, 2, 6) + sweep_trees(3, 2, 4)
    text = rows_to_csv(rows)
    parsed = rows_from_csv(text)
    assert parsed == rows
    assert rows_to_csv(parsed) == text


def test_csv_header_enforced():
    with pytest.raises(ValueError):
        rows_from_csv("a,b,c\n1,2,3\n")


def test_verify_small_clean():
    report = verify_small_exhaustive(node_cap=16, k_max=3, seeds=25)
    assert report.ok
    assert report.instances > 25
    assert report.runs > 500
