import pytest

from idealsearch.bounds import ceil_div, query_bound
from idealsearch.errors import (
    BudgetExhausted,
    InvalidParameter,
    NodeNotPending,
    NotPointed,
    NotTerminal,
)
from idealsearch.fixtures import demo_ideal, demo_poset
from idealsearch.generate import gen_chain, gen_complete_tree, gen_random_pointed
from idealsearch.oracle import caching_wrapper, fixed_ideal_oracle
from idealsearch.poset import Ideal, build_poset
from idealsearch.strategy import (
    apply_answer,
    next_decision,
    replay_and_verify,
    resolve_conclusion,
    run,
    start_search,
)


def test_start_requires_pointed_and_budget():
    with pytest.raises(NotPointed):
        start_search(build_poset([0, 1], []), 2)
    with pytest.raises(InvalidParameter):
        start_search(gen_chain(2), 0)


def test_decision_interior_schedule():
    # height 6 with budget 3 probes at ceil(7/3) = 3
    state = start_search(demo_poset(), 3)
    decision = next_decision(state)
    assert decision.kind == "query"
    assert decision.height == 3
    assert decision.branch == "interior"


def test_decision_budget_one_queries_top():
    state = start_search(gen_chain(4), 1)
    decision = next_decision(state)
    assert decision.node == 3
    assert decision.height == 4
    assert decision.branch == "budget-one"


def test_decision_budget_covers_height():
    # height 3 with budget 5 probes at height 2
    state = start_search(gen_complete_tree(2, 3), 5)
    decision = next_decision(state)
    assert decision.height == 2
    assert decision.branch == "budget-covers-height"
    assert decision.node == 1  # lowest id among qualifying nodes


def test_decision_empty_poset():
    state = start_search(build_poset([], []), 2)
    assert next_decision(state).kind == "conclude_empty"
    assert state.is_terminal()
    assert resolve_conclusion(state) == Ideal.empty()


def test_decision_singleton_queries_regardless_of_schedule():
    state = start_search(build_poset([7], []), 4)
    decision = next_decision(state)
    assert decision.kind == "query"
    assert decision.node == 7
    assert decision.branch == "single-node"


def test_apply_answer_rejects_other_nodes():
    state = start_search(gen_chain(3), 2)
    pending = next_decision(state).node
    other = next(v for v in (0, 1, 2) if v != pending)
    with pytest.raises(NodeNotPending):
        apply_answer(state, other, True)


def test_apply_answer_negative_erases_up_set():
    p = demo_poset()
    state = start_search(p, 3)
    node = next_decision(state).node
    after = apply_answer(state, node, False)
    assert after.budget == 3
    assert set(after.alive_nodes()) == set(p.not_dominating_nodes(node))


def test_apply_answer_positive_restricts_and_decrements():
    p = demo_poset()
    state = start_search(p, 3)
    state = apply_answer(state, next_decision(state).node, False)
    state = apply_answer(state, next_decision(state).node, False)
    node = next_decision(state).node  # node 4 on the walkthrough path
    before = set(state.alive_nodes())
    after = apply_answer(state, node, True)
    assert after.budget == 2
    assert after.last_positive == node
    assert set(after.alive_nodes()) == {v for v in before if p.dominates(v, node)}


def test_positive_on_last_node_concludes_without_decrement():
    state = start_search(build_poset([3], []), 2)
    after = apply_answer(state, 3, True)
    assert after.is_terminal()
    assert after.budget == 2
    assert resolve_conclusion(after) == Ideal.principal(3)


def test_negative_on_last_node_concludes_empty():
    state = start_search(build_poset([3], []), 2)
    after = apply_answer(state, 3, False)
    assert after.is_terminal()
    assert resolve_conclusion(after) == Ideal.empty()


def test_resolve_requires_terminal():
    state = start_search(gen_chain(3), 2)
    with pytest.raises(NotTerminal):
        resolve_conclusion(state)


def test_budget_exhausted_is_defensive():
    from idealsearch.strategy import SearchState

    p = gen_chain(3)
    good = start_search(p, 1)
    broken = SearchState(p, good.alive, good.ordered, 0, None, (), None)
    with pytest.raises(BudgetExhausted):
        next_decision(broken)


def test_run_empty_poset():
    p = build_poset([], [])
    ideal, transcript = run(p, 2, fixed_ideal_oracle(p, Ideal.empty()))
    assert ideal == Ideal.empty()
    assert transcript.total_queries == 0


def test_run_singleton_positive():
    p = build_poset([0], [])
    ideal, transcript = run(p, 1, fixed_ideal_oracle(p, Ideal.principal(0)))
    assert ideal == Ideal.principal(0)
    assert transcript.total_queries == 1


def test_run_chain10_budget1_empty_scans_everything():
    # with one positive allowed the strategy scans top-down; an empty
    # ideal answers ten negatives
    p = gen_chain(10)
    ideal, transcript = run(p, 1, fixed_ideal_oracle(p, Ideal.empty()))
    assert ideal == Ideal.empty()
    assert transcript.total_queries == 10
    assert transcript.positive_queries == 0


def test_run_identifies_every_ideal_small():
    for p in (gen_chain(5), gen_complete_tree(2, 3), gen_random_pointed(3, 3, 11)):
        for k in (1, 2, 3):
            for ideal in p.enumerate_ideals():
                got, transcript = run(p, k, fixed_ideal_oracle(p, ideal))
                assert got == ideal
                assert transcript.positive_queries <= k


def test_run_demo_walkthrough():
    p = demo_poset()
    ideal = demo_ideal()
    got, transcript = run(p, 3, fixed_ideal_oracle(p, ideal))
    assert got == ideal
    assert [e.height for e in transcript.entries] == [3, 2, 2, 3, 2, 2]
    assert transcript.positive_queries == 3
    assert transcript.total_queries <= query_bound(3, 4, 6) == 37


def test_step_equals_one_shot():
    p = demo_poset()
    ideal = demo_ideal()
    _, transcript = run(p, 3, fixed_ideal_oracle(p, ideal))
    oracle = fixed_ideal_oracle(p, ideal)
    state = start_search(p, 3)
    while not state.is_terminal():
        node = next_decision(state).node
        state = apply_answer(state, node, oracle.answer(node))
    assert state.entries == transcript.entries
    assert resolve_conclusion(state) == transcript.result


def test_transcript_sizes_strictly_shrink():
    p = demo_poset()
    for ideal in (Ideal.empty(), demo_ideal(), Ideal.principal(33)):
        _, transcript = run(p, 3, fixed_ideal_oracle(p, ideal))
        sizes = [e.size for e in transcript.entries]
        assert all(a > b for a, b in zip(sizes, sizes[1:]))


def test_replay_verifies_clean_run():
    p = demo_poset()
    _, transcript = run(p, 3, fixed_ideal_oracle(p, demo_ideal()))
    assert replay_and_verify(p, transcript) == []


def test_replay_flags_tampering():
    p = demo_poset()
    _, transcript = run(p, 3, fixed_ideal_oracle(p, demo_ideal()))
    from dataclasses import replace

    entries = list(transcript.entries)
    entries[0] = replace(entries[0], node=99 if 99 in p else 33)
    tampered = replace(transcript, entries=tuple(entries))
    assert replay_and_verify(p, tampered)


def test_schedule_law_over_corpus():
    for seed in range(20):
        p = gen_random_pointed(3, 4, seed)
        for k in (1, 2, 3, 4):
            for ideal in p.enumerate_ideals():
                _, transcript = run(p, k, fixed_ideal_oracle(p, ideal))
                assert replay_and_verify(p, transcript) == []
                assert transcript.total_queries <= query_bound(k, p.degree, p.height)


def test_derivation_mode_never_exceeds_faithful():
    p = demo_poset()
    for ideal in p.enumerate_ideals():
        for k in (1, 2, 3):
            _, faithful = run(p, k, fixed_ideal_oracle(p, ideal))
            derived_oracle = caching_wrapper(fixed_ideal_oracle(p, ideal), p, derive=True)
            got, derived = run(p, k, derived_oracle)
            assert got == faithful.result
            # same decisions either way, so identical entry sequences
            assert [e.node for e in derived.entries] == [e.node for e in faithful.entries]
            assert derived.consulted_queries <= faithful.total_queries
            bound = query_bound(k, p.degree, p.height)
            assert faithful.total_queries <= bound
            assert derived.consulted_queries <= bound


def test_terminal_requery_served_from_cache():
    # chain 0 < 1 < 2 with budget 2 and the ideal generated by node 1:
    # yes at 1 restricts to {1, 2}, no at 2 leaves {1}, and the final
    # block re-queries node 1, which the cache answers without consulting
    p = gen_chain(3)
    oracle = caching_wrapper(fixed_ideal_oracle(p, Ideal.principal(1)), p)
    got, transcript = run(p, 2, oracle)
    assert got == Ideal.principal(1)
    assert [e.node for e in transcript.entries] == [1, 2, 1]
    assert transcript.entries[-1].derived
    assert transcript.consulted_queries == transcript.total_queries - 1
