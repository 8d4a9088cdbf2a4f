#!/usr/bin/env python3
"""Step-by-step run of the budgeted search strategy on the demo poset.

A hidden ideal sits in a 34-node pointed poset of degree 4 and height 6;
the strategy must identify it with at most 3 positive answers.  The
height schedule drives each probe: ceil((h+1)/k) while 1 < k < h, the
full height when k = 1, and height 2 when k covers the height.
"""

from idealsearch import (
    apply_answer,
    fixed_ideal_oracle,
    next_decision,
    query_bound,
    resolve_conclusion,
    run,
    start_search,
)
from idealsearch.fixtures import demo_ideal, demo_poset

poset = demo_poset()
ideal = demo_ideal()
oracle = fixed_ideal_oracle(poset, ideal)

print(f"poset: {len(poset)} nodes, height {poset.height}, degree {poset.degree}")
print(f"hidden ideal: generated by {ideal.generator} -> {sorted(ideal.members(poset))}")
print(f"budget: 3 positives; guaranteed within {query_bound(3, 4, 6)} total queries\n")

state = start_search(poset, 3)
step = 1
while not state.is_terminal():
    decision = next_decision(state)
    answer = oracle.answer(decision.node)
    print(
        f"query {step}: node {decision.node} at height {decision.height}"
        f" ({decision.branch}; {state.size} nodes alive, budget {state.budget})"
        f" -> {'in the ideal' if answer else 'not in the ideal'}"
    )
    state = apply_answer(state, decision.node, answer)
    step += 1

conclusion = resolve_conclusion(state)
print(f"\nconcluded: {conclusion.to_json_obj()}")
print(f"total queries: {len(state.entries)}, positives used: "
      f"{sum(1 for e in state.entries if e.positive)}")

# The one-shot runner folds exactly the same steps.
got, transcript = run(poset, 3, fixed_ideal_oracle(poset, ideal))
assert got == conclusion and transcript.entries == state.entries
print("one-shot runner reproduces the stepped transcript")

# Every ideal of the poset is identified the same way.
worst = 0
for candidate in poset.enumerate_ideals():
    found, t = run(poset, 3, fixed_ideal_oracle(poset, candidate))
    assert found == candidate
    worst = max(worst, t.total_queries)
print(f"all {len(poset) + 1} ideals identified; worst run used {worst} queries")
