#!/usr/bin/env python3
"""Optimal query counts on small posets, solved two independent ways."""

import json

from idealsearch import (
    gen_chain,
    gen_complete_tree,
    gen_random_pointed,
    min_queries_game,
    min_queries_recursive,
    min_trials,
    optimal_decision_tree,
    query_bound,
    replay_decision_tree,
    worst_case_strategy,
)

# The recursion minimizes over probe nodes; the game solver minimizes
# over candidate-ideal splits.  They must agree everywhere.
print("chain of 3, budget 2:",
      min_queries_recursive(gen_chain(3), 2), "==",
      min_queries_game(gen_chain(3), 2))

tree = gen_complete_tree(2, 3)
for k in (1, 2, 3):
    a = min_queries_recursive(tree, k)
    b = min_queries_game(tree, k)
    assert a == b
    print(f"complete binary tree height 3, budget {k}: optimal {a}"
          f" (strategy worst case {worst_case_strategy(tree, k)[0]},"
          f" bound {query_bound(k, 2, 3)})")

# On chains the optimum equals the classic trial count: the longest chain
# solvable in t queries with k positives is sum_i C(t, i).
print("\nchain law (optimal == min_trials):")
for n in (5, 10, 20, 30):
    for k in (2, 3):
        q = min_queries_recursive(gen_chain(n), k, node_cap=31)
        assert q == min_trials(k, n)
        print(f"  chain {n:2d}, budget {k}: {q}")

# An explicit optimal strategy comes out as a yes/no decision tree.
chain2 = gen_chain(2)
plan = optimal_decision_tree(chain2, 1)
print("\noptimal tree for a 2-chain, budget 1:")
print(json.dumps(plan, indent=2, sort_keys=True))
for ideal in chain2.enumerate_ideals():
    queries, positives = replay_decision_tree(chain2, plan, ideal)
    print(f"  hidden {ideal.to_json_obj()}: {queries} queries, {positives} positives")

# Random small instances: optimum sits between the trial lower bound and
# the general strategy's worst case.
print("\nsandwich on random instances:")
for seed in range(5):
    p = gen_random_pointed(3, 4, seed)
    if len(p) > 12:
        continue
    q = min_queries_recursive(p, 2)
    lo = min_trials(2, len(p))
    hi, _ = worst_case_strategy(p, 2)
    print(f"  seed {seed}: {len(p):2d} nodes, {lo} <= {q} <= {hi}")
