#!/usr/bin/env python3
"""Worst cases over all ideals, and the complete-tree growth sweep."""

from idealsearch import (
    gen_chain,
    gen_complete_tree,
    query_bound,
    rows_to_csv,
    sweep_trees,
    verify_small_exhaustive,
    worst_case_strategy,
)

# The strategy is deterministic, so the exact worst case comes from
# running it against every ideal (shared-prefix decision-tree walk).
worst, witness = worst_case_strategy(gen_chain(10), 1)
print(f"chain of 10, budget 1: worst {worst} queries, witness {witness.to_json_obj()}")

tree = gen_complete_tree(2, 6)
for k in (1, 2, 3):
    worst, witness = worst_case_strategy(tree, k)
    print(f"binary tree height 6, budget {k}: worst {worst}"
          f" (bound {query_bound(k, 2, 6)}), witness {witness.to_json_obj()}")

# Sweeping complete trees shows the bound tracking degree**(n/k) growth;
# every row is checked against the sandwich invariant as it is built.
rows = sweep_trees(2, 2, 10)
print("\nsweep: degree 2, budget 2, heights 1..10")
print(rows_to_csv(rows))

# The verification harness replays the strategy against every ideal of a
# corpus of chains, trees, and random pointed posets.
report = verify_small_exhaustive(node_cap=16, k_max=3, seeds=30)
print(f"verification: {report.runs} runs over {report.instances} instances,"
      f" {len(report.violations)} violations")
