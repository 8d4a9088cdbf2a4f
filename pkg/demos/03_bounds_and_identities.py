#!/usr/bin/env python3
"""The query-count bound, its closed forms, and the trial lower bound."""

from idealsearch import (
    chain_capacity,
    growth_lower_const,
    growth_upper_const,
    min_trials,
    query_bound,
    query_bound_closed,
)
from idealsearch.bounds import (
    ceil_floor_complement,
    nested_ceil_collapse,
    query_bound_step_inequality,
)

# query_bound(k, degree, height) caps the strategy's total queries.
print("bound for budget 3 on degree-4 height-6 posets:", query_bound(3, 4, 6))
print("bound grid (degree 2, heights 1..10):")
for k in (1, 2, 3):
    print(f"  k={k}:", [query_bound(k, 2, n) for n in range(1, 11)])

# Three regimes collapse to closed forms.
print("\nclosed forms:")
print("  degree 1:", query_bound_closed(2, 1, 5), "= ceil(5/2) + 1")
print("  height <= budget:", query_bound_closed(5, 3, 3), "= 3*3 - 3 + 5 - 3 + 1")
print("  no shortcut for (2,2,5):", query_bound_closed(2, 2, 5))

# chain_capacity(k, t) is the longest chain solvable in t queries with k
# positives; min_trials is its inverse and lower-bounds any instance.
print("\ncapacity with 2 positives:", [chain_capacity(2, t) for t in range(8)])
print("min trials for 10 nodes, 2 positives:", min_trials(2, 10))

# Growth constants bracket the bound on complete trees: for degree d and
# budget k, m * d**(n/k) <= trials <= bound <= M * d**(n/k).
m = growth_lower_const(2, 2)
M = growth_upper_const(2, 2)
print(f"\ndegree 2, budget 2: m = {m:.4f} (= 2**-0.5), M = {M}")
for n in (4, 8, 12):
    size = 2**n - 1
    print(
        f"  n={n:2d}: {m * 2 ** (n / 2):8.2f} <= {min_trials(2, size):3d}"
        f" <= {query_bound(2, 2, n):3d} <= {M * 2 ** (n / 2):8.2f}"
    )

# The ceiling/floor identities behind the bound proof hold exactly.
print("\nidentity spot checks:")
print("  m - ceil((m+1)/k) + 1 = floor((m+1)(k-1)/k):", ceil_floor_complement(5, 3))
print("  nested ceilings collapse:", nested_ceil_collapse(7, 3, 1))
print("  one schedule step never overshoots:", query_bound_step_inequality(2, 5, 2))
