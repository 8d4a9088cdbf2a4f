#!/usr/bin/env python3
"""Poset construction, order statistics, and restriction operations."""

from idealsearch import build_poset, gen_chain, gen_complete_tree, gen_random_pointed
from idealsearch.fixtures import sample_ideal, sample_poset

# Posets are built from node ids and (upper, lower) cover edges.  The
# input may contain transitive shortcuts; storage is always reduced.
p = build_poset([0, 1, 2], [(1, 0), (2, 0), (2, 1)])
print("3-chain covers after reduction:", p.covers)

# A 17-node pointed poset of degree 4 and height 6.
s = sample_poset()
print(f"\nsample poset: {len(s)} nodes, height {s.height}, degree {s.degree}")
print("pointed:", s.is_pointed(), "| minimal element:", s.minimal_element())
print("node 10: height", s.node_height(10), "degree", s.node_degree(10))

# Ideals are empty or generated by one node (a principal down-set).
ideal = sample_ideal()
print("\nideal generated by 10:", sorted(ideal.members(s)))
print("ideal count:", len(s.enumerate_ideals()), "=", len(s), "+ 1")

# The two restriction moves of the search: keep the up-set of a node, or
# drop everything dominating it.  Ids are preserved.
up = s.up_set(10)
print("\nup-set of 10:", sorted(up.nodes), "minimal:", up.minimal_element())
rest = s.not_dominating(10)
print("not dominating 10:", len(rest), "nodes, height", rest.height)

# Heights shrink under restriction but ht(down-set of v) is exactly ht(v).
print("down-set of 10 has height", s.down_set(10).height, "= ht(10)")

# Generators: chains, complete trees, seeded random pointed posets.
print("\nchain(4):", gen_chain(4).height, "levels")
t = gen_complete_tree(5, 3)
print("complete 5-ary tree of height 3:", len(t), "nodes")
r = gen_random_pointed(3, 4, seed=7)
print("random pointed (degree<=3, height=4, seed=7):", len(r), "nodes")

# Canonical JSON round-trips bit-exactly.
text = s.to_json_str()
print("\nposet JSON starts:", text[:60], "...")
