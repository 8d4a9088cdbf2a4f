"""Exact optimal query counts, solved two independent ways.

``min_queries_recursive`` evaluates the recursive description of the
optimum directly on sub-posets; ``min_queries_game`` solves the same
quantity as a minimax game over the set of candidate ideals.  The two
share nothing but the poset, which makes them useful as mutual oracles.
Both are exponential and guarded by a node cap (default 22).
"""

from __future__ import annotations

from .errors import InstanceTooLarge, InvalidParameter, NotPointed
from .poset import Ideal, Poset

DEFAULT_NODE_CAP = 22


def _validate(poset: Poset, k: int, node_cap: int) -> None:
    if k < 1:
        raise InvalidParameter("budget must be at least 1")
    if len(poset) > node_cap:
        raise InstanceTooLarge(f"{len(poset)} nodes exceeds the cap of {node_cap}")
    if not poset.is_pointed():
        raise NotPointed("exact solving is defined for pointed posets")


def min_queries_recursive(poset: Poset, k: int, node_cap: int = DEFAULT_NODE_CAP) -> int:
    """Optimal worst-case query count, by the sub-poset recursion.

    q(empty, k) = 0; q(p, 1) = |p|;
    q(p, k) = 1 + min over nodes u of max(q(p without the up-set of u, k),
    q(strictly above u, k - 1)).  Memoized on (node bitmask, budget).
    """
    _validate(poset, k, node_cap)
    up = {v: poset.up_mask(v) for v in poset.nodes}
    strict_up = {v: poset.strict_up_mask(v) for v in poset.nodes}
    nodes = poset.nodes
    memo: dict[tuple[int, int], int] = {}

    def q(mask: int, budget: int) -> int:
        if mask == 0:
            return 0
        if budget == 1:
            return mask.bit_count()
        key = (mask, budget)
        cached = memo.get(key)
        if cached is not None:
            return cached
        best = None
        for v in nodes:
            if not (mask >> v) & 1:
                continue
            negative = q(mask & ~up[v], budget)
            positive = q(mask & strict_up[v], budget - 1)
            value = (negative if negative >= positive else positive) + 1
            if best is None or value < best:
                best = value
        memo[key] = best
        return best

    return q(poset.full_mask, k)


class _GameSolver:
    """Minimax over candidate-ideal sets with a positive-answer budget.

    Candidates are bitmasks over the ideals of the poset (bit 0 is the
    empty ideal, bit i+1 the principal ideal of the i-th node).  A query
    is informative when both answer classes are nonempty; a positive
    answer costs one budget unit.  Value infinity (no valid strategy)
    is the sentinel ``self.inf`` and only arises below a zero budget.
    """

    def __init__(self, poset: Poset, k: int):
        self.poset = poset
        self.k = k
        self.node_list = poset.nodes
        self.index = {v: i + 1 for i, v in enumerate(poset.nodes)}
        self.all_candidates = (1 << (len(poset) + 1)) - 1
        # ideals containing node v = principal ideals of generators above v
        self.yes_mask = {}
        for v in poset.nodes:
            mask = 0
            for g in poset.nodes_in(poset.up_mask(v)):
                mask |= 1 << self.index[g]
            self.yes_mask[v] = mask
        self.inf = len(poset) * k + 1
        self.memo: dict[tuple[int, int], int] = {}

    def value(self, candidates: int, budget: int) -> int:
        if candidates & (candidates - 1) == 0:
            return 0
        if budget == 0:
            return self.inf
        key = (candidates, budget)
        cached = self.memo.get(key)
        if cached is not None:
            return cached
        best = self.inf
        for v in self.node_list:
            yes = candidates & self.yes_mask[v]
            no = candidates & ~self.yes_mask[v]
            if not yes or not no:
                continue
            worst = max(self.value(yes, budget - 1), self.value(no, budget))
            if worst + 1 < best:
                best = worst + 1
        self.memo[key] = best
        return best

    def best_query(self, candidates: int, budget: int) -> int:
        """Lowest-id node achieving the minimax value."""
        target = self.value(candidates, budget)
        for v in self.node_list:
            yes = candidates & self.yes_mask[v]
            no = candidates & ~self.yes_mask[v]
            if not yes or not no:
                continue
            if 1 + max(self.value(yes, budget - 1), self.value(no, budget)) == target:
                return v
        raise AssertionError("no achieving query; value table inconsistent")

    def ideal_of_bit(self, candidates: int) -> Ideal:
        assert candidates and candidates & (candidates - 1) == 0
        bit = candidates.bit_length() - 1
        if bit == 0:
            return Ideal.empty()
        return Ideal.principal(self.node_list[bit - 1])


def min_queries_game(poset: Poset, k: int, node_cap: int = DEFAULT_NODE_CAP) -> int:
    """Optimal worst-case query count, by candidate-set minimax."""
    _validate(poset, k, node_cap)
    solver = _GameSolver(poset, k)
    return solver.value(solver.all_candidates, k)


def optimal_decision_tree(poset: Poset, k: int, node_cap: int = DEFAULT_NODE_CAP) -> dict:
    """An optimal strategy extracted from the minimax solution.

    Nested dicts: ``{"query": node, "yes": subtree, "no": subtree}`` at
    internal nodes and ``{"conclude": ideal}`` at leaves.  Replaying the
    tree against any ideal uses at most the minimax value in queries and
    at most k positives, with equality in at least one replay.
    """
    _validate(poset, k, node_cap)
    solver = _GameSolver(poset, k)

    def build(candidates: int, budget: int) -> dict:
        if candidates & (candidates - 1) == 0:
            return {"conclude": solver.ideal_of_bit(candidates).to_json_obj()}
        v = solver.best_query(candidates, budget)
        yes = candidates & solver.yes_mask[v]
        no = candidates & ~solver.yes_mask[v]
        return {"query": v, "yes": build(yes, budget - 1), "no": build(no, budget)}

    return build(solver.all_candidates, k)


def replay_decision_tree(poset: Poset, tree: dict, ideal: Ideal) -> tuple[int, int]:
    """Drive a decision tree with a fixed ideal; returns (queries, positives)."""
    queries = 0
    positives = 0
    node = tree
    while "query" in node:
        queries += 1
        if ideal.contains(poset, node["query"]):
            positives += 1
            node = node["yes"]
        else:
            node = node["no"]
    concluded = Ideal.from_json_obj(node["conclude"])
    if concluded != ideal:
        raise AssertionError(f"tree concluded {concluded}, hidden ideal was {ideal}")
    return queries, positives
