"""Instance generators: chains, complete trees, and random pointed posets."""

from __future__ import annotations

import random

from .errors import InvalidParameter
from .poset import Poset


def gen_chain(n: int) -> Poset:
    """Chain of ``n`` nodes 0 < 1 < ... < n-1 (height n, degree <= 1)."""
    if n < 0:
        raise InvalidParameter("chain length must be >= 0")
    return Poset(range(n), [(i, i - 1) for i in range(1, n)])


def gen_complete_tree(degree: int, n: int) -> Poset:
    """Complete ``degree``-ary tree of height ``n``.

    Exactly ``degree**(t-1)`` nodes at each height t in [1, n]; ids are
    assigned breadth-first with the minimal element as node 0.
    """
    if degree < 1 or n < 0:
        raise InvalidParameter("need degree >= 1 and height >= 0")
    if n == 0:
        return Poset([], [])
    nodes = [0]
    covers: list[tuple[int, int]] = []
    level = [0]
    next_id = 1
    for _ in range(n - 1):
        new_level = []
        for parent in level:
            for _ in range(degree):
                covers.append((next_id, parent))
                nodes.append(next_id)
                new_level.append(next_id)
                next_id += 1
        level = new_level
    return Poset(nodes, covers)


def complete_tree_size(degree: int, n: int) -> int:
    """sum_{t=0}^{n-1} degree**t, the node count of the complete tree."""
    if degree == 1:
        return n
    return (degree**n - 1) // (degree - 1)


def gen_random_pointed(degree: int, n: int, seed: int, max_extra: int | None = None) -> Poset:
    """Random pointed poset with degree <= ``degree`` and height exactly ``n``.

    Construction: a spine of length n forces the height, a random tree
    grown under the degree cap adds bulk, and a few extra cover edges
    (always oriented downward in tree height, so no cycles and no height
    growth) add non-tree structure.  Attempts whose reduction breaks the
    degree cap are rejected and retried; the bare tree always qualifies.
    Deterministic per (degree, n, seed).
    """
    if degree < 1 or n < 0:
        raise InvalidParameter("need degree >= 1 and height >= 0")
    if n == 0:
        return Poset([], [])
    rng = random.Random(f"pointed:{degree}:{n}:{seed}")
    cap = degree * n if max_extra is None else max_extra
    tree_nodes, tree_covers, heights = _grow_tree(rng, degree, n, cap)
    for _ in range(32):
        covers = list(tree_covers)
        for _ in range(rng.randint(0, max(0, len(tree_nodes) // 2))):
            a = rng.choice(tree_nodes)
            b = rng.choice(tree_nodes)
            if heights[a] == heights[b]:
                continue
            upper, lower = (a, b) if heights[a] > heights[b] else (b, a)
            covers.append((upper, lower))
        p = Poset(tree_nodes, covers)
        if p.degree <= degree and p.height == n and p.is_pointed():
            return p
    return Poset(tree_nodes, tree_covers)


def _grow_tree(
    rng: random.Random, degree: int, n: int, max_extra: int
) -> tuple[list[int], list[tuple[int, int]], dict[int, int]]:
    nodes = list(range(n))
    covers = [(i, i - 1) for i in range(1, n)]
    heights = {i: i + 1 for i in range(n)}
    child_count = {i: (1 if i + 1 < n else 0) for i in range(n)}
    next_id = n
    for _ in range(rng.randint(0, max_extra)):
        slots = [v for v in nodes if child_count[v] < degree and heights[v] < n]
        if not slots:
            break
        parent = rng.choice(slots)
        covers.append((next_id, parent))
        nodes.append(next_id)
        heights[next_id] = heights[parent] + 1
        child_count[next_id] = 0
        child_count[parent] += 1
        next_id += 1
    return nodes, covers, heights
