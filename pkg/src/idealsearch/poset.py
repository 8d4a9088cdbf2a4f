"""Finite posets over small integer node ids.

The cover relation is stored reduced (a Hasse diagram); dominance is its
reflexive-transitive closure, kept as per-node bitmasks (bit ``v`` of a
mask means node ``v`` is in the set).  Bitmasks make every restriction
and reachability question a handful of big-int operations, which keeps
the search machinery usable on posets with a few thousand nodes.

Posets are immutable after construction.  Every restriction returns a
new poset that keeps the original node ids, so transcripts and ideals
remain meaningful across restrictions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    CycleDetected,
    HeightOutOfRange,
    NotPointed,
    UnknownNodeId,
)


@dataclass(frozen=True)
class Ideal:
    """Empty, or the principal down-set generated by a single node."""

    generator: int | None = None

    @classmethod
    def empty(cls) -> "Ideal":
        return cls(None)

    @classmethod
    def principal(cls, generator: int) -> "Ideal":
        return cls(generator)

    @property
    def is_empty(self) -> bool:
        return self.generator is None

    def members(self, poset: "Poset") -> frozenset[int]:
        """Node set of this ideal inside ``poset``."""
        if self.generator is None:
            return frozenset()
        return poset.down_set_nodes(self.generator)

    def contains(self, poset: "Poset", node: int) -> bool:
        if self.generator is None:
            return False
        return poset.dominates(self.generator, node)

    def to_json_obj(self) -> dict:
        if self.generator is None:
            return {"kind": "empty"}
        return {"kind": "principal", "generator": self.generator}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Ideal":
        if obj.get("kind") == "empty":
            return cls(None)
        if obj.get("kind") == "principal":
            return cls(int(obj["generator"]))
        raise ValueError(f"not an ideal object: {obj!r}")


def _close_down(node_list: list[int], below: dict[int, list[int]]) -> dict[int, int]:
    """Reflexive-transitive closure as down-set masks; rejects cycles."""
    down: dict[int, int] = {}
    onstack: set[int] = set()
    for root in node_list:
        if root in down:
            continue
        stack = [(root, 0)]
        onstack.add(root)
        while stack:
            v, i = stack.pop()
            kids = below[v]
            while i < len(kids) and kids[i] in down:
                i += 1
            if i < len(kids):
                child = kids[i]
                if child in onstack:
                    raise CycleDetected(f"cycle through nodes {v} and {child}")
                stack.append((v, i))
                stack.append((child, 0))
                onstack.add(child)
            else:
                mask = 1 << v
                for child in kids:
                    mask |= down[child]
                down[v] = mask
                onstack.discard(v)
    return down


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """An immutable finite poset.

    ``covers`` holds pairs ``(upper, lower)`` meaning ``upper`` covers
    ``lower``.  Arbitrary (acyclic) edge input is accepted: the relation
    is closed transitively and the stored covers are the transitive
    reduction of that closure.  Duplicate edges are tolerated.
    """

    __slots__ = (
        "nodes",
        "covers",
        "labels",
        "_down",
        "_up",
        "_ht",
        "_deg",
        "_height",
        "_below",
        "_above",
        "_order",
        "_minimals",
        "_full_mask",
    )

    def __init__(
        self,
        nodes: Iterable[int],
        covers: Iterable[tuple[int, int]],
        labels: dict[int, str] | None = None,
    ):
        node_list = sorted(set(int(v) for v in nodes))
        for v in node_list:
            if v < 0:
                raise UnknownNodeId(f"node ids must be non-negative, got {v}")
        node_set = set(node_list)
        edge_set = set()
        for upper, lower in covers:
            upper, lower = int(upper), int(lower)
            if upper not in node_set or lower not in node_set:
                raise UnknownNodeId(f"cover ({upper}, {lower}) references undeclared node")
            if upper == lower:
                raise CycleDetected(f"self-cover at node {upper}")
            edge_set.add((upper, lower))
        below = {v: [] for v in node_list}
        for upper, lower in sorted(edge_set):
            below[upper].append(lower)
        down = _close_down(node_list, below)
        self._init_from_down(node_list, down, labels)

    @classmethod
    def _from_dominance(
        cls,
        node_list: list[int],
        down: dict[int, int],
        labels: dict[int, str] | None = None,
    ) -> "Poset":
        """Internal: build from an already-closed dominance relation."""
        p = cls.__new__(cls)
        p._init_from_down(node_list, down, labels)
        return p

    def _init_from_down(
        self,
        node_list: list[int],
        down: dict[int, int],
        labels: dict[int, str] | None,
    ) -> None:
        up: dict[int, int] = {v: 1 << v for v in node_list}
        for u in node_list:
            bit_u = 1 << u
            for v in _bits(down[u] ^ bit_u):
                up[v] |= bit_u
        # transitive reduction: (u, v) is a cover iff nothing sits strictly between
        cover_pairs = []
        for u in node_list:
            mask_uv = 1 << u
            for v in _bits(down[u] ^ mask_uv):
                if down[u] & up[v] == mask_uv | (1 << v):
                    cover_pairs.append((u, v))
        cover_pairs.sort()
        below: dict[int, tuple[int, ...]] = {v: () for v in node_list}
        above: dict[int, tuple[int, ...]] = {v: () for v in node_list}
        for u, v in cover_pairs:
            below[u] += (v,)
            above[v] += (u,)
        # heights: longest chain ending at the node; a node before its dominators
        by_closure_size = sorted(node_list, key=lambda v: (down[v].bit_count(), v))
        ht: dict[int, int] = {}
        for v in by_closure_size:
            best = 0
            for c in below[v]:
                if ht[c] > best:
                    best = ht[c]
            ht[v] = best + 1
        self.nodes = tuple(node_list)
        self.covers = tuple(cover_pairs)
        self.labels = dict(labels) if labels else {}
        self._down = down
        self._up = up
        self._ht = ht
        self._deg = {v: len(above[v]) for v in node_list}
        self._height = max(ht.values()) if ht else 0
        self._below = below
        self._above = above
        self._order = tuple(sorted(node_list, key=lambda v: (ht[v], v)))
        self._minimals = tuple(v for v in node_list if down[v] == 1 << v)
        self._full_mask = 0
        for v in node_list:
            self._full_mask |= 1 << v

    # -- basic queries ------------------------------------------------

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self) -> Iterator[int]:
        return iter(self.nodes)

    def __contains__(self, v: int) -> bool:
        return v in self._down

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return (
            self.nodes == other.nodes
            and self.covers == other.covers
            and self.labels == other.labels
        )

    def __hash__(self) -> int:
        return hash((self.nodes, self.covers))

    def __repr__(self) -> str:
        return f"Poset(nodes={len(self.nodes)}, ht={self.height}, deg={self.degree})"

    def _check_node(self, v: int) -> None:
        if v not in self._down:
            raise UnknownNodeId(f"node {v} is not in the poset")

    @property
    def height(self) -> int:
        """ht of the poset: length of a longest chain (0 when empty)."""
        return self._height

    @property
    def degree(self) -> int:
        """Largest number of upper covers over all nodes (0 when empty)."""
        return max(self._deg.values()) if self._deg else 0

    @property
    def full_mask(self) -> int:
        return self._full_mask

    def node_height(self, v: int) -> int:
        self._check_node(v)
        return self._ht[v]

    def node_degree(self, v: int) -> int:
        self._check_node(v)
        return self._deg[v]

    def dominates(self, u: int, v: int) -> bool:
        """True iff u >= v."""
        self._check_node(u)
        self._check_node(v)
        return bool((self._down[u] >> v) & 1)

    def covers_below(self, v: int) -> tuple[int, ...]:
        self._check_node(v)
        return self._below[v]

    def covers_above(self, v: int) -> tuple[int, ...]:
        self._check_node(v)
        return self._above[v]

    def minimal_element(self) -> int | None:
        """The unique minimal element of a pointed nonempty poset."""
        if len(self._minimals) == 1:
            return self._minimals[0]
        return None

    def is_pointed(self) -> bool:
        return not self.nodes or len(self._minimals) == 1

    def nodes_of_height(self, t: int) -> tuple[int, ...]:
        return tuple(v for v in self.nodes if self._ht[v] == t)

    # -- masks ---------------------------------------------------------

    def mask_of(self, nodes: Iterable[int]) -> int:
        mask = 0
        for v in nodes:
            self._check_node(v)
            mask |= 1 << v
        return mask

    def up_mask(self, v: int) -> int:
        self._check_node(v)
        return self._up[v]

    def strict_up_mask(self, v: int) -> int:
        self._check_node(v)
        return self._up[v] ^ (1 << v)

    def down_mask(self, v: int) -> int:
        self._check_node(v)
        return self._down[v]

    def nodes_in(self, mask: int) -> tuple[int, ...]:
        return tuple(v for v in self.nodes if (mask >> v) & 1)

    # -- restriction ---------------------------------------------------

    def restrict(self, keep: Iterable[int] | int) -> "Poset":
        """Induced subposet on ``keep`` (an iterable of ids or a mask).

        Covers are recomputed as the transitive reduction of the induced
        dominance, which is safe for arbitrary subsets, not only up- or
        down-closed ones.
        """
        mask = keep if isinstance(keep, int) else self.mask_of(keep)
        if mask & ~self._full_mask:
            extra = next(_bits(mask & ~self._full_mask))
            raise UnknownNodeId(f"node {extra} is not in the poset")
        node_list = [v for v in self.nodes if (mask >> v) & 1]
        down = {v: self._down[v] & mask for v in node_list}
        labels = {v: s for v, s in self.labels.items() if (mask >> v) & 1}
        return Poset._from_dominance(node_list, down, labels or None)

    def up_set_nodes(self, v: int) -> frozenset[int]:
        return frozenset(_bits(self.up_mask(v)))

    def strict_up_set_nodes(self, v: int) -> frozenset[int]:
        return frozenset(_bits(self.strict_up_mask(v)))

    def not_dominating_nodes(self, v: int) -> frozenset[int]:
        return frozenset(_bits(self._full_mask & ~self.up_mask(v)))

    def down_set_nodes(self, v: int) -> frozenset[int]:
        return frozenset(_bits(self.down_mask(v)))

    def up_set(self, v: int) -> "Poset":
        """The subposet of nodes dominating v; pointed with minimum v."""
        return self.restrict(self.up_mask(v))

    def strict_up_set(self, v: int) -> "Poset":
        return self.restrict(self.strict_up_mask(v))

    def not_dominating(self, v: int) -> "Poset":
        """The subposet of nodes that do not dominate v."""
        return self.restrict(self._full_mask & ~self.up_mask(v))

    def down_set(self, v: int) -> "Poset":
        """The principal ideal generated by v, as a subposet."""
        return self.restrict(self.down_mask(v))

    # -- chains ----------------------------------------------------------

    def masked_profile(
        self, alive: int, ordered: tuple[int, ...] | None = None
    ) -> tuple[int, int, dict[int, int], dict[int, int], tuple[int, ...]]:
        """Heights and upward chain reach inside the sub-poset ``alive``.

        Returns ``(size, height, ht, reach, ordered)`` where ``ht[v]`` is
        the height of v within the restriction and ``reach[v]`` the length
        of a longest chain of alive nodes with minimum v.  A node lies on
        a maximal chain of the restriction iff ht[v] + reach[v] - 1 equals
        the restriction height.

        Only valid when ``alive`` is convex in this poset (closed under
        elements lying between two members).  Up-sets, complements of
        up-sets, and intersections of those are convex, which covers every
        restriction the search strategy performs; for arbitrary subsets
        use :meth:`restrict`.
        """
        if ordered is None:
            picked = [v for v in _bits(alive)]
            base_ht = self._ht
            picked.sort(key=lambda v: (base_ht[v], v))
            ordered = tuple(picked)
        ht: dict[int, int] = {}
        height = 0
        below = self._below
        for v in ordered:
            best = 0
            for c in below[v]:
                h = ht.get(c, 0)
                if h > best:
                    best = h
            h = best + 1
            ht[v] = h
            if h > height:
                height = h
        reach: dict[int, int] = {}
        above = self._above
        for v in reversed(ordered):
            best = 0
            for u in above[v]:
                r = reach.get(u, 0)
                if r > best:
                    best = r
            reach[v] = best + 1
        return len(ordered), height, ht, reach, ordered

    def max_chain_node_of_height(self, h: int) -> int:
        """Lowest-id node of height ``h`` lying on some maximal chain."""
        if not self.nodes:
            raise HeightOutOfRange("empty poset has no chains")
        if not self.is_pointed():
            raise NotPointed("maximal-chain selection requires a pointed poset")
        if h < 1 or h > self._height:
            raise HeightOutOfRange(f"height {h} outside [1, {self._height}]")
        _, height, ht, reach, ordered = self.masked_profile(self._full_mask, self._order)
        best = None
        for v in ordered:
            if ht[v] == h and ht[v] + reach[v] - 1 == height:
                if best is None or v < best:
                    best = v
        if best is None:  # unreachable for pointed posets
            raise HeightOutOfRange(f"no height-{h} node on a maximal chain")
        return best

    def maximal_chain(self) -> list[int]:
        """One maximal chain, listed top down (lowest ids preferred)."""
        if not self.nodes:
            return []
        top = min(v for v in self.nodes if self._ht[v] == self._height)
        chain = [top]
        while True:
            v = chain[-1]
            cands = [c for c in self._below[v] if self._ht[c] == self._ht[v] - 1]
            if not cands:
                break
            chain.append(min(cands))
        return chain

    # -- ideals ----------------------------------------------------------

    def enumerate_ideals(self) -> list[Ideal]:
        """All ideals: the empty one plus one principal ideal per node."""
        return [Ideal.empty()] + [Ideal.principal(v) for v in self.nodes]

    # -- serialization ----------------------------------------------------

    def to_json_obj(self) -> dict:
        obj: dict = {
            "nodes": list(self.nodes),
            "covers": [[u, v] for u, v in self.covers],
        }
        if self.labels:
            obj["labels"] = {str(k): self.labels[k] for k in sorted(self.labels)}
        return obj

    def to_json_str(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Poset":
        if not isinstance(obj, dict) or "nodes" not in obj or "covers" not in obj:
            raise ValueError("poset JSON needs 'nodes' and 'covers'")
        labels = None
        if obj.get("labels"):
            labels = {int(k): str(v) for k, v in obj["labels"].items()}
        covers = [(int(u), int(v)) for u, v in obj["covers"]]
        return cls(obj["nodes"], covers, labels)

    @classmethod
    def from_json_str(cls, text: str) -> "Poset":
        return cls.from_json_obj(json.loads(text))


def build_poset(
    nodes: Iterable[int],
    covers: Iterable[tuple[int, int]],
    labels: dict[int, str] | None = None,
) -> Poset:
    """Build a poset from node ids and (upper, lower) edges.

    The edges may contain transitive shortcuts or duplicates; the stored
    covers are always the reduction of the closed relation.  Cyclic input
    raises :class:`CycleDetected`.
    """
    return Poset(nodes, covers, labels)


def is_pointed(p: Poset) -> bool:
    """True iff ``p`` is empty or has a unique minimal element."""
    return p.is_pointed()
