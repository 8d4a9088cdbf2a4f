"""Answer sources for the membership question "is this node in the ideal?".

Three interchangeable sources: a fixed hidden ideal, a memoizing wrapper
that can also derive answers from order structure, and an interactive
source that validates externally supplied answers for consistency.
All sources expose ``answer(node) -> bool`` and must answer repeated
queries identically.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Protocol

from .errors import InconsistentAnswer, InvalidParameter, UnknownNodeId
from .poset import Ideal, Poset


class OracleSource(Protocol):
    def answer(self, node: int) -> bool: ...


@dataclass(frozen=True)
class TranscriptEntry:
    """One query record: the node, its answer, and the search context
    (the node's height in the current sub-poset, the remaining positive
    budget, and the sub-poset size, all at query time)."""

    node: int
    positive: bool
    height: int
    budget: int
    size: int
    derived: bool = False

    def to_json_obj(self) -> dict:
        obj = {
            "node": self.node,
            "positive": self.positive,
            "height": self.height,
            "budget": self.budget,
            "size": self.size,
        }
        if self.derived:
            obj["derived"] = True
        return obj

    @classmethod
    def from_json_obj(cls, obj: dict) -> "TranscriptEntry":
        return cls(
            node=int(obj["node"]),
            positive=bool(obj["positive"]),
            height=int(obj["height"]),
            budget=int(obj["budget"]),
            size=int(obj["size"]),
            derived=bool(obj.get("derived", False)),
        )


@dataclass(frozen=True)
class Transcript:
    """Ordered query records of one search run."""

    k0: int
    entries: tuple[TranscriptEntry, ...]
    result: Ideal | None = None

    @property
    def total_queries(self) -> int:
        return len(self.entries)

    @property
    def positive_queries(self) -> int:
        return sum(1 for e in self.entries if e.positive)

    @property
    def consulted_queries(self) -> int:
        """Queries that physically reached the oracle (non-derived)."""
        return sum(1 for e in self.entries if not e.derived)

    def to_json_obj(self) -> dict:
        return {
            "k0": self.k0,
            "entries": [e.to_json_obj() for e in self.entries],
            "result": self.result.to_json_obj() if self.result is not None else None,
        }

    def to_json_str(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Transcript":
        result = obj.get("result")
        return cls(
            k0=int(obj["k0"]),
            entries=tuple(TranscriptEntry.from_json_obj(e) for e in obj["entries"]),
            result=Ideal.from_json_obj(result) if result is not None else None,
        )

    @classmethod
    def from_json_str(cls, text: str) -> "Transcript":
        return cls.from_json_obj(json.loads(text))


class FixedIdealOracle:
    """Answers membership against a fixed ideal of a fixed poset."""

    def __init__(self, poset: Poset, ideal: Ideal):
        if ideal.generator is not None and ideal.generator not in poset:
            raise UnknownNodeId(f"generator {ideal.generator} is not in the poset")
        self.poset = poset
        self.ideal = ideal
        self.consultations = 0

    def answer(self, node: int) -> bool:
        if node not in self.poset:
            raise UnknownNodeId(f"node {node} is not in the poset")
        self.consultations += 1
        return self.ideal.contains(self.poset, node)


class CachingOracle:
    """Memoizes an inner oracle; optional derivation from order structure.

    With ``derive`` on, a node below a known-positive node is answered
    positive and a node above a known-negative node negative, without
    consulting the inner oracle.  Derivation never changes any answer
    for an inner oracle consistent with some ideal; it only reduces the
    number of inner consultations.
    """

    def __init__(self, inner: OracleSource, poset: Poset | None = None, derive: bool = False):
        if derive and poset is None:
            raise InvalidParameter("derivation needs the poset for its order structure")
        self.inner = inner
        self.poset = poset
        self.derive = derive
        self.cache: dict[int, bool] = {}
        self.consultations = 0

    def answer(self, node: int) -> bool:
        return self.answer_explained(node)[0]

    def answer_explained(self, node: int) -> tuple[bool, bool]:
        """Returns (answer, consulted_inner)."""
        if node in self.cache:
            return self.cache[node], False
        if self.derive:
            p = self.poset
            for known, value in self.cache.items():
                if value and p.dominates(known, node):
                    self.cache[node] = True
                    return True, False
                if not value and p.dominates(node, known):
                    self.cache[node] = False
                    return False, False
        value = self.inner.answer(node)
        self.consultations += 1
        self.cache[node] = value
        return value, True


class InteractiveOracle:
    """Answers supplied on demand by an external party, with validation.

    ``supply`` is called with the queried node and may block until a
    human (or remote service) provides the answer.  Each answer is
    checked against the set of ideals still consistent with everything
    answered so far; an answer compatible with none of them raises
    :class:`InconsistentAnswer` and is not recorded.
    """

    def __init__(self, poset: Poset, supply: Callable[[int], bool]):
        self.poset = poset
        self.supply = supply
        self.answered: dict[int, bool] = {}
        # candidate ideals: the empty ideal plus one per potential generator
        self._empty_alive = True
        self._generator_mask = poset.full_mask

    def answer(self, node: int) -> bool:
        if node not in self.poset:
            raise UnknownNodeId(f"node {node} is not in the poset")
        if node in self.answered:
            return self.answered[node]
        value = bool(self.supply(node))
        self.record(node, value)
        return value

    def record(self, node: int, value: bool) -> None:
        """Validate and commit an answer without consulting ``supply``."""
        if node not in self.poset:
            raise UnknownNodeId(f"node {node} is not in the poset")
        if node in self.answered:
            if self.answered[node] != value:
                raise InconsistentAnswer(f"node {node} was already answered differently")
            return
        up = self.poset.up_mask(node)
        if value:
            new_mask = self._generator_mask & up
            new_empty = False
        else:
            new_mask = self._generator_mask & ~up
            new_empty = self._empty_alive
        if not new_mask and not new_empty:
            raise InconsistentAnswer(
                f"answer {value} at node {node} contradicts every remaining ideal"
            )
        self._generator_mask = new_mask
        self._empty_alive = new_empty
        self.answered[node] = value

    def consistent_ideals(self) -> list[Ideal]:
        """Ideals compatible with every answer so far (never empty)."""
        out: list[Ideal] = []
        if self._empty_alive:
            out.append(Ideal.empty())
        out.extend(Ideal.principal(v) for v in self.poset.nodes_in(self._generator_mask))
        return out

    def resolved(self) -> Ideal | None:
        """The unique consistent ideal, once only one remains."""
        ideals = self.consistent_ideals()
        return ideals[0] if len(ideals) == 1 else None


def fixed_ideal_oracle(poset: Poset, ideal: Ideal) -> FixedIdealOracle:
    return FixedIdealOracle(poset, ideal)


def caching_wrapper(
    oracle: OracleSource, poset: Poset | None = None, derive: bool = False
) -> CachingOracle:
    return CachingOracle(oracle, poset, derive)


def interactive_oracle(poset: Poset, supply: Callable[[int], bool]) -> InteractiveOracle:
    return InteractiveOracle(poset, supply)
