"""The general budgeted search strategy, as a step engine and a runner.

The strategy walks a pointed poset with at most ``k`` positive answers
available, following a fixed height schedule while more than one node
remains: with a single positive left it queries at the current height;
with budget covering the current height it queries at height 2; in
between it queries at height ceil((h + 1) / k).  Scheduled nodes are
always taken from a maximal chain of the current restriction, lowest
node id first.  A negative answer discards the queried node's up-set; a
positive answer restricts to it and spends one budget unit.

States are immutable values: stepping produces a new state, so what-if
previews and concurrent independent runs need no coordination.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .bounds import ceil_div
from .errors import (
    BudgetExhausted,
    InvalidParameter,
    NodeNotPending,
    NotPointed,
    NotTerminal,
)
from .oracle import OracleSource, Transcript, TranscriptEntry
from .poset import Ideal, Poset

BRANCH_SINGLE = "single-node"
BRANCH_BUDGET_ONE = "budget-one"
BRANCH_COVERS_HEIGHT = "budget-covers-height"
BRANCH_INTERIOR = "interior"


@dataclass(frozen=True)
class Decision:
    """What the strategy wants next: a query, or a conclusion."""

    kind: str  # "query" | "conclude_empty" | "conclude_principal"
    node: int | None = None
    generator: int | None = None
    height: int | None = None
    branch: str | None = None

    @classmethod
    def query(cls, node: int, height: int, branch: str) -> "Decision":
        return cls("query", node=node, height=height, branch=branch)

    @classmethod
    def conclude_empty(cls) -> "Decision":
        return cls("conclude_empty")

    @classmethod
    def conclude_principal(cls, generator: int) -> "Decision":
        return cls("conclude_principal", generator=generator)

    def to_json_obj(self) -> dict:
        if self.kind == "query":
            return {
                "kind": "query",
                "node": self.node,
                "height": self.height,
                "branch": self.branch,
            }
        if self.kind == "conclude_empty":
            return {"kind": "conclude", "result": {"kind": "empty"}}
        return {
            "kind": "conclude",
            "result": {"kind": "principal", "generator": self.generator},
        }


class SearchState:
    """One point of a search: the restriction, the budget, the history."""

    __slots__ = (
        "original",
        "alive",
        "ordered",
        "budget",
        "last_positive",
        "entries",
        "concluded",
        "_decision",
    )

    def __init__(
        self,
        original: Poset,
        alive: int,
        ordered: tuple[int, ...],
        budget: int,
        last_positive: int | None,
        entries: tuple[TranscriptEntry, ...],
        concluded: Ideal | None,
    ):
        self.original = original
        self.alive = alive
        self.ordered = ordered
        self.budget = budget
        self.last_positive = last_positive
        self.entries = entries
        self.concluded = concluded
        self._decision: Decision | None = None

    @property
    def size(self) -> int:
        return len(self.ordered)

    @property
    def current(self) -> Poset:
        """The current restriction, materialized as a poset."""
        return self.original.restrict(self.alive)

    def alive_nodes(self) -> tuple[int, ...]:
        return tuple(sorted(self.ordered))

    def is_terminal(self) -> bool:
        return self.concluded is not None or not self.ordered


def start_search(poset: Poset, k: int) -> SearchState:
    """Initial state over the full poset with budget ``k``."""
    if k < 1:
        raise InvalidParameter("the positive budget must be at least 1")
    if not poset.is_pointed():
        raise NotPointed("the search strategy requires a pointed poset")
    _, _, _, _, ordered = poset.masked_profile(poset.full_mask)
    return SearchState(poset, poset.full_mask, ordered, k, None, (), None)


def _schedule(height: int, budget: int) -> tuple[int, str]:
    """Target query height for a restriction with ``height`` and ``budget``."""
    if budget == 1:
        return height, BRANCH_BUDGET_ONE
    if budget >= height:
        return 2, BRANCH_COVERS_HEIGHT
    return ceil_div(height + 1, budget), BRANCH_INTERIOR


def next_decision(state: SearchState) -> Decision:
    """The pending query (or conclusion) for ``state``.

    Follows the flow exactly: empty restriction concludes empty; a single
    remaining node is queried regardless of budget; otherwise the height
    schedule picks a node on a maximal chain of the restriction.
    """
    if state._decision is not None:
        return state._decision
    if state.concluded is not None:
        decision = Decision.conclude_principal(state.concluded.generator)
    elif not state.ordered:
        decision = Decision.conclude_empty()
    elif state.budget < 1:
        raise BudgetExhausted("no positive queries remain")
    elif state.size == 1:
        decision = Decision.query(state.ordered[0], 1, BRANCH_SINGLE)
    else:
        _, height, ht, reach, ordered = state.original.masked_profile(
            state.alive, state.ordered
        )
        target, branch = _schedule(height, state.budget)
        node = None
        for v in ordered:
            if ht[v] == target and ht[v] + reach[v] - 1 == height:
                if node is None or v < node:
                    node = v
        decision = Decision.query(node, target, branch)
    state._decision = decision
    return decision


def apply_answer(
    state: SearchState, node: int, positive: bool, derived: bool = False
) -> SearchState:
    """Step the search with the answer for the pending query node.

    A positive at the single-node block concludes without spending
    budget; a positive elsewhere restricts to the up-set, spends one
    budget unit, and concludes if only the queried node survives.  A
    negative discards the up-set of the queried node.
    """
    pending = next_decision(state)
    if pending.kind != "query" or pending.node != node:
        raise NodeNotPending(f"node {node} is not the pending query")
    entry = TranscriptEntry(
        node=node,
        positive=positive,
        height=pending.height,
        budget=state.budget,
        size=state.size,
        derived=derived,
    )
    entries = state.entries + (entry,)
    original = state.original
    if state.size == 1:
        if positive:
            return SearchState(
                original, state.alive, state.ordered, state.budget,
                state.last_positive, entries, Ideal.principal(node),
            )
        alive = state.alive & ~original.up_mask(node)
        return SearchState(
            original, alive, (), state.budget, state.last_positive, entries, None
        )
    if positive:
        alive = state.alive & original.up_mask(node)
        ordered = tuple(v for v in state.ordered if (alive >> v) & 1)
        concluded = Ideal.principal(node) if len(ordered) == 1 else None
        return SearchState(
            original, alive, ordered, state.budget - 1, node, entries, concluded
        )
    alive = state.alive & ~original.up_mask(node)
    ordered = tuple(v for v in state.ordered if (alive >> v) & 1)
    return SearchState(
        original, alive, ordered, state.budget, state.last_positive, entries, None
    )


def resolve_conclusion(state: SearchState) -> Ideal:
    """The identified ideal of the original poset, for a terminal state.

    A run that ends with an empty restriction concludes empty only when
    no positive answer ever occurred; otherwise the last positive node
    generates the ideal (everything strictly above it was eliminated).
    """
    if not state.is_terminal():
        raise NotTerminal("the search has not concluded")
    if state.concluded is not None:
        return state.concluded
    if state.last_positive is not None:
        return Ideal.principal(state.last_positive)
    return Ideal.empty()


def run(poset: Poset, k: int, oracle: OracleSource) -> tuple[Ideal, Transcript]:
    """One-shot search: fold the step engine over oracle answers."""
    state = start_search(poset, k)
    while not state.is_terminal():
        decision = next_decision(state)
        answer, consulted = _ask(oracle, decision.node)
        state = apply_answer(state, decision.node, answer, derived=not consulted)
    ideal = resolve_conclusion(state)
    return ideal, Transcript(k0=k, entries=state.entries, result=ideal)


def _ask(oracle: OracleSource, node: int) -> tuple[bool, bool]:
    explained = getattr(oracle, "answer_explained", None)
    if explained is not None:
        return explained(node)
    return oracle.answer(node), True


def states_of_run(poset: Poset, k: int, oracle: OracleSource) -> Iterator[SearchState]:
    """Yield every state of a run, initial state first."""
    state = start_search(poset, k)
    yield state
    while not state.is_terminal():
        decision = next_decision(state)
        answer, consulted = _ask(oracle, decision.node)
        state = apply_answer(state, decision.node, answer, derived=not consulted)
        yield state


def replay_and_verify(poset: Poset, transcript: Transcript) -> list[str]:
    """Replay a transcript through the step engine and collect violations.

    Checks, per entry: the decision node matches, the recorded height /
    budget / size match the recomputed state, the height schedule holds
    whenever more than one node remains, and the restriction size
    strictly shrinks between consecutive queries (the terminal re-query
    of the last positive node is exempt).  Also checks the recorded
    result and the positive budget.  Returns a list of human-readable
    violations; empty means the transcript is faithful.
    """
    problems: list[str] = []
    state = start_search(poset, transcript.k0)
    prev_size: int | None = None
    for i, entry in enumerate(transcript.entries):
        if state.is_terminal():
            problems.append(f"entry {i}: run already terminal")
            break
        decision = next_decision(state)
        if decision.kind != "query" or decision.node != entry.node:
            problems.append(
                f"entry {i}: queried {entry.node}, strategy wants {decision}"
            )
            break
        if entry.budget != state.budget:
            problems.append(f"entry {i}: budget {entry.budget} != {state.budget}")
        if entry.size != state.size:
            problems.append(f"entry {i}: size {entry.size} != {state.size}")
        if entry.height != decision.height:
            problems.append(f"entry {i}: height {entry.height} != {decision.height}")
        if state.size > 1:
            _, cur_height, _, _, _ = poset.masked_profile(state.alive, state.ordered)
            target, _ = _schedule(cur_height, state.budget)
            if entry.height != target:
                problems.append(
                    f"entry {i}: schedule wants height {target} at"
                    f" (height={cur_height}, budget={state.budget}), got {entry.height}"
                )
        if prev_size is not None and entry.size >= prev_size:
            is_requery = (
                i == len(transcript.entries) - 1
                and entry.node == state.last_positive
            )
            if not is_requery:
                problems.append(
                    f"entry {i}: size {entry.size} did not shrink from {prev_size}"
                )
        prev_size = entry.size
        state = apply_answer(state, entry.node, entry.positive, derived=entry.derived)
    if transcript.positive_queries > transcript.k0:
        problems.append(
            f"{transcript.positive_queries} positives exceed budget {transcript.k0}"
        )
    if not problems and transcript.result is not None:
        if not state.is_terminal():
            problems.append("transcript ends before the strategy concludes")
        else:
            got = resolve_conclusion(state)
            if got != transcript.result:
                problems.append(f"result {transcript.result} != replayed {got}")
    return problems
