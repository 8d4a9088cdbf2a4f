"""Batch experiments: worst cases, sweeps over complete trees, and the
exhaustive small-instance verification corpus.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field

from .bounds import (
    FLOAT_BIAS,
    growth_lower_const,
    growth_upper_const,
    min_trials,
    query_bound,
)
from .errors import InvalidParameter, InvariantViolation, NotPointed
from .exact import DEFAULT_NODE_CAP, min_queries_recursive
from .generate import gen_chain, gen_complete_tree, gen_random_pointed
from .oracle import fixed_ideal_oracle
from .poset import Ideal, Poset
from .strategy import _schedule, replay_and_verify, run, start_search

__all__ = [
    "SweepRow",
    "rows_from_csv",
    "rows_to_csv",
    "sweep_trees",
    "verify_small_exhaustive",
    "worst_case_strategy",
    "VerifyReport",
]


def worst_case_strategy(poset: Poset, k: int) -> tuple[int, Ideal]:
    """Exact worst case of the strategy over all ideals of ``poset``.

    The strategy is deterministic, so its runs against the |p|+1 ideals
    form a decision tree whose answer paths share prefixes; walking that
    tree once is equivalent to running every ideal separately.  Returns
    the maximum transcript length and a witnessing ideal (the first one
    reached, exploring negative answers first).
    """
    if k < 1:
        raise InvalidParameter("budget must be at least 1")
    if not poset.is_pointed():
        raise NotPointed("the strategy requires a pointed poset")
    if not len(poset):
        return 0, Ideal.empty()

    index = {v: i + 1 for i, v in enumerate(poset.nodes)}
    yes_mask = {}
    for v in poset.nodes:
        mask = 0
        for g in poset.nodes_in(poset.up_mask(v)):
            mask |= 1 << index[g]
        yes_mask[v] = mask
    up = {v: poset.up_mask(v) for v in poset.nodes}
    profile = poset.masked_profile
    best_len = -1
    best_ideal: Ideal | None = None

    def ideal_of(candidates: int) -> Ideal:
        assert candidates and candidates & (candidates - 1) == 0
        bit = candidates.bit_length() - 1
        return Ideal.empty() if bit == 0 else Ideal.principal(poset.nodes[bit - 1])

    def record(length: int, candidates: int) -> None:
        nonlocal best_len, best_ideal
        if length > best_len:
            best_len = length
            best_ideal = ideal_of(candidates)

    def walk(alive: int, ordered: tuple[int, ...], budget: int, cand: int, depth: int) -> None:
        size = len(ordered)
        if size == 0:
            record(depth, cand)
            return
        if size == 1:
            node = ordered[0]
        else:
            _, height, ht, reach, _ = profile(alive, ordered)
            target, _ = _schedule(height, budget)
            node = None
            for v in ordered:
                if ht[v] == target and ht[v] + reach[v] - 1 == height:
                    if node is None or v < node:
                        node = v
        yes = cand & yes_mask[node]
        no = cand & ~yes_mask[node]
        if no:
            new_alive = alive & ~up[node]
            walk(
                new_alive,
                tuple(v for v in ordered if (new_alive >> v) & 1),
                budget,
                no,
                depth + 1,
            )
        if yes:
            if size == 1:
                record(depth + 1, yes)
            else:
                new_alive = alive & up[node]
                new_ordered = tuple(v for v in ordered if (new_alive >> v) & 1)
                if len(new_ordered) == 1:
                    record(depth + 1, yes)
                else:
                    walk(new_alive, new_ordered, budget - 1, yes, depth + 1)

    state = start_search(poset, k)
    walk(state.alive, state.ordered, k, (1 << (len(poset) + 1)) - 1, 0)
    return best_len, best_ideal


@dataclass(frozen=True)
class SweepRow:
    """One (degree, budget, height) point of a complete-tree sweep."""

    l: int
    k: int
    n: int
    tree_size: int
    f: int
    tau: int
    m_growth: float
    M_growth: float
    worst_case: int
    exact_q: int | None

    def check(self) -> None:
        """Lower-constant <= tau <= optimum <= strategy <= bound <= upper-constant.

        The upper-constant end holds for degree >= 2 only (a degree-1
        bound grows with k while the constant does not), so it is not
        enforced on degree-1 rows.
        """
        chain = [
            ("m_growth <= tau", self.m_growth - FLOAT_BIAS <= self.tau),
            ("tau <= worst_case", self.tau <= self.worst_case),
            ("worst_case <= f", self.worst_case <= self.f),
        ]
        if self.l >= 2:
            chain.append(("f <= M_growth", self.f <= self.M_growth + FLOAT_BIAS))
        if self.exact_q is not None:
            chain.append(("tau <= exact_q", self.tau <= self.exact_q))
            chain.append(("exact_q <= worst_case", self.exact_q <= self.worst_case))
        bad = [name for name, ok in chain if not ok]
        if bad:
            raise InvariantViolation(f"sweep row {self} violates: {', '.join(bad)}")


def sweep_trees(
    degree: int, k: int, n_max: int, exact_cap: int = DEFAULT_NODE_CAP
) -> list[SweepRow]:
    """Sweep complete ``degree``-ary trees for heights 1..n_max.

    ``exact_q`` is filled only while the tree fits under ``exact_cap``
    nodes; every emitted row is checked against the sandwich invariant
    and a violation aborts the sweep.
    """
    if degree < 1 or k < 1 or n_max < 1:
        raise InvalidParameter("need degree, k, n_max >= 1")
    m_const = growth_lower_const(k, degree)
    big_m = growth_upper_const(k, degree)
    rows = []
    for n in range(1, n_max + 1):
        tree = gen_complete_tree(degree, n)
        size = len(tree)
        worst, _ = worst_case_strategy(tree, k)
        exact = min_queries_recursive(tree, k) if size <= exact_cap else None
        growth = float(degree) ** (n / k)
        row = SweepRow(
            l=degree,
            k=k,
            n=n,
            tree_size=size,
            f=query_bound(k, degree, n),
            tau=min_trials(k, size),
            m_growth=m_const * growth,
            M_growth=big_m * growth,
            worst_case=worst,
            exact_q=exact,
        )
        row.check()
        rows.append(row)
    return rows


_CSV_COLUMNS = "l,k,n,tree_size,f,tau,m_growth,M_growth,worst_case,exact_q"


def rows_to_csv(rows: list[SweepRow]) -> str:
    out = io.StringIO()
    out.write(_CSV_COLUMNS + "\n")
    for r in rows:
        exact = "" if r.exact_q is None else str(r.exact_q)
        out.write(
            f"{r.l},{r.k},{r.n},{r.tree_size},{r.f},{r.tau},"
            f"{r.m_growth!r},{r.M_growth!r},{r.worst_case},{exact}\n"
        )
    return out.getvalue()


def rows_from_csv(text: str) -> list[SweepRow]:
    lines = [line for line in text.splitlines() if line]
    if not lines or lines[0] != _CSV_COLUMNS:
        raise ValueError(f"expected header {_CSV_COLUMNS!r}")
    rows = []
    for line in lines[1:]:
        parts = line.split(",")
        rows.append(
            SweepRow(
                l=int(parts[0]),
                k=int(parts[1]),
                n=int(parts[2]),
                tree_size=int(parts[3]),
                f=int(parts[4]),
                tau=int(parts[5]),
                m_growth=float(parts[6]),
                M_growth=float(parts[7]),
                worst_case=int(parts[8]),
                exact_q=None if parts[9] == "" else int(parts[9]),
            )
        )
    return rows


@dataclass
class VerifyReport:
    instances: int = 0
    runs: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def default_corpus(node_cap: int, seeds: int) -> list[tuple[str, Poset]]:
    """Chains, small complete trees, and seeded random pointed posets."""
    corpus: list[tuple[str, Poset]] = []
    for n in range(1, 9):
        corpus.append((f"chain_{n}", gen_chain(n)))
    for n in range(1, 4):
        corpus.append((f"tree_2_{n}", gen_complete_tree(2, n)))
    corpus.append(("tree_3_2", gen_complete_tree(3, 2)))
    for seed in range(seeds):
        p = gen_random_pointed(3, 4, seed)
        corpus.append((f"random_{seed}", p))
    return [(name, p) for name, p in corpus if len(p) <= node_cap]


def verify_small_exhaustive(
    node_cap: int = 64, k_max: int = 4, seeds: int = 200
) -> VerifyReport:
    """Run the strategy against every ideal of every corpus instance.

    For each instance, budget, and hidden ideal: the strategy must return
    exactly that ideal, within the positive budget, within the
    query-count bound for the instance's degree and height, and with a
    transcript that replays cleanly (height schedule included).
    """
    report = VerifyReport()
    for name, poset in default_corpus(node_cap, seeds):
        report.instances += 1
        bound_cache = {}
        for k in range(1, k_max + 1):
            bound = bound_cache.get(k)
            if bound is None:
                bound = query_bound(k, poset.degree, poset.height)
                bound_cache[k] = bound
            for ideal in poset.enumerate_ideals():
                report.runs += 1
                oracle = fixed_ideal_oracle(poset, ideal)
                got, transcript = run(poset, k, oracle)
                where = f"{name} k={k} ideal={ideal.to_json_obj()}"
                if got != ideal:
                    report.violations.append(f"{where}: identified {got.to_json_obj()}")
                    continue
                if transcript.positive_queries > k:
                    report.violations.append(
                        f"{where}: {transcript.positive_queries} positives"
                    )
                if transcript.total_queries > bound:
                    report.violations.append(
                        f"{where}: {transcript.total_queries} queries > bound {bound}"
                    )
                for problem in replay_and_verify(poset, transcript):
                    report.violations.append(f"{where}: {problem}")
    return report
