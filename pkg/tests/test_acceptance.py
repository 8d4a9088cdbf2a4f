"""Acceptance suite: every release criterion, one test each.

Each test prints a single PASS/FAIL line (run with ``pytest -s`` to see
them on success).  Criteria cover: strategy correctness over the full
small-instance corpus, agreement of the two exact solvers, the
lower/upper bound chain on exactly solved instances, the chain/trial
correspondence, the asymptotic sandwich at desk scale, the walkthrough
fixture, the ceiling/floor identity grids, the generator node-count and
height-drop properties, and the closed forms of the query bound.
"""

import random
import time

from idealsearch.bounds import (
    ceil_floor_complement,
    ceil_fraction_remainder,
    growth_lower_const,
    min_trials,
    nested_ceil_collapse,
    query_bound,
    query_bound_closed,
    query_bound_step_inequality,
)
from idealsearch.exact import min_queries_game, min_queries_recursive
from idealsearch.fixtures import demo_ideal, demo_poset
from idealsearch.generate import (
    complete_tree_size,
    gen_chain,
    gen_complete_tree,
    gen_random_pointed,
)
from idealsearch.harness import worst_case_strategy
from idealsearch.oracle import caching_wrapper, fixed_ideal_oracle
from idealsearch.strategy import replay_and_verify, run


def _report(name: str, ok: bool, started: float, detail: str = "") -> None:
    elapsed = time.time() - started
    suffix = f" ({detail})" if detail else ""
    print(f"{'PASS' if ok else 'FAIL'} {name} [{elapsed:.1f}s]{suffix}")
    assert ok, f"{name}{suffix}"


def correctness_corpus():
    corpus = [(f"chain_{n}", gen_chain(n)) for n in range(1, 9)]
    corpus += [(f"tree_2_{n}", gen_complete_tree(2, n)) for n in range(1, 4)]
    corpus.append(("tree_3_2", gen_complete_tree(3, 2)))
    corpus += [(f"random_{s}", gen_random_pointed(3, 4, s)) for s in range(200)]
    return corpus


def exact_corpus():
    """Pointed posets of at most 9 nodes: chains, trees, 200 random."""
    corpus = [gen_chain(n) for n in range(1, 9)]
    corpus += [gen_complete_tree(2, n) for n in range(1, 4)]
    corpus.append(gen_complete_tree(3, 2))
    configs = [(3, 4), (2, 4), (3, 3), (2, 3), (1, 4)]
    seed = 0
    picked = 0
    while picked < 200:
        degree, n = configs[seed % len(configs)]
        p = gen_random_pointed(degree, n, seed)
        seed += 1
        if len(p) <= 9:
            corpus.append(p)
            picked += 1
    return corpus


def test_correctness_suite():
    started = time.time()
    violations = []
    runs = 0
    for name, poset in correctness_corpus():
        for k in range(1, 5):
            bound = query_bound(k, poset.degree, poset.height)
            for ideal in poset.enumerate_ideals():
                runs += 1
                got, faithful = run(poset, k, fixed_ideal_oracle(poset, ideal))
                where = f"{name} k={k} ideal={ideal.to_json_obj()}"
                if got != ideal:
                    violations.append(f"{where}: wrong ideal {got.to_json_obj()}")
                    continue
                if faithful.positive_queries > k:
                    violations.append(f"{where}: positives over budget")
                if faithful.total_queries > bound:
                    violations.append(f"{where}: {faithful.total_queries} > {bound}")
                violations.extend(
                    f"{where}: {p}" for p in replay_and_verify(poset, faithful)
                )
                derive = caching_wrapper(fixed_ideal_oracle(poset, ideal), poset, derive=True)
                got2, derived = run(poset, k, derive)
                if got2 != ideal:
                    violations.append(f"{where}: derive mode wrong ideal")
                if derived.consulted_queries > faithful.total_queries:
                    violations.append(f"{where}: derive mode consulted more")
                if derived.total_queries > bound:
                    violations.append(f"{where}: derive mode over bound")
    elapsed = time.time() - started
    ok = not violations and elapsed < 60
    _report(
        "correctness-suite",
        ok,
        started,
        f"{runs} runs, {len(violations)} violations" + "".join(violations[:3]),
    )


def test_oracle_equivalence():
    started = time.time()
    mismatches = []
    checks = 0
    for poset in exact_corpus():
        for k in range(1, 5):
            checks += 1
            recursive = min_queries_recursive(poset, k)
            game = min_queries_game(poset, k)
            if recursive != game:
                mismatches.append((poset.to_json_obj(), k, recursive, game))
    elapsed = time.time() - started
    ok = not mismatches and elapsed < 120
    _report("oracle-equivalence", ok, started, f"{checks} instance/budget pairs")


def test_bound_chain_on_solved_instances():
    started = time.time()
    violations = []
    for poset in exact_corpus():
        for k in range(1, 5):
            optimum = min_queries_recursive(poset, k)
            worst, _ = worst_case_strategy(poset, k)
            bound = query_bound(k, poset.degree, poset.height)
            lower = min_trials(k, len(poset))
            if not lower <= optimum <= worst <= bound:
                violations.append((poset.to_json_obj(), k, lower, optimum, worst, bound))
    _report("bound-chain", not violations, started, f"{len(violations)} violations")


def test_chain_trial_correspondence():
    started = time.time()
    bad = []
    for n in range(0, 31):
        chain = gen_chain(n)
        for k in range(1, 5):
            recursive = min_queries_recursive(chain, k, node_cap=31)
            trials = min_trials(k, n)
            if recursive != trials:
                bad.append((n, k, recursive, trials))
    _report("chain-trial-correspondence", not bad, started, "n <= 30, k <= 4")


def test_growth_sandwich_sweeps():
    started = time.time()
    problems = []
    assert abs(growth_lower_const(2, 2) - 2**-0.5) < 1e-12
    for degree, k, n_max in ((2, 2, 12), (3, 3, 8)):
        m_const = growth_lower_const(k, degree)
        for n in range(1, n_max + 1):
            tree = gen_complete_tree(degree, n)
            worst, _ = worst_case_strategy(tree, k)
            tau = min_trials(k, len(tree))
            bound = query_bound(k, degree, n)
            growth = float(degree) ** (n / k)
            chain_ok = (
                m_const * growth - 1e-9 <= tau <= worst <= bound
                and bound <= k * degree * growth + 1e-9
            )
            if not chain_ok:
                problems.append((degree, k, n, m_const * growth, tau, worst, bound))
    elapsed = time.time() - started
    ok = not problems and elapsed < 300
    _report("growth-sandwich", ok, started, f"{len(problems)} violations")


def test_walkthrough_fixture():
    started = time.time()
    poset = demo_poset()
    ideal = demo_ideal()
    got, transcript = run(poset, 3, fixed_ideal_oracle(poset, ideal))
    heights = [e.height for e in transcript.entries]
    ok = (
        got == ideal
        and transcript.positive_queries <= 3
        and transcript.total_queries <= query_bound(3, 4, 6) == 37
        and replay_and_verify(poset, transcript) == []
        and heights == [3, 2, 2, 3, 2, 2]
    )
    _report(
        "walkthrough-fixture",
        ok,
        started,
        f"{transcript.total_queries} queries at heights {heights}",
    )


def test_identity_grids():
    started = time.time()
    failures = []
    checks = 0
    for k in range(2, 26):
        for n in range(1, 301):
            checks += 2
            if not ceil_floor_complement(n, k):
                failures.append(("complement", n, k))
            if not ceil_fraction_remainder(n, k):
                failures.append(("remainder", n, k))
            for i in range(0, k - 1):
                checks += 1
                if not nested_ceil_collapse(n, k, i):
                    failures.append(("nested", n, k, i))
            if n > k:
                for degree in range(1, 9):
                    checks += 1
                    if not query_bound_step_inequality(degree, n, k):
                        failures.append(("step", degree, n, k))
    elapsed = time.time() - started
    ok = not failures and elapsed < 30
    _report("identity-grids", ok, started, f"{checks} checks")


def test_generator_counts_and_height_drop():
    started = time.time()
    problems = []
    generated = []
    for degree, n in ((1, 5), (2, 4), (3, 3), (5, 3), (2, 6)):
        generated.append((degree, gen_complete_tree(degree, n)))
    for seed in range(100):
        generated.append((3, gen_random_pointed(3, 4, seed)))
    for degree, poset in generated:
        if len(poset) > complete_tree_size(degree, poset.height):
            problems.append(("size", degree, poset.to_json_obj()))
        for level in range(1, poset.height + 1):
            if len(poset.nodes_of_height(level)) > degree ** (level - 1):
                problems.append(("level", degree, level))
    # height-drop: removing up-sets of scheduled low nodes kills level j
    for seed in range(100):
        rng = random.Random(seed)
        poset = gen_random_pointed(3, 4, seed)
        j = rng.randint(1, poset.height)
        budget = len(poset.nodes_of_height(j))
        current = poset
        for _ in range(budget):
            if current.height < j:
                break
            _, height, ht, reach, ordered = current.masked_profile(current.full_mask)
            choices = [
                v for v in ordered if ht[v] <= j and ht[v] + reach[v] - 1 == height
            ]
            current = current.not_dominating(rng.choice(choices))
        if current.height >= j:
            problems.append(("height-drop", seed, j))
    _report("generator-properties", not problems, started, f"{len(problems)} problems")


def test_closed_forms_match_summation():
    started = time.time()
    mismatches = 0
    covered = 0
    for k in range(1, 26):
        for degree in range(0, 11):
            for n in range(0, 201):
                closed = query_bound_closed(k, degree, n)
                if closed is None:
                    continue
                covered += 1
                if closed != query_bound(k, degree, n):
                    mismatches += 1
    ok = mismatches == 0 and covered > 0
    _report("closed-forms", ok, started, f"{covered} covered points")
