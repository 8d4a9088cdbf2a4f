"""idealsearch: find a hidden ideal in a finite pointed poset.

An unknown ideal (empty, or the down-set of a single generator) hides in
a known pointed poset.  Nodes can be queried for membership, but only a
limited number of positive answers is allowed.  This package provides:

* the poset machinery (construction, restriction, order statistics),
* a general query strategy with a proven bound on total queries,
* exact optimal-query solvers for small instances,
* the bound functions and their identities as executable checks,
* batch verification harnesses, a CLI, and an interactive advisor
  service for driving a live search.
"""

from .bounds import (
    bound_report,
    chain_capacity,
    growth_lower_const,
    growth_upper_const,
    min_trials,
    query_bound,
    query_bound_closed,
)
from .errors import (
    BudgetExhausted,
    CycleDetected,
    HeightOutOfRange,
    IdealSearchError,
    InconsistentAnswer,
    InstanceTooLarge,
    InvalidParameter,
    InvariantViolation,
    NodeNotPending,
    NotPointed,
    NotTerminal,
    UnknownNodeId,
)
from .exact import (
    min_queries_game,
    min_queries_recursive,
    optimal_decision_tree,
    replay_decision_tree,
)
from .generate import (
    complete_tree_size,
    gen_chain,
    gen_complete_tree,
    gen_random_pointed,
)
from .harness import (
    SweepRow,
    rows_from_csv,
    rows_to_csv,
    sweep_trees,
    verify_small_exhaustive,
    worst_case_strategy,
)
from .oracle import (
    CachingOracle,
    FixedIdealOracle,
    InteractiveOracle,
    Transcript,
    TranscriptEntry,
    caching_wrapper,
    fixed_ideal_oracle,
    interactive_oracle,
)
from .poset import Ideal, Poset, build_poset, is_pointed
from .strategy import (
    Decision,
    SearchState,
    apply_answer,
    next_decision,
    replay_and_verify,
    resolve_conclusion,
    run,
    start_search,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExhausted",
    "CachingOracle",
    "CycleDetected",
    "Decision",
    "FixedIdealOracle",
    "HeightOutOfRange",
    "Ideal",
    "IdealSearchError",
    "InconsistentAnswer",
    "InstanceTooLarge",
    "InteractiveOracle",
    "InvalidParameter",
    "InvariantViolation",
    "NodeNotPending",
    "NotPointed",
    "NotTerminal",
    "Poset",
    "SearchState",
    "SweepRow",
    "Transcript",
    "TranscriptEntry",
    "UnknownNodeId",
    "apply_answer",
    "bound_report",
    "build_poset",
    "caching_wrapper",
    "chain_capacity",
    "complete_tree_size",
    "fixed_ideal_oracle",
    "gen_chain",
    "gen_complete_tree",
    "gen_random_pointed",
    "growth_lower_const",
    "growth_upper_const",
    "interactive_oracle",
    "is_pointed",
    "min_queries_game",
    "min_queries_recursive",
    "min_trials",
    "next_decision",
    "optimal_decision_tree",
    "query_bound",
    "query_bound_closed",
    "replay_and_verify",
    "replay_decision_tree",
    "resolve_conclusion",
    "rows_from_csv",
    "rows_to_csv",
    "run",
    "start_search",
    "sweep_trees",
    "verify_small_exhaustive",
    "worst_case_strategy",
]
