"""Built-in sample posets used by tests, demos, and the advisor UI.

``sample_poset`` is a 17-element pointed poset of degree 4 and height 6
with a marked 6-element principal ideal.  ``demo_poset`` is a 34-element
pointed poset of degree 4 and height 6 whose marked ideal makes a good
walkthrough for the budgeted search strategy: with a budget of three
positives it is identified in six queries at heights 3, 2, 2, 3, 2, 2.
"""

from __future__ import annotations

from .generate import gen_complete_tree
from .poset import Ideal, Poset

_SAMPLE_COVERS = [
    (1, 0), (2, 0), (3, 0),
    (4, 2),
    (5, 3), (6, 3), (7, 3), (8, 3),
    (9, 4), (10, 4), (10, 5), (11, 5), (12, 7),
    (13, 10), (13, 11), (14, 12),
    (15, 13), (16, 14),
]

_DEMO_COVERS = [
    (1, 0), (2, 0), (3, 0), (4, 0),
    (5, 1), (6, 1), (7, 2), (8, 2), (8, 3), (9, 3), (10, 4), (11, 4),
    (12, 5), (13, 5), (14, 5), (15, 6), (16, 3), (16, 10), (17, 10),
    (18, 11), (19, 11),
    (20, 12), (21, 12), (22, 12), (22, 14), (23, 15), (24, 15),
    (25, 2), (25, 15), (25, 16), (26, 16), (27, 16), (28, 17), (29, 17),
    (30, 10), (30, 19), (31, 19), (32, 19),
    (33, 22), (33, 24), (33, 27), (33, 28),
]


def sample_poset() -> Poset:
    """17 nodes, degree 4, height 6, unique minimal element 0."""
    return Poset(range(17), _SAMPLE_COVERS)


def sample_ideal() -> Ideal:
    """The marked ideal of ``sample_poset``: nodes {0, 2, 3, 4, 5, 10}."""
    return Ideal.principal(10)


def demo_poset() -> Poset:
    """34 nodes, degree 4, height 6, unique minimal element 0."""
    return Poset(range(34), _DEMO_COVERS)


def demo_ideal() -> Ideal:
    """The marked ideal of ``demo_poset``: nodes {0, 3, 4, 10, 16, 27}."""
    return Ideal.principal(27)


# The walkthrough query sequence on demo_poset with budget 3: six queries,
# alternating restriction both ways, ending at the ideal's generator.
DEMO_WALKTHROUGH = (
    (6, False),
    (1, False),
    (4, True),
    (16, True),
    (26, False),
    (27, True),
)


def tree_poset() -> Poset:
    """The complete 5-ary tree of height 3 (31 nodes)."""
    return gen_complete_tree(5, 3)


def builtin_fixtures() -> dict[str, Poset]:
    return {
        "sample": sample_poset(),
        "tree": tree_poset(),
        "demo": demo_poset(),
    }
