from __future__ import annotations

import pytest

from hbtensor import HbGraph

DEMO_VERTICES = ("v1", "v2", "v3", "v4", "v5", "v6", "v7")
DEMO_EDGES = (
    {"v1": 2, "v4": 2, "v5": 1},
    {"v2": 3, "v3": 1},
    {"v3": 1, "v5": 2},
    {"v6": 1},
)


@pytest.fixture
def demo() -> HbGraph:
    """Small reference hb-graph used throughout: 7 vertices, 4 hb-edges of
    m-cardinalities 5, 4, 3, 1, one isolated vertex."""
    return HbGraph.from_dicts(DEMO_VERTICES, DEMO_EDGES)


@pytest.fixture
def trivial() -> HbGraph:
    return HbGraph(("a", "b"))
