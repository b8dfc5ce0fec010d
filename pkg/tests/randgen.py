"""Seeded random instance generators shared by the test modules."""

from __future__ import annotations

import random

from hbtensor import HbGraph, Multiset


def random_edge(rng: random.Random, vertices, mult_max: int) -> dict[str, int]:
    support_size = rng.randint(1, min(len(vertices), 4))
    support = rng.sample(list(vertices), support_size)
    return {v: rng.randint(1, mult_max) for v in support}


def random_hbgraph(
    rng: random.Random,
    n_max: int = 8,
    p_max: int = 6,
    mult_max: int = 4,
    n_min: int = 1,
    p_min: int = 1,
) -> HbGraph:
    """Natural hb-graph with nonempty, pairwise distinct hb-edges."""
    n = rng.randint(n_min, n_max)
    p = rng.randint(p_min, p_max)
    vertices = tuple(f"v{i + 1}" for i in range(n))
    edges: list[Multiset] = []
    seen = set()
    attempts = 0
    while len(edges) < p and attempts < 200:
        attempts += 1
        e = Multiset(vertices, random_edge(rng, vertices, mult_max))
        if e not in seen:
            seen.add(e)
            edges.append(e)
    return HbGraph(vertices, edges)


def random_hypergraph(
    rng: random.Random, n_max: int = 8, k_max: int = 5, p_max: int = 6
) -> HbGraph:
    """Unit-multiplicity hb-graph with distinct nonempty hyperedges."""
    n = rng.randint(1, n_max)
    p = rng.randint(1, p_max)
    vertices = tuple(f"v{i + 1}" for i in range(n))
    edges: list[Multiset] = []
    seen = set()
    attempts = 0
    while len(edges) < p and attempts < 200:
        attempts += 1
        size = rng.randint(1, min(n, k_max))
        support = rng.sample(list(vertices), size)
        e = Multiset(vertices, {v: 1 for v in support})
        if e not in seen:
            seen.add(e)
            edges.append(e)
    return HbGraph(vertices, edges)


def random_uniform_hbgraph(
    rng: random.Random, n_max: int = 6, p_max: int = 4, k_max: int = 6
) -> HbGraph:
    """k-m-uniform natural hb-graph (every edge of m-cardinality k)."""
    n = rng.randint(1, n_max)
    k = rng.randint(1, k_max)
    p = rng.randint(1, p_max)
    vertices = tuple(f"v{i + 1}" for i in range(n))
    edges: list[Multiset] = []
    seen = set()
    attempts = 0
    while len(edges) < p and attempts < 300:
        attempts += 1
        counts: dict[str, int] = {}
        remaining = k
        while remaining:
            v = rng.choice(vertices)
            take = rng.randint(1, remaining)
            counts[v] = counts.get(v, 0) + take
            remaining -= take
        e = Multiset(vertices, counts)
        if e not in seen:
            seen.add(e)
            edges.append(e)
    return HbGraph(vertices, edges)
