"""Hyper-bag-graphs: ordered families of multisets over a shared vertex set.

An hb-graph generalizes a hypergraph by letting each edge be a multiset
(hb-edge) over the vertex universe.  The edge family is ordered and may
contain repeats; an edge's identity is its index.  Instances are immutable
and all queries are read-only.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import (
    DomainError,
    EmptyEdgeFamily,
    NotNatural,
    UniverseMismatch,
    UnknownEdge,
    UnknownVertex,
)
from .mset import Multiset, Rational, as_rational


@dataclass(frozen=True)
class IncidenceMatrix:
    """n x p matrix of multiplicities m_{e_j}(v_i); vertex rows, edge columns."""

    vertices: tuple[str, ...]
    entries: tuple[tuple[Rational, ...], ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def p(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def row_sums(self) -> list[Rational]:
        """Vertex m-degrees."""
        return [sum(row) for row in self.entries]

    def col_sums(self) -> list[Rational]:
        """Edge m-cardinalities."""
        return [sum(col) for col in zip(*self.entries)] if self.entries else []

    def transpose(self) -> tuple[tuple[Rational, ...], ...]:
        return tuple(zip(*self.entries)) if self.entries else ()


@dataclass(frozen=True)
class SupportHypergraph:
    """Hypergraph obtained by replacing every hb-edge with its support."""

    vertices: tuple[str, ...]
    hyperedges: tuple[tuple[str, ...], ...]


@dataclass(frozen=True)
class NumberedCopyHypergraph:
    """Hypergraph over numbered copy vertices (v, 1)..(v, max multiplicity)."""

    vertices: tuple[tuple[str, int], ...]
    edges: tuple[frozenset[tuple[str, int]], ...]


class HbGraph:
    """Immutable hb-graph: vertex list, ordered hb-edge family, optional weights."""

    __slots__ = ("_vertices", "_vindex", "_edges", "_weights")

    def __init__(
        self,
        vertices: Iterable[str],
        edges: Iterable[Multiset] = (),
        weights: Sequence[Rational] | None = None,
    ):
        vs = tuple(vertices)
        if len(set(vs)) != len(vs):
            raise DomainError("duplicate vertex identifiers")
        es = tuple(edges)
        for e in es:
            if e.universe != vs:
                raise UniverseMismatch("edge universe differs from vertex list")
        ws: tuple[Rational, ...] | None = None
        if weights is not None:
            ws = tuple(as_rational(w) for w in weights)
            if len(ws) != len(es):
                raise DomainError("one weight per hb-edge required")
            if any(w <= 0 for w in ws):
                raise DomainError("weights must be positive")
        object.__setattr__(self, "_vertices", vs)
        object.__setattr__(self, "_vindex", {v: k for k, v in enumerate(vs)})
        object.__setattr__(self, "_edges", es)
        object.__setattr__(self, "_weights", ws)

    def __setattr__(self, name, value):
        raise AttributeError("HbGraph is immutable")

    @classmethod
    def from_dicts(
        cls,
        vertices: Iterable[str],
        edges: Iterable[Mapping[str, Rational]],
        weights: Sequence[Rational] | None = None,
    ) -> "HbGraph":
        vs = tuple(vertices)
        return cls(vs, [Multiset(vs, m) for m in edges], weights)

    # -- structure ----------------------------------------------------------

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[Multiset, ...]:
        return self._edges

    @property
    def weights(self) -> tuple[Rational, ...] | None:
        return self._weights

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def p(self) -> int:
        return len(self._edges)

    def weight(self, i: int) -> Rational:
        """Edge weight, defaulting to 1 for unweighted hb-graphs."""
        self._check_edge(i)
        return self._weights[i] if self._weights is not None else 1

    def vertex_index(self, v: str) -> int:
        try:
            return self._vindex[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def _check_edge(self, i: int) -> None:
        if not 0 <= i < len(self._edges):
            raise UnknownEdge(i)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HbGraph):
            return NotImplemented
        return (
            self._vertices == other._vertices
            and self._edges == other._edges
            and self._weights == other._weights
        )

    def __hash__(self) -> int:
        return hash((self._vertices, self._edges, self._weights))

    def __repr__(self) -> str:
        return f"HbGraph(n={self.n}, p={self.p}, weighted={self._weights is not None})"

    def is_natural(self) -> bool:
        return all(
            isinstance(v, int) for e in self._edges for v in e.mult.values()
        )

    def no_repeated_edges(self) -> bool:
        return len(set(self._edges)) == len(self._edges)

    def has_empty_edges(self) -> bool:
        return any(e.is_empty() for e in self._edges)

    def edge_counter(self) -> Counter:
        """Edge family as a multiset, for order-insensitive comparison."""
        return Counter(self._edges)

    # -- metrics ------------------------------------------------------------

    def max_multiplicity(self, v: str) -> Rational:
        """Maximum multiplicity of ``v`` over all hb-edges."""
        self.vertex_index(v)
        return max((e.multiplicity(v) for e in self._edges), default=0)

    def order(self) -> Rational:
        return sum(self.max_multiplicity(v) for v in self._vertices)

    def size(self) -> int:
        return len(self._edges)

    def isolated_vertices(self) -> tuple[str, ...]:
        covered = set()
        for e in self._edges:
            covered.update(e.support())
        return tuple(v for v in self._vertices if v not in covered)

    def m_degree(self, v: str) -> Rational:
        self.vertex_index(v)
        return sum(e.multiplicity(v) for e in self._edges)

    def degree(self, v: str) -> int:
        """Degree in the support hypergraph."""
        self.vertex_index(v)
        return sum(1 for e in self._edges if v in e)

    def hb_star(self, v: str) -> Multiset:
        """Multiset of incident edge indices, each with multiplicity m_e(v)."""
        self.vertex_index(v)
        counts = {i: e.multiplicity(v) for i, e in enumerate(self._edges) if v in e}
        return Multiset(tuple(range(len(self._edges))), counts)

    def m_range(self) -> Rational:
        if not self._edges:
            raise EmptyEdgeFamily("m-range of an empty edge family")
        return max(e.m_cardinality() for e in self._edges)

    def m_corange(self) -> Rational:
        if not self._edges:
            raise EmptyEdgeFamily("m-co-range of an empty edge family")
        return min(e.m_cardinality() for e in self._edges)

    def is_k_m_uniform(self, k: Rational) -> bool:
        return self.m_range() == self.m_corange() == k

    def is_k_m_regular(self, k: Rational) -> bool:
        return all(self.m_degree(v) == k for v in self._vertices)

    # -- derived objects ----------------------------------------------------

    def incidence_matrix(self) -> IncidenceMatrix:
        rows = tuple(
            tuple(e.multiplicity(v) for e in self._edges) for v in self._vertices
        )
        return IncidenceMatrix(self._vertices, rows)

    def support_hypergraph(self) -> SupportHypergraph:
        return SupportHypergraph(
            self._vertices, tuple(e.support() for e in self._edges)
        )

    def dual(self) -> "HbGraph":
        """Dual hb-graph: one vertex per hb-edge, one hb-edge per vertex.

        Weights are dropped; isolated vertices become empty dual edges.
        """
        dual_vertices = tuple(f"~e{i + 1}" for i in range(len(self._edges)))
        dual_edges = []
        for v in self._vertices:
            counts = {
                dual_vertices[i]: e.multiplicity(v)
                for i, e in enumerate(self._edges)
                if v in e
            }
            dual_edges.append(Multiset(dual_vertices, counts))
        return HbGraph(dual_vertices, dual_edges)

    def numbered_copy_hypergraph(self) -> NumberedCopyHypergraph:
        """Expand multiplicities into numbered copy vertices.

        Each hb-edge maps to the set of copies (v, 1)..(v, m_e(v)), taking
        copy numbers as small as possible, which makes the result unique.
        """
        if not self.is_natural():
            raise NotNatural("numbered copies need integer multiplicities")
        copy_vertices = tuple(
            (v, j)
            for v in self._vertices
            for j in range(1, int(self.max_multiplicity(v)) + 1)
        )
        copy_edges = tuple(
            frozenset((x, j) for x in e.support() for j in range(1, e.multiplicity(x) + 1))
            for e in self._edges
        )
        return NumberedCopyHypergraph(copy_vertices, copy_edges)

    # -- adjacency ----------------------------------------------------------

    def are_k_adjacent(self, query: Multiset) -> bool:
        """True iff some hb-edge contains the queried multiset pointwise."""
        if query.universe != self._vertices:
            raise UniverseMismatch("query universe differs from vertex list")
        return any(e.includes(query) for e in self._edges)

    def are_estar_adjacent(self, vertices: Iterable[str], edge: int) -> bool:
        self._check_edge(edge)
        support = set(self._edges[edge].support())
        vs = list(vertices)
        for v in vs:
            self.vertex_index(v)
        return all(v in support for v in vs)

    def are_e_adjacent(self, query: Multiset, edge: int) -> bool:
        """True iff every queried vertex sits in the hb-edge with at least
        the queried multiplicity."""
        self._check_edge(edge)
        if query.universe != self._vertices:
            raise UniverseMismatch("query universe differs from vertex list")
        e = self._edges[edge]
        return all(0 < query.multiplicity(x) <= e.multiplicity(x) for x in query.support())

    def are_incident(self, i: int, j: int) -> bool:
        self._check_edge(i)
        self._check_edge(j)
        return bool(set(self._edges[i].support()) & set(self._edges[j].support()))


def two_section(support: SupportHypergraph) -> tuple[tuple[str, str], ...]:
    """Edges of the 2-section graph: pairs co-occurring in some hyperedge.

    Undirected, deduplicated, no self-loops; pairs and the result follow the
    vertex-list order.
    """
    position = {v: k for k, v in enumerate(support.vertices)}
    pairs = set()
    for he in support.hyperedges:
        members = sorted(he, key=position.__getitem__)
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                pairs.add((members[a], members[b]))
    return tuple(sorted(pairs, key=lambda uv: (position[uv[0]], position[uv[1]])))


def hb_sum(h1: HbGraph, h2: HbGraph) -> HbGraph:
    """Sum of two hb-graphs: union of vertex sets, concatenated edge family."""
    vertices = h1.vertices + tuple(v for v in h2.vertices if v not in set(h1.vertices))
    edges = [
        Multiset(vertices, dict(e.mult)) for e in h1.edges
    ] + [
        Multiset(vertices, dict(e.mult)) for e in h2.edges
    ]
    weights = None
    if h1.weights is not None or h2.weights is not None:
        weights = [h1.weight(i) for i in range(h1.p)] + [h2.weight(i) for i in range(h2.p)]
    return HbGraph(vertices, edges, weights)


def is_direct(h1: HbGraph, h2: HbGraph) -> bool:
    """True iff summing creates no repeated-edge pair across the two families."""
    total = hb_sum(h1, h2)
    first = total.edges[: h1.p]
    second = total.edges[h1.p :]
    return not (set(first) & set(second))
