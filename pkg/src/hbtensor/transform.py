"""Elementary hb-graph operations and m-uniformisation pipelines.

Uniformisation pads every hb-edge to the m-range r_H with null vertices so
that all edges share the same m-cardinality.  Three strategies exist:

* ``straightforward``: one shared null vertex ``__N1`` absorbs the full
  deficit of each edge.
* ``silo``: a per-cardinality null vertex ``__Nr`` pads every edge of
  m-cardinality r with multiplicity r_H - r.
* ``layered``: cumulative null vertices ``__Lk``; an edge of m-cardinality c
  ends up containing ``__Lc`` .. ``__L{r_H-1}``, each once.

Every output edge carries the dilatation weight c_r = r_H / r of its level.
The returned trace records the null-vertex index assignment and the output
edge order, which is sorted by (m-cardinality, input index).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import (
    DomainError,
    EmptyEdge,
    EmptyEdgeFamily,
    NonPositiveC,
    NotNatural,
    RepeatedEdges,
    VertexCollision,
)
from .hbgraph import HbGraph
from .mset import Multiset, Rational, as_rational

STRAIGHTFORWARD = "straightforward"
SILO = "silo"
LAYERED = "layered"
APPROACHES = (STRAIGHTFORWARD, SILO, LAYERED)

RESERVED_PREFIX = "__"


@dataclass(frozen=True)
class UniformisationTrace:
    """Bookkeeping needed to interpret tensor indices and reverse the pipeline."""

    approach: str
    r_h: int
    null_vertices: Mapping[str, int]  # null-vertex id -> tensor index (1-based)
    n_a: int
    layer_coeffs: Mapping[int, Fraction]  # level r -> c_r = r_H / r
    edge_provenance: tuple[int, ...]  # output edge index -> input edge index


def canonical_weighting(h: HbGraph) -> HbGraph:
    """Set every edge weight to 1."""
    return HbGraph(h.vertices, h.edges, [1] * h.p)


def dilatation(h: HbGraph, c: Rational) -> HbGraph:
    """Multiply all edge weights by the constant c > 0."""
    c = as_rational(c)
    if c <= 0:
        raise NonPositiveC(f"dilatation constant must be positive, got {c}")
    return HbGraph(h.vertices, h.edges, [h.weight(i) * c for i in range(h.p)])


def _extended_edges(vertices, edges) -> list[Multiset]:
    return [Multiset(vertices, dict(e.mult)) for e in edges]


def y_complement(h: HbGraph, y: str) -> HbGraph:
    """Append vertex y to every edge with multiplicity r_H - m-cardinality."""
    if y in h.vertices:
        raise VertexCollision(y)
    if not h.is_natural():
        raise NotNatural("y-complement needs integer multiplicities")
    if not h.edges:
        raise EmptyEdgeFamily("y-complement needs at least one hb-edge")
    r_h = h.m_range()
    vertices = h.vertices + (y,)
    edges = []
    for e in h.edges:
        counts = dict(e.mult)
        counts[y] = r_h - e.m_cardinality()
        edges.append(Multiset(vertices, counts))
    return HbGraph(vertices, edges, h.weights)


def vertex_increase(h: HbGraph, y: str, alpha: int) -> HbGraph:
    """Append vertex y to every edge with the fixed multiplicity alpha."""
    if y in h.vertices:
        raise VertexCollision(y)
    if not isinstance(alpha, int) or alpha < 1:
        raise DomainError(f"alpha must be a positive integer, got {alpha!r}")
    vertices = h.vertices + (y,)
    edges = []
    for e in h.edges:
        counts = dict(e.mult)
        counts[y] = alpha
        edges.append(Multiset(vertices, counts))
    return HbGraph(vertices, edges, h.weights)


def merge(family: Iterable[HbGraph]) -> HbGraph:
    """Concatenate edge families over the ordered union of the vertex sets."""
    members = list(family)
    vertices: list[str] = []
    seen: set[str] = set()
    for h in members:
        for v in h.vertices:
            if v not in seen:
                seen.add(v)
                vertices.append(v)
    vs = tuple(vertices)
    edges = []
    weights = []
    weighted = any(h.weights is not None for h in members)
    for h in members:
        edges.extend(_extended_edges(vs, h.edges))
        weights.extend(h.weight(i) for i in range(h.p))
    return HbGraph(vs, edges, weights if weighted else None)


def decompose(h: HbGraph) -> tuple[HbGraph, ...]:
    """Split into sub-hb-graphs by m-cardinality.

    Position r - 1 of the result holds the r-m-uniform part (possibly with an
    empty edge family); concatenating all parts recovers the input up to edge
    order within levels.
    """
    if not h.is_natural():
        raise NotNatural("decomposition needs integer multiplicities")
    if h.has_empty_edges():
        raise EmptyEdge("decomposition forbids empty hb-edges")
    if not h.edges:
        return ()
    r_h = h.m_range()
    levels = []
    for r in range(1, r_h + 1):
        picked = [i for i, e in enumerate(h.edges) if e.m_cardinality() == r]
        weights = [h.weight(i) for i in picked] if h.weights is not None else None
        levels.append(HbGraph(h.vertices, [h.edges[i] for i in picked], weights))
    return tuple(levels)


def _validate_uniformize_input(h: HbGraph) -> None:
    if not h.edges:
        raise EmptyEdgeFamily("uniformisation needs at least one hb-edge")
    if not h.is_natural():
        raise NotNatural("uniformisation needs integer multiplicities")
    if h.has_empty_edges():
        raise EmptyEdge("uniformisation forbids empty hb-edges")
    if not h.no_repeated_edges():
        raise RepeatedEdges("uniformisation forbids repeated hb-edges")
    for v in h.vertices:
        if v.startswith(RESERVED_PREFIX):
            raise VertexCollision(f"vertex id {v!r} uses the reserved prefix '__'")


def uniformize(h: HbGraph, approach: str) -> tuple[HbGraph, UniformisationTrace]:
    """Build the r_H-m-uniform weighted hb-graph for the given approach.

    Input weights are ignored: the pipelines start from the unweighted
    structure and the output carries the dilatation coefficients.  User
    weights only enter at tensor-construction time.
    """
    if approach not in APPROACHES:
        raise DomainError(f"unknown approach {approach!r}; expected one of {APPROACHES}")
    _validate_uniformize_input(h)
    base = HbGraph(h.vertices, h.edges)
    n = base.n
    r_h = base.m_range()
    dilated = [
        dilatation(canonical_weighting(level), Fraction(r_h, r))
        for r, level in enumerate(decompose(base), start=1)
    ]

    if approach == STRAIGHTFORWARD:
        uniform = y_complement(merge(dilated), "__N1")
        null_vertices = {"__N1": n + 1}
    elif approach == SILO:
        lifted = [
            vertex_increase(level, f"__N{r}", r_h - r) if r < r_h else level
            for r, level in enumerate(dilated, start=1)
        ]
        uniform = merge(lifted)
        null_vertices = {f"__N{r}": n + r for r in range(1, r_h)}
    else:
        accumulated = dilated[0]
        for k in range(1, r_h):
            accumulated = merge(
                [vertex_increase(accumulated, f"__L{k}", 1), dilated[k]]
            )
        uniform = accumulated
        null_vertices = {f"__L{k}": n + k for k in range(1, r_h)}

    cardinalities = [e.m_cardinality() for e in h.edges]
    provenance = tuple(sorted(range(h.p), key=lambda i: (cardinalities[i], i)))
    trace = UniformisationTrace(
        approach=approach,
        r_h=r_h,
        null_vertices=null_vertices,
        n_a=len(null_vertices),
        layer_coeffs={r: Fraction(r_h, r) for r in range(1, r_h + 1)},
        edge_provenance=provenance,
    )
    return uniform, trace
