"""Canonical sparse symmetric hypermatrices and e-adjacency tensors.

A symmetric tensor of order r and dimension d stores one canonical entry per
index multiset (a nondecreasing tuple of length r, indices 1..d); every
permutation of a stored tuple denotes the same logical entry.  All values are
exact rationals.

The e-adjacency tensor of an hb-graph contributes one canonical entry per
hb-edge: the index multiset of its uniformized edge, with value

    (product of the multiplicities' factorials) / (r_H - 1)!

scaled by the user edge weight when present.  This single folded constant
makes the degree-retrieval and total-sum identities hold exactly, and yields
diagonal entries equal to r_H precisely for full-multiplicity singleton
edges.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    DimensionMismatch,
    DomainError,
    EmptyEdge,
    EmptyEdgeFamily,
    EmptyMultiset,
    IndexOutOfRange,
    NotAHypergraph,
    NotNatural,
    NotUniform,
    RepeatedEdges,
    TraceMismatch,
    VertexCollision,
)
from .hbgraph import HbGraph
from .mset import Multiset, Rational
from .transform import (
    RESERVED_PREFIX,
    SILO,
    UniformisationTrace,
    uniformize,
)

DEFAULT_MAX_FULL_RECORDS = 10**7


def _multinomial(counts: Iterable[int]) -> int:
    counts = list(counts)
    total = sum(counts)
    value = math.factorial(total)
    for c in counts:
        value //= math.factorial(c)
    return value


def _distinct_permutations(counts: Counter):
    """Distinct permutations of a multiset of indices, lexicographically."""
    total = sum(counts.values())
    prefix: list[int] = []

    def rec():
        if len(prefix) == total:
            yield tuple(prefix)
            return
        for idx in sorted(counts):
            if counts[idx] > 0:
                counts[idx] -= 1
                prefix.append(idx)
                yield from rec()
                prefix.pop()
                counts[idx] += 1

    yield from rec()


class SymTensor:
    """Immutable sparse symmetric hypermatrix with exact rational entries."""

    __slots__ = ("_order", "_dim", "_entries")

    def __init__(self, order: int, dim: int, entries: Mapping[tuple[int, ...], Rational]):
        if order < 1:
            raise DomainError("tensor order must be >= 1")
        if dim < 0:
            raise DomainError("tensor dimension must be >= 0")
        canonical: dict[tuple[int, ...], Fraction] = {}
        for key, raw in entries.items():
            key = tuple(key)
            if len(key) != order:
                raise DomainError(f"index tuple {key} has length != order {order}")
            if any(not 1 <= i <= dim for i in key):
                raise IndexOutOfRange(f"index tuple {key} outside 1..{dim}")
            if tuple(sorted(key)) != key:
                raise DomainError(f"index tuple {key} is not sorted")
            value = Fraction(raw)
            if value != 0:
                canonical[key] = value
        object.__setattr__(self, "_order", order)
        object.__setattr__(self, "_dim", dim)
        object.__setattr__(self, "_entries", canonical)

    def __setattr__(self, name, value):
        raise AttributeError("SymTensor is immutable")

    @property
    def order(self) -> int:
        return self._order

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def entries(self) -> Mapping[tuple[int, ...], Fraction]:
        return dict(self._entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymTensor):
            return NotImplemented
        return (
            self._order == other._order
            and self._dim == other._dim
            and self._entries == other._entries
        )

    def __hash__(self) -> int:
        return hash((self._order, self._dim, tuple(sorted(self._entries.items()))))

    def __repr__(self) -> str:
        return f"SymTensor(order={self._order}, dim={self._dim}, nnz={len(self._entries)})"

    def canonical_count(self) -> int:
        return len(self._entries)

    def canonical_items(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self._entries.items())

    def entries_rle(self) -> list[tuple[tuple[tuple[int, int], ...], Fraction]]:
        """Run-length view: ((index, multiplicity), ...) per canonical entry."""
        out = []
        for key, value in self.canonical_items():
            counts = Counter(key)
            out.append((tuple(sorted(counts.items())), value))
        return out

    def get(self, idx: Sequence[int]) -> Fraction:
        """Logical entry for any index permutation; zero when absent."""
        key = tuple(sorted(idx))
        if len(key) != self._order:
            raise DimensionMismatch(f"expected {self._order} indices, got {len(key)}")
        if any(not 1 <= i <= self._dim for i in key):
            raise IndexOutOfRange(f"index tuple {key} outside 1..{self._dim}")
        return self._entries.get(key, Fraction(0))

    def logical_nonzero_count(self) -> int:
        """Number of nonzero positions in the full symmetric expansion."""
        return sum(_multinomial(Counter(k).values()) for k in self._entries)

    def total_sum(self) -> Fraction:
        """Sum over all logical entries."""
        return sum(
            (v * _multinomial(Counter(k).values()) for k, v in self._entries.items()),
            Fraction(0),
        )

    def row_sum(self, i: int) -> Fraction:
        """Sum of all logical entries whose first index is ``i``."""
        if not 1 <= i <= self._dim:
            raise IndexOutOfRange(f"index {i} outside 1..{self._dim}")
        total = Fraction(0)
        for key, value in self._entries.items():
            counts = Counter(key)
            if i not in counts:
                continue
            rest = [m for j, m in counts.items() if j != i]
            perms_first = _multinomial([counts[i] - 1] + rest)
            total += value * perms_first
        return total

    def apply(self, x: Sequence) -> list:
        """Left contraction (A x^{r-1})_i over all dimensions."""
        if len(x) != self._dim:
            raise DimensionMismatch(f"vector length {len(x)} != dim {self._dim}")
        result = [Fraction(0)] * self._dim
        for key, value in self._entries.items():
            counts = Counter(key)
            for i, mu in counts.items():
                rest = [m for j, m in counts.items() if j != i]
                coeff = _multinomial([mu - 1] + rest)
                monomial = value * coeff
                for j, m in counts.items():
                    monomial *= x[j - 1] ** (m - (1 if j == i else 0))
                result[i - 1] += monomial
        return result

    def polynomial(self) -> "HbPolynomial":
        """Homogeneous polynomial P(z) = sum a_{i_1..i_r} z_{i_1}..z_{i_r}."""
        monomials: dict[tuple[int, ...], Fraction] = {}
        for key, value in self._entries.items():
            counts = Counter(key)
            exponents = tuple(counts.get(i, 0) for i in range(1, self._dim + 1))
            coeff = value * _multinomial(counts.values())
            monomials[exponents] = monomials.get(exponents, Fraction(0)) + coeff
        return HbPolynomial(degree=self._order, dim=self._dim, monomials=monomials)

    def export_coo(
        self, mode: str = "canonical", max_records: int = DEFAULT_MAX_FULL_RECORDS
    ) -> list[tuple[tuple[int, ...], Fraction]]:
        """COO records, either one per canonical entry or fully expanded.

        Full mode emits every distinct index permutation and refuses to
        expand more than ``max_records`` records.
        """
        if mode == "canonical":
            return self.canonical_items()
        if mode != "full":
            raise DomainError(f"unknown export mode {mode!r}")
        total = self.logical_nonzero_count()
        if total > max_records:
            raise DomainError(
                f"full export would emit {total} records (limit {max_records})"
            )
        records = []
        for key, value in self.canonical_items():
            for perm in _distinct_permutations(Counter(key)):
                records.append((perm, value))
        return records


@dataclass(frozen=True)
class HbPolynomial:
    """Polynomial attached to a tensor, as exponent-vector -> coefficient."""

    degree: int
    dim: int
    monomials: Mapping[tuple[int, ...], Fraction]

    def evaluate(self, z: Sequence) -> Fraction:
        if len(z) != self.dim:
            raise DimensionMismatch(f"vector length {len(z)} != dim {self.dim}")
        total = Fraction(0)
        for exponents, coeff in self.monomials.items():
            term = coeff
            for zi, e in zip(z, exponents):
                if e:
                    term *= zi**e
            total += term
        return total


# -- constructions ----------------------------------------------------------


def _natural_counts(m: Multiset) -> dict[str, int]:
    counts = {}
    for x, v in m.mult.items():
        if not isinstance(v, int):
            raise NotNatural(f"non-integer multiplicity for {x!r}")
        counts[x] = v
    return counts


def mset_hypermatrix(a: Multiset, normalized: bool) -> SymTensor:
    """Hypermatrix representation of a natural multiset.

    Unnormalized: value 1 on every permutation of the support indices taken
    with their multiplicities.  Normalized: value (prod of multiplicity
    factorials) / (r-1)! on the same tuples, which makes the logical total
    equal the m-cardinality r.
    """
    counts = _natural_counts(a)
    if not counts:
        raise EmptyMultiset("hypermatrix representation of an empty multiset")
    position = {x: k + 1 for k, x in enumerate(a.universe)}
    key = tuple(sorted(position[x] for x in counts for _ in range(counts[x])))
    r = len(key)
    if normalized:
        value = Fraction(
            math.prod(math.factorial(v) for v in counts.values()),
            math.factorial(r - 1),
        )
    else:
        value = Fraction(1)
    return SymTensor(order=r, dim=len(a.universe), entries={key: value})


def elementary_tensor(h: HbGraph) -> SymTensor:
    """Normalized adjacency hypermatrix of a single-edge hb-graph."""
    if h.p != 1:
        raise DomainError("elementary hb-graph must have exactly one hb-edge")
    return mset_hypermatrix(h.edges[0], normalized=True)


def uniform_tensor(h: HbGraph) -> SymTensor:
    """Adjacency hypermatrix of a k-m-uniform hb-graph (sum of elementary ones).

    Weights are ignored; the weighted variant is the e-adjacency tensor.
    """
    if not h.edges:
        raise EmptyEdgeFamily("uniform tensor needs at least one hb-edge")
    if not h.is_natural():
        raise NotNatural("uniform tensor needs integer multiplicities")
    if not h.no_repeated_edges():
        raise RepeatedEdges("uniform tensor forbids repeated hb-edges")
    k = h.m_range()
    if k != h.m_corange():
        raise NotUniform("hb-edges have differing m-cardinalities")
    if k == 0:
        raise EmptyEdge("uniform tensor forbids empty hb-edges")
    entries: dict[tuple[int, ...], Fraction] = {}
    for e in h.edges:
        t = mset_hypermatrix(e, normalized=True)
        ((key, value),) = t.entries.items()
        entries[key] = entries.get(key, Fraction(0)) + value
    return SymTensor(order=k, dim=h.n, entries=entries)


def _edge_entry(uniform_edge: Multiset, position: Mapping[str, int], r_h: int):
    counts = uniform_edge.mult
    key = tuple(sorted(position[x] for x in counts for _ in range(counts[x])))
    value = Fraction(
        math.prod(math.factorial(v) for v in counts.values()),
        math.factorial(r_h - 1),
    )
    return key, value


def e_adjacency_tensor(
    h: HbGraph, approach: str
) -> tuple[SymTensor, UniformisationTrace]:
    """e-adjacency tensor of a natural hb-graph, one canonical entry per edge.

    Order r_H; dimension n+1 (straightforward) or n+r_H-1 (silo, layered;
    n when r_H = 1).  User edge weights scale the entries linearly.
    """
    uniform, trace = uniformize(h, approach)
    position = {v: k + 1 for k, v in enumerate(uniform.vertices)}
    entries: dict[tuple[int, ...], Fraction] = {}
    for out_idx, edge in enumerate(uniform.edges):
        key, value = _edge_entry(edge, position, trace.r_h)
        value *= h.weight(trace.edge_provenance[out_idx])
        entries[key] = entries.get(key, Fraction(0)) + value
    tensor = SymTensor(order=trace.r_h, dim=uniform.n, entries=entries)
    return tensor, trace


def hypergraph_tensor(hg: HbGraph) -> tuple[SymTensor, UniformisationTrace]:
    """e-adjacency tensor of a hypergraph (all multiplicities in {0, 1}).

    Built directly from the per-hyperedge formula: a hyperedge of cardinality
    k gets the index multiset of its vertices plus the null index (n+k)
    repeated k_max - k times, with value (k_max - k)! / (k_max - 1)!.  This
    coincides entrywise with the silo construction.
    """
    for e in hg.edges:
        if any(v != 1 for v in e.mult.values()):
            raise NotAHypergraph("hyperedges must have multiplicities in {0, 1}")
    if not hg.edges:
        raise EmptyEdgeFamily("hypergraph tensor needs at least one hyperedge")
    if hg.has_empty_edges():
        raise EmptyEdge("hyperedges must be nonempty")
    if not hg.no_repeated_edges():
        raise RepeatedEdges("hypergraph tensor forbids repeated hyperedges")
    for v in hg.vertices:
        if v.startswith(RESERVED_PREFIX):
            raise VertexCollision(f"vertex id {v!r} uses the reserved prefix '__'")
    n = hg.n
    k_max = hg.m_range()
    position = {v: k + 1 for k, v in enumerate(hg.vertices)}
    entries: dict[tuple[int, ...], Fraction] = {}
    for i, e in enumerate(hg.edges):
        k_i = e.cardinality()
        indices = [position[v] for v in e.support()]
        if k_i < k_max:
            indices.extend([n + k_i] * (k_max - k_i))
        key = tuple(sorted(indices))
        value = Fraction(math.factorial(k_max - k_i), math.factorial(k_max - 1))
        value *= hg.weight(i)
        entries[key] = entries.get(key, Fraction(0)) + value
    dim = n + k_max - 1 if k_max > 1 else n
    cardinalities = [e.m_cardinality() for e in hg.edges]
    trace = UniformisationTrace(
        approach=SILO,
        r_h=k_max,
        null_vertices={f"__N{r}": n + r for r in range(1, k_max)},
        n_a=max(k_max - 1, 0),
        layer_coeffs={r: Fraction(k_max, r) for r in range(1, k_max + 1)},
        edge_provenance=tuple(
            sorted(range(hg.p), key=lambda i: (cardinalities[i], i))
        ),
    )
    return SymTensor(order=k_max, dim=dim, entries=entries), trace


# -- information retrieval ---------------------------------------------------


def _check_trace(t: SymTensor, trace: UniformisationTrace) -> int:
    """Validate tensor/trace consistency; return the original vertex count."""
    if trace.r_h != t.order:
        raise TraceMismatch(f"trace r_H {trace.r_h} != tensor order {t.order}")
    n = t.dim - trace.n_a
    if n < 0:
        raise TraceMismatch("more null vertices than tensor dimensions")
    expected = set(range(n + 1, t.dim + 1))
    if set(trace.null_vertices.values()) != expected:
        raise TraceMismatch("null-vertex indices do not fill n+1..dim")
    return n


def edge_distribution(
    t: SymTensor, trace: UniformisationTrace, total_edges: int
) -> dict[int, int]:
    """Recover the number of input edges per m-cardinality from the tensor.

    Uses only tensor entries, the trace, and the total edge count (needed for
    the top level).  Returns a count for every level 1..r_H, zeros included.
    """
    n = _check_trace(t, trace)
    r_h = trace.r_h
    counts: dict[int, int] = {}
    if trace.approach == "straightforward":
        null = n + 1
        for j in range(1, r_h):
            acc = Fraction(0)
            for key, value in t.entries.items():
                key_counts = Counter(key)
                if key_counts.get(null, 0) != r_h - j:
                    continue
                rest = [m for i, m in key_counts.items() if i != null]
                acc += value * _multinomial([key_counts[null] - 1] + rest)
            counts[j] = _as_count(acc / (r_h - j))
    elif trace.approach == "silo":
        for j in range(1, r_h):
            counts[j] = _as_count(t.row_sum(n + j) / (r_h - j))
    elif trace.approach == "layered":
        cumulative = [t.row_sum(n + j) for j in range(1, r_h)]
        previous = Fraction(0)
        for j in range(1, r_h):
            counts[j] = _as_count(cumulative[j - 1] - previous)
            previous = cumulative[j - 1]
    else:
        raise TraceMismatch(f"unknown approach {trace.approach!r}")
    counts[r_h] = total_edges - sum(counts.values())
    if counts[r_h] < 0:
        raise TraceMismatch("recovered counts exceed the total edge count")
    return counts


def _as_count(value: Fraction) -> int:
    if value.denominator != 1 or value < 0:
        raise TraceMismatch(f"recovered edge count {value} is not a natural number")
    return int(value)


def reconstruct_edges(
    t: SymTensor, trace: UniformisationTrace
) -> list[dict[int, int]]:
    """Delete null-vertex indices from every canonical entry.

    Returns the recovered edge family as multiplicity mappings over the
    original vertex indices (1-based), sorted by canonical key.  Edge order
    within the original family is not recoverable.
    """
    n = _check_trace(t, trace)
    family = []
    for key, _ in t.canonical_items():
        counts = Counter(key)
        edge = {i: m for i, m in sorted(counts.items()) if i <= n}
        if not edge:
            raise TraceMismatch(f"entry {key} has no original-vertex index")
        family.append(edge)
    return family


def reconstruct_hbgraph(
    t: SymTensor, trace: UniformisationTrace, vertices: Sequence[str]
) -> HbGraph:
    """Rebuild the (unweighted) hb-graph from a tensor and its trace."""
    n = _check_trace(t, trace)
    if len(vertices) != n:
        raise TraceMismatch(f"expected {n} vertex names, got {len(vertices)}")
    vs = tuple(vertices)
    edges = [
        Multiset(vs, {vs[i - 1]: m for i, m in family.items()})
        for family in reconstruct_edges(t, trace)
    ]
    return HbGraph(vs, edges)
