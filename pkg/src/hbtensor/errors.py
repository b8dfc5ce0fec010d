"""Exception hierarchy shared across the package.

``ParseError`` covers malformed input files; everything else derives from
``DomainError`` (a violated precondition on otherwise well-formed data).
The CLI maps these to distinct exit codes.
"""

from __future__ import annotations


class HbTensorError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(HbTensorError):
    """Input file or object does not conform to the expected format."""


class DomainError(HbTensorError):
    """A precondition on the mathematical objects involved is violated."""


class UniverseMismatch(DomainError):
    """Binary multiset operation applied to multisets of different universes."""


class NotNatural(DomainError):
    """Operation requires integer multiplicities."""


class EmptyMultiset(DomainError):
    """Operation requires a nonempty multiset."""


class UnknownVertex(DomainError):
    """Vertex identifier not present in the graph."""


class UnknownEdge(DomainError):
    """Edge index out of range."""


class EmptyEdgeFamily(DomainError):
    """Operation requires at least one hb-edge."""


class EmptyEdge(DomainError):
    """Operation forbids hb-edges with empty support."""


class RepeatedEdges(DomainError):
    """Operation forbids repeated hb-edges."""


class InvalidPath(DomainError):
    """Alternation does not satisfy the m-path membership conditions."""


class NonPositiveC(DomainError):
    """Dilatation constant must be strictly positive."""


class VertexCollision(DomainError):
    """New vertex identifier already present or reserved."""


class NotUniform(DomainError):
    """Operation requires a k-m-uniform hb-graph."""


class NotAHypergraph(DomainError):
    """Operation requires all multiplicities in {0, 1}."""


class IndexOutOfRange(DomainError):
    """Tensor index outside 1..dim."""


class DimensionMismatch(DomainError):
    """Vector length does not match tensor dimension."""


class TraceMismatch(DomainError):
    """Tensor and uniformisation trace are inconsistent."""
