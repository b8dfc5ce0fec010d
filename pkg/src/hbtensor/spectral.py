"""Eigenvalue bound for e-adjacency tensors and an empirical estimator.

Every eigenvalue of an e-adjacency tensor satisfies

    |lambda| <= max(Delta, Delta*) + r_H

where Delta and Delta* are the maximal m-degrees over original and null
vertices (both readable off the tensor as row sums).  The power iteration
below produces a lower estimate of the largest H-eigenvalue, so the bound
can be checked empirically.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import DomainError
from .tensor import SymTensor, _check_trace, _multinomial
from .transform import LAYERED, SILO, STRAIGHTFORWARD, UniformisationTrace


@dataclass(frozen=True)
class PowerIterationResult:
    value: float
    converged: bool
    iterations: int


@dataclass(frozen=True)
class SpectralBoundReport:
    approach: str
    r_h: int
    delta: Fraction
    delta_star: Fraction
    bound: Fraction
    empirical_lambda: float | None = None


def spectral_bound(
    t: SymTensor, trace: UniformisationTrace, empirical_lambda: float | None = None
) -> SpectralBoundReport:
    """Exact bound max(Delta, Delta*) + r_H from the tensor's row sums."""
    n = _check_trace(t, trace)
    delta = max((t.row_sum(i) for i in range(1, n + 1)), default=Fraction(0))
    delta_star = max(
        (t.row_sum(i) for i in range(n + 1, t.dim + 1)), default=Fraction(0)
    )
    return SpectralBoundReport(
        approach=trace.approach,
        r_h=trace.r_h,
        delta=delta,
        delta_star=delta_star,
        bound=max(delta, delta_star) + trace.r_h,
        empirical_lambda=empirical_lambda,
    )


def delta_star_closed_form(
    approach: str, r_h: int, level_counts: Mapping[int, int]
) -> int:
    """Maximal null-vertex m-degree from the edge-cardinality distribution."""
    below = range(1, r_h)
    if approach == STRAIGHTFORWARD:
        return sum((r_h - j) * level_counts.get(j, 0) for j in below)
    if approach == SILO:
        return max(((r_h - j) * level_counts.get(j, 0) for j in below), default=0)
    if approach == LAYERED:
        return sum(level_counts.get(j, 0) for j in below)
    raise DomainError(f"unknown approach {approach!r}")


def estimate_max_eigenvalue(
    t: SymTensor,
    iterations: int = 10_000,
    tol: float = 1e-10,
    seed: int | None = None,
) -> PowerIterationResult:
    """Shifted higher-order power iteration on the positive orthant.

    Iterates x <- normalize((A x^{r-1} + x^{[r-1]})^{1/(r-1)}) from a random
    positive start and reports the Rayleigh-style quotient
    sum_i x_i (A x^{r-1})_i / sum_i x_i^r of the last iterate.  For a
    nonnegative symmetric tensor this quotient never exceeds the largest
    H-eigenvalue, so the reported value always respects the spectral bound.
    Convergence is not guaranteed; the flag reports whether the iterate
    stabilized within ``tol``.
    """
    if t.order < 2:
        raise DomainError("power iteration needs tensor order >= 2")
    entries = [(key, float(v)) for key, v in t.canonical_items()]
    if any(v < 0 for _, v in entries):
        raise DomainError("power iteration needs nonnegative entries")
    d = t.dim
    if d == 0 or not entries:
        return PowerIterationResult(value=0.0, converged=True, iterations=0)
    r = t.order

    # contraction coefficients per (entry, target index)
    plans = []
    for key, v in entries:
        counts = Counter(key)
        per_index = []
        for i, mu in counts.items():
            rest = [m for j, m in counts.items() if j != i]
            coeff = v * _multinomial([mu - 1] + rest)
            powers = [(j, m - (1 if j == i else 0)) for j, m in counts.items()]
            per_index.append((i - 1, coeff, [(j - 1, m) for j, m in powers if m]))
        plans.append(per_index)

    def contract(x: list[float]) -> list[float]:
        y = [0.0] * d
        for per_index in plans:
            for i0, coeff, powers in per_index:
                term = coeff
                for j0, m in powers:
                    term *= x[j0] ** m
                y[i0] += term
        return y

    rng = random.Random(seed)
    x = [rng.uniform(0.5, 1.5) for _ in range(d)]
    top = max(x)
    x = [xi / top for xi in x]

    rayleigh = 0.0
    converged = False
    used = 0
    for used in range(1, iterations + 1):
        y = contract(x)
        denom = sum(xi**r for xi in x)
        rayleigh = sum(xi * yi for xi, yi in zip(x, y)) / denom
        shifted = [yi + xi ** (r - 1) for xi, yi in zip(x, y)]
        nxt = [s ** (1.0 / (r - 1)) for s in shifted]
        top = max(nxt)
        if top == 0.0:
            return PowerIterationResult(value=0.0, converged=True, iterations=used)
        nxt = [v / top for v in nxt]
        if max(abs(a - b) for a, b in zip(nxt, x)) < tol:
            x = nxt
            converged = True
            break
        x = nxt

    if converged:
        y = contract(x)
        denom = sum(xi**r for xi in x)
        rayleigh = sum(xi * yi for xi, yi in zip(x, y)) / denom
    return PowerIterationResult(value=rayleigh, converged=converged, iterations=used)
