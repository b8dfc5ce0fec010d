"""Command-line front end.

Verbs: info, dual, uniformize, tensor, verify, paths, export.  Exit codes:
0 success (verify: all exact checks pass), 1 verification failure, 2 parse
error, 3 precondition violation, 4 internal error.  All human-facing indices
are 1-based; output is deterministic for fixed input and flags.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from collections import Counter
from pathlib import Path

from . import io
from .errors import DomainError, ParseError
from .hbgraph import HbGraph
from .paths import connected_components, diameter, distance
from .spectral import estimate_max_eigenvalue, spectral_bound
from .tensor import (
    DEFAULT_MAX_FULL_RECORDS,
    e_adjacency_tensor,
    edge_distribution,
    reconstruct_edges,
)

APPROACH_ALIASES = {
    "str": "straightforward",
    "sil": "silo",
    "lay": "layered",
    "straightforward": "straightforward",
    "silo": "silo",
    "layered": "layered",
}


def _approach(value: str) -> str:
    if value not in APPROACH_ALIASES:
        raise argparse.ArgumentTypeError(f"unknown approach {value!r}")
    return APPROACH_ALIASES[value]


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _max_full_records(args_full: bool) -> int:
    raw = os.environ.get("HBTENSOR_MAX_DENSE")
    if raw is None:
        return DEFAULT_MAX_FULL_RECORDS
    try:
        return int(raw)
    except ValueError as exc:
        raise DomainError(f"HBTENSOR_MAX_DENSE must be an integer, got {raw!r}") from exc


def cmd_info(args) -> int:
    h = io.load_hbgraph(args.input)
    lines = [
        f"order: {io.format_rational(h.order())}",
        f"size: {h.size()}",
    ]
    if h.p:
        r, cr = h.m_range(), h.m_corange()
        lines.append(f"m-range: {io.format_rational(r)}")
        lines.append(f"m-co-range: {io.format_rational(cr)}")
        lines.append(f"k-m-uniform: {io.format_rational(r) if r == cr else 'no'}")
    else:
        lines.extend(["m-range: n/a", "m-co-range: n/a", "k-m-uniform: n/a"])
    degrees = [h.m_degree(v) for v in h.vertices]
    if h.n and len(set(degrees)) == 1:
        lines.append(f"k-m-regular: {io.format_rational(degrees[0])}")
    else:
        lines.append("k-m-regular: no")
    isolated = h.isolated_vertices()
    lines.append("isolated: " + (" ".join(isolated) if isolated else "none"))
    lines.append("vertex m-degree degree max-mult")
    for v in h.vertices:
        lines.append(
            f"{v} {io.format_rational(h.m_degree(v))} {h.degree(v)}"
            f" {io.format_rational(h.max_multiplicity(v))}"
        )
    lines.append("incidence:")
    text = "\n".join(lines) + "\n" + io.incidence_csv(h.incidence_matrix())
    _emit(text, args.out)
    return 0


def cmd_dual(args) -> int:
    h = io.load_hbgraph(args.input)
    _emit(io.dumps(io.hbgraph_to_obj(h.dual())), args.out)
    return 0


def cmd_uniformize(args) -> int:
    from .transform import uniformize

    h = io.load_hbgraph(args.input)
    uniform, trace = uniformize(h, args.approach)
    graph_obj = io.hbgraph_to_obj(uniform)
    trace_obj = io.trace_to_obj(trace)
    if args.out:
        Path(args.out).write_text(io.dumps(graph_obj), encoding="utf-8")
        trace_path = args.trace or args.out + ".trace.json"
        Path(trace_path).write_text(io.dumps(trace_obj), encoding="utf-8")
    else:
        sys.stdout.write(io.dumps({"hbgraph": graph_obj, "trace": trace_obj}))
    return 0


def cmd_tensor(args) -> int:
    h = io.load_hbgraph(args.input)
    tensor, trace = e_adjacency_tensor(h, args.approach)
    if args.format == "json":
        body = io.dumps(io.tensor_to_obj(tensor))
    else:
        body = io.tensor_to_coo(tensor)
    Path(args.out).write_text(body, encoding="utf-8")
    trace_path = args.trace or args.out + ".trace.json"
    Path(trace_path).write_text(io.dumps(io.trace_to_obj(trace)), encoding="utf-8")
    return 0


def _true_indexed_edges(h: HbGraph) -> list[dict[int, int]]:
    position = {v: k + 1 for k, v in enumerate(h.vertices)}
    return [{position[x]: m for x, m in e.mult.items()} for e in h.edges]


def cmd_verify(args) -> int:
    h = io.load_hbgraph(args.input)
    if args.from_tensor:
        if not args.trace:
            raise DomainError("--from-tensor requires --trace")
        tensor = io.load_tensor_coo(args.from_tensor)
        trace = io.load_trace(args.trace)
    else:
        tensor, trace = e_adjacency_tensor(h, args.approach)

    n = h.n
    checks: dict[str, bool] = {}
    checks["degree_retrieval"] = all(
        tensor.row_sum(i + 1) == h.m_degree(v) for i, v in enumerate(h.vertices)
    )
    checks["total_sum"] = tensor.total_sum() == trace.r_h * h.p
    true_counts = Counter(int(e.m_cardinality()) for e in h.edges)
    expected = {r: true_counts.get(r, 0) for r in range(1, trace.r_h + 1)}
    try:
        checks["edge_distribution"] = edge_distribution(tensor, trace, h.p) == expected
    except DomainError:
        checks["edge_distribution"] = False
    try:
        recovered = reconstruct_edges(tensor, trace)
        truth = _true_indexed_edges(h)
        checks["reconstruction"] = Counter(
            tuple(sorted(e.items())) for e in recovered
        ) == Counter(tuple(sorted(e.items())) for e in truth)
    except DomainError:
        checks["reconstruction"] = False

    estimate = (
        estimate_max_eigenvalue(tensor, seed=args.seed) if tensor.order >= 2 else None
    )
    report = spectral_bound(
        tensor, trace, empirical_lambda=estimate.value if estimate else None
    )
    bound_obj = {
        "approach": report.approach,
        "r_h": report.r_h,
        "delta": io.rational_to_json(report.delta),
        "delta_star": io.rational_to_json(report.delta_star),
        "bound": io.rational_to_json(report.bound),
        "empirical_lambda": round(estimate.value, 9) if estimate else None,
        "converged": estimate.converged if estimate else None,
        "within_bound": (
            estimate.value <= float(report.bound) + 1e-6 if estimate else True
        ),
    }
    passed = all(checks.values())
    if args.bound:
        sys.stdout.write(io.dumps(bound_obj))
    else:
        sys.stdout.write(
            io.dumps({"checks": checks, "bound": bound_obj, "passed": passed})
        )
    return 0 if passed else 1


def cmd_paths(args) -> int:
    h = io.load_hbgraph(args.input)
    want_all = not (args.pair or args.components or args.diameter)
    report: dict = {}
    if args.components or want_all:
        report["components"] = [list(c) for c in connected_components(h)]
    if args.diameter or want_all:
        d = diameter(h)
        report["diameter"] = "inf" if d == math.inf else d
    if args.pair:
        x, y = args.pair
        d = distance(h, x, y)
        report["distance"] = {"from": x, "to": y, "value": "inf" if d == math.inf else d}
    _emit(io.dumps(report), args.out)
    return 0


def cmd_export(args) -> int:
    h = io.load_hbgraph(args.input)
    if args.format == "csv":
        _emit(io.incidence_csv(h.incidence_matrix()), args.out)
    elif args.format == "json":
        _emit(io.dumps(io.hbgraph_to_obj(h)), args.out)
    else:  # coo
        if not args.approach:
            raise DomainError("--format coo requires --approach")
        tensor, _ = e_adjacency_tensor(h, args.approach)
        mode = "full" if args.full else "canonical"
        _emit(io.tensor_to_coo(tensor, mode, _max_full_records(args.full)), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hbtensor",
        description="Hyper-bag-graph metrics, uniformisation and e-adjacency tensors.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("input", help="hb-graph JSON file")
        p.set_defaults(fn=fn)
        return p

    p = add("info", cmd_info, help="print structural metrics")
    p.add_argument("--out")

    p = add("dual", cmd_dual, help="write the dual hb-graph")
    p.add_argument("--out")

    p = add("uniformize", cmd_uniformize, help="m-uniformize the hb-graph")
    p.add_argument("--approach", type=_approach, required=True)
    p.add_argument("--out")
    p.add_argument("--trace")

    p = add("tensor", cmd_tensor, help="build the e-adjacency tensor")
    p.add_argument("--approach", type=_approach, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--trace")
    p.add_argument("--format", choices=("coo", "json"), default="coo")

    p = add("verify", cmd_verify, help="run the exact structural checks")
    p.add_argument("--approach", type=_approach)
    p.add_argument("--from-tensor", dest="from_tensor")
    p.add_argument("--trace")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", action="store_true", help="print only the bound report")

    p = add("paths", cmd_paths, help="distance, components, diameter")
    p.add_argument("--pair", nargs=2, metavar=("FROM", "TO"))
    p.add_argument("--components", action="store_true")
    p.add_argument("--diameter", action="store_true")
    p.add_argument("--out")

    p = add("export", cmd_export, help="export incidence CSV, JSON or tensor COO")
    p.add_argument("--format", choices=("json", "coo", "csv"), required=True)
    p.add_argument("--approach", type=_approach)
    p.add_argument("--full", action="store_true")
    p.add_argument("--out")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verb == "verify" and not args.from_tensor and args.approach is None:
        parser.error("verify requires --approach (or --from-tensor with --trace)")
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    raise SystemExit(main())
