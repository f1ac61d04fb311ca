"""Command-line interface.

Subcommands: exact (polynomial and point evaluation), region (membership
certificate and cycle budgets), approx (certified approximation with an
oracle check when the graph is small enough), validate (corpus suites).

Exit codes: 0 success, 1 internal or parse error, 2 point outside the
certified region, 3 cap exceeded.
"""

from __future__ import annotations

import argparse
import cmath
import json
import math
import re
import sys

from .errors import (
    DivergentBoundError,
    GraphParseError,
    PointOutsideRegionError,
    SizeLimitError,
    TruncationCapError,
    UnsupportedDegreeError,
)
from .exact import char_poly_sachs, matching_poly, phi_polynomial
from .graph import load_graph
from .interpolate import approximate_phi
from .region import certify_region, optimal_a, z_max
from .validation import DEFAULT_SEED, run_suites

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_OUTSIDE = 2
EXIT_CAP = 3


def _complex_arg(text: str) -> complex:
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected 're,im', got {text!r}")


def _pair(value: complex) -> list[float]:
    return [value.real, value.imag]


def _add_common(sp, with_point=True):
    # let values like "-1,0" pass as arguments rather than option strings
    sp._negative_number_matcher = re.compile(r"^-\d")
    sp.add_argument("--graph", help="path to an edge-list or JSON graph file")
    if with_point:
        sp.add_argument("--x", type=_complex_arg, help="complex as 're,im'")
        sp.add_argument("--y", type=_complex_arg, default=0j)
        sp.add_argument("--z", type=_complex_arg, default=0j)
    sp.add_argument("--a", type=float, default=None, help="auxiliary parameter")
    sp.add_argument("--delta", type=int, default=None, help="analytic degree bound")
    sp.add_argument("--girth-refine", action="store_true")
    sp.add_argument("--eps", type=float, default=0.01)
    sp.add_argument("--m-cap", type=int, default=12)
    sp.add_argument("--enum-cap", type=int, default=16)
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--json", dest="json_path", help="write the report here")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sesquipoly",
        description="Exact and certified-approximate evaluation of the "
        "sesquivalent graph polynomial.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_exact = sub.add_parser("exact", help="exact polynomial / point value")
    _add_common(p_exact)
    p_exact.add_argument(
        "--specializations",
        action="store_true",
        help="also emit the characteristic and matching polynomials",
    )
    p_exact.set_defaults(func=cmd_exact)

    p_region = sub.add_parser("region", help="zero-free-region certificate")
    _add_common(p_region)
    p_region.set_defaults(func=cmd_region)

    p_approx = sub.add_parser("approx", help="certified approximation")
    _add_common(p_approx)
    p_approx.set_defaults(func=cmd_approx)

    p_val = sub.add_parser("validate", help="run the corpus suites")
    _add_common(p_val, with_point=False)
    p_val.add_argument(
        "--suite",
        action="append",
        default=None,
        help="suite name (repeatable): specialization, derivative, region, "
        "optimality, approx, or all",
    )
    p_val.add_argument("--samples", type=int, default=200)
    p_val.add_argument("--points", type=int, default=6)
    p_val.add_argument("--max-n", type=int, default=12)
    p_val.set_defaults(func=cmd_validate)

    return parser


def _emit(payload, json_path=None):
    text = json.dumps(payload, indent=2) + "\n"
    if json_path:
        with open(json_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _require_point(args):
    if args.x is None:
        raise ValueError("--x is required for this command")
    return args.x, args.y, args.z


def cmd_exact(args) -> dict:
    if not args.graph:
        raise ValueError("--graph is required for 'exact'")
    graph = load_graph(args.graph)
    poly = phi_polynomial(graph, limit=args.enum_cap)
    payload = poly.to_json_dict()
    if args.x is not None:
        x, y, z = _require_point(args)
        payload["value"] = _pair(poly.evaluate(x, y, z))
    if args.specializations:
        payload["char_poly"] = [str(c) for c in char_poly_sachs(graph, args.enum_cap)]
        payload["matching_poly"] = [
            str(c) for c in matching_poly(graph, args.enum_cap)
        ]
    return payload


def _resolve_delta(args, graph):
    if args.delta is not None:
        if graph is not None and args.delta < graph.max_degree():
            raise ValueError(
                f"--delta {args.delta} is below the graph's max degree "
                f"{graph.max_degree()}"
            )
        return args.delta
    if graph is None:
        raise ValueError("--graph or --delta is required")
    return graph.max_degree()


def cmd_region(args) -> dict:
    graph = load_graph(args.graph) if args.graph else None
    delta = _resolve_delta(args, graph)
    x, y, z = _require_point(args)
    girth_val = None
    if args.girth_refine:
        if graph is None:
            raise ValueError("--girth-refine needs --graph")
        girth_val = graph.girth()
    opt = optimal_a(delta, abs(x), abs(y))
    a_used = args.a if args.a is not None else (opt.a if opt.admissible else math.log(2.0))
    cert = certify_region(delta, a_used, x, y, z, girth=girth_val)
    payload = {
        "delta": delta,
        "a": a_used,
        "girth": girth_val,
        "certificate": cert.to_json_dict(),
        "z_max_at_a": z_max(delta, abs(x), abs(y), a=a_used),
        "optimal_a": {"a": opt.a, "t": opt.t, "admissible": opt.admissible},
        "z_max_at_optimal_a": (
            z_max(delta, abs(x), abs(y)) if opt.admissible else None
        ),
    }
    return payload


def cmd_approx(args) -> dict:
    if not args.graph:
        raise ValueError("--graph is required for 'approx'")
    graph = load_graph(args.graph)
    delta = args.delta
    if delta is None:
        delta = max(2, graph.max_degree())
    x, y, z = _require_point(args)
    res = approximate_phi(
        graph, x, y, z, args.eps, a=args.a, delta_max=delta, m_cap=args.m_cap
    )
    payload = {
        "phi_hat": _pair(res.phi_hat),
        "epsilon": args.eps,
        "rho": res.plan.rho,
        "m": res.plan.m,
        "a": res.plan.a,
        "b": [_pair(v) for v in res.series.b],
        "tail_bound": res.series.tail_bound,
        "plan": res.plan.to_json_dict(),
    }
    if graph.n <= args.enum_cap:
        oracle = phi_polynomial(graph, limit=args.enum_cap).evaluate(x, y, z)
        payload["oracle_phi"] = _pair(oracle)
        payload["eta_abs"] = abs(cmath.log(res.phi_hat / oracle))
    return payload


def cmd_validate(args) -> int:
    extra = []
    if args.graph:
        extra.append(("user-graph", load_graph(args.graph)))
    names = args.suite if args.suite else ["all"]
    results = run_suites(
        names,
        seed=args.seed,
        samples=args.samples,
        points=args.points,
        max_n=args.max_n,
        extra_graphs=extra,
    )
    for res in results:
        sys.stdout.write(res.summary() + "\n")
        for msg in res.messages:
            sys.stdout.write(f"  - {msg}\n")
    total_failed = sum(r.failed for r in results)
    sys.stdout.write(
        f"total: {sum(r.passed for r in results)} passed, {total_failed} failed\n"
    )
    if args.json_path:
        report = {
            "suites": [
                {
                    "name": r.name,
                    "passed": r.passed,
                    "failed": r.failed,
                    "messages": r.messages,
                }
                for r in results
            ],
            "ok": total_failed == 0,
        }
        _emit(report, args.json_path)
    return EXIT_OK if total_failed == 0 else EXIT_ERROR


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "validate":
            return cmd_validate(args)
        payload = args.func(args)
    except GraphParseError as exc:
        _emit({"error": "parse-error", "detail": str(exc)})
        return EXIT_ERROR
    except PointOutsideRegionError as exc:
        _emit({"error": "point-outside-region", "reason": exc.reason,
               "detail": str(exc)})
        return EXIT_OUTSIDE
    except (SizeLimitError, TruncationCapError) as exc:
        _emit({"error": "cap-exceeded", "detail": str(exc)})
        return EXIT_CAP
    except (UnsupportedDegreeError, DivergentBoundError, ValueError, OSError) as exc:
        _emit({"error": "invalid-request", "detail": str(exc)})
        return EXIT_ERROR
    _emit(payload, args.json_path)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
