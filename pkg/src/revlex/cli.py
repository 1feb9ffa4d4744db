"""Command-line interface: ``revlex <subcommand> ...``.

Exit codes: 0 on success, 1 when ``verify`` finds a failing check, 2 on usage
or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import oracle
from .bounds import (
    make_pyramid,
    pyramid_average_degree,
    pyramid_edge_count,
    pyramid_expansion_certificate,
    pyramid_facet_count,
    write_sweep,
)
from .core import BitVector01
from .errors import RevlexError
from .expansion import certify_expansion
from .facets import facet_count, format_json, format_text, full_description, minimal_description
from .graph import average_degree, build_graph, edge_count_formula
from .polytope import make_polytope, maximize
from .verify import run_checks


def fmt_q(q: Fraction, decimal: int | None = None) -> str:
    """"p/q", or a fixed-point decimal with ``decimal`` digits."""
    q = Fraction(q)
    if decimal is None:
        return f"{q.numerator}/{q.denominator}"
    scaled = round(abs(q) * 10 ** decimal)
    sign = "-" if q < 0 and scaled else ""
    whole, frac = divmod(scaled, 10 ** decimal)
    return f"{sign}{whole}.{frac:0{decimal}d}" if decimal else f"{sign}{whole}"


def _polytope_from_args(args):
    if getattr(args, "v", None) is not None:
        P = make_polytope(BitVector01.parse(args.v))
    else:
        P = make_polytope(args.n)
    if getattr(args, "project", False):
        P = make_polytope(P.n)
    return P


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def cmd_describe(args) -> int:
    P = _polytope_from_args(args)
    facets = facet_count(P) if P.is_full_dimensional else None
    edges = edge_count_formula(P)
    avg = average_degree(P)
    if args.json:
        payload = P.to_json()
        payload.update(full_dimensional=P.is_full_dimensional, num_facets=facets,
                       num_edges=edges, avg_degree=fmt_q(avg, args.decimal))
        _emit(payload)
        return 0
    print(f"n: {P.n}")
    print(f"d: {P.d}")
    print(f"v: {P.v}")
    print(f"dim: {P.dim}" + ("" if P.is_full_dimensional else " (not full-dimensional)"))
    print(f"signature: {list(P.signature)}")
    print(f"block dims: {[b.cube_dim for b in P.blocks]}")
    print(f"facets: {facets if facets is not None else 'n/a (use --v with a full-dimensional v)'}")
    print(f"edges: {edges}")
    print(f"average degree: {fmt_q(avg, args.decimal)}")
    return 0


def cmd_facets(args) -> int:
    P = _polytope_from_args(args)
    rows = full_description(P) if args.full else minimal_description(P)
    sys.stdout.write(format_json(rows) if args.format == "json" else format_text(rows))
    return 0


def cmd_graph(args) -> int:
    G = build_graph(_polytope_from_args(args), vertex_cap=args.vertex_cap)
    if args.format == "dot":
        sys.stdout.write(G.to_dot())
    elif args.format == "json":
        sys.stdout.write(G.to_json())
    else:
        sys.stdout.write(G.to_edgelist())
    return 0


def _parse_objective(text: str) -> list[Fraction]:
    try:
        return [Fraction(tok.strip()) for tok in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise RevlexError(f"cannot parse objective {text!r}: {exc}") from None


def cmd_maximize(args) -> int:
    P = _polytope_from_args(args)
    value, x = maximize(P, _parse_objective(args.c))
    if args.json:
        _emit({"n": P.n, "value": fmt_q(value, args.decimal), "argmax": str(x)})
    else:
        print(f"value: {fmt_q(value, args.decimal)}")
        print(f"argmax: {x}")
    return 0


def cmd_expansion(args) -> int:
    cert = certify_expansion(args.n, audit=args.audit)
    exact = None
    if args.exact:
        exact, _ = oracle.brute_expansion(build_graph(make_polytope(args.n)))
    _emit({
        "n": cert.n,
        "phi_max": fmt_q(cert.phi_max, args.decimal),
        "lower_bound": fmt_q(cert.lower_bound, args.decimal),
        "exact": None if exact is None else fmt_q(exact, args.decimal),
        "audited": cert.audited,
    })
    return 0


def cmd_pyramid(args) -> int:
    Q = make_pyramid(args.d, args.n)
    cert = pyramid_expansion_certificate(args.d, args.n, materialize=args.n <= 512)
    out = {
        "d": Q.d, "n": Q.n, "d_tilde": Q.d_tilde, "n_tilde": Q.n_tilde,
        "apex_count": Q.apex_count,
        "num_facets": pyramid_facet_count(args.d, args.n),
        "num_edges": pyramid_edge_count(args.d, args.n),
        "avg_degree": fmt_q(pyramid_average_degree(args.d, args.n), args.decimal),
        "expansion_lower_bound": fmt_q(cert.lower_bound, args.decimal),
    }
    if args.json:
        _emit(out)
    else:
        for k, v in out.items():
            print(f"{k}: {v}")
    return 0


def cmd_sweep(args) -> int:
    if args.out == "-":
        rows = write_sweep(args.d, sys.stdout, args.exact_expansion_max)
    else:
        with open(args.out, "w", newline="") as fh:
            rows = write_sweep(args.d, fh, args.exact_expansion_max)
        print(f"wrote {rows} rows to {args.out}")
    return 0


def cmd_verify(args) -> int:
    failed = 0
    for res in run_checks(args.max_d, args.max_n):
        print(res.line(), flush=True)
        failed += not res.ok
    print(f"{'FAILED' if failed else 'OK'}: {failed} failing check(s)")
    return 1 if failed else 0


def _positive(text: str) -> int:
    try:
        val = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if val < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {val}")
    return val


def _add_source(p, allow_v=True, allow_project=False):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=_positive, help="vertex count (minimal ambient dimension)")
    if allow_v:
        g.add_argument("--v", help="spec vector as a bit string, x_0 first")
    if allow_project:
        p.add_argument("--project", action="store_true",
                       help="re-embed into ambient dimension dim(P) first")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="revlex", description="Revlex-initial 0/1-polytopes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("describe", help="dimension, signature, facet and edge counts")
    _add_source(p, allow_project=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--decimal", type=int, metavar="K")
    p.set_defaults(func=cmd_describe)

    p = sub.add_parser("facets", help="linear description")
    _add_source(p, allow_project=True)
    which = p.add_mutually_exclusive_group()
    which.add_argument("--full", action="store_true", help="complete system incl. redundant rows")
    which.add_argument("--minimal", action="store_true", help="facet-defining rows only (default)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_facets)

    p = sub.add_parser("graph", help="edges of the polytope graph")
    _add_source(p)
    p.add_argument("--format", choices=["edgelist", "dot", "json"], default="edgelist")
    p.add_argument("--vertex-cap", type=_positive, default=1 << 20)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("maximize", help="maximize a linear objective")
    _add_source(p)
    p.add_argument("--c", required=True, help='comma-separated rationals, e.g. "1,-1/2,3"')
    p.add_argument("--json", action="store_true")
    p.add_argument("--decimal", type=int, metavar="K")
    p.set_defaults(func=cmd_maximize)

    p = sub.add_parser("expansion", help="flow certificate for edge expansion >= 1")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--exact", action="store_true", help="also compute the exact expansion (n <= 22)")
    p.add_argument("--audit", action="store_true", help="rebuild and check every pair flow (n <= 64)")
    p.add_argument("--decimal", type=int, metavar="K")
    p.set_defaults(func=cmd_expansion)

    p = sub.add_parser("pyramid", help="the pyramid polytope P(d, n)")
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--decimal", type=int, metavar="K")
    p.set_defaults(func=cmd_pyramid)

    p = sub.add_parser("sweep", help="CSV over all admissible n for P(d, n)")
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--out", required=True, help="output CSV path, or - for stdout")
    p.add_argument("--exact-expansion-max", type=int, default=512, metavar="M",
                   help="measure phi_max on the built flow for n <= M (default 512)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run the oracle-equivalence suite")
    p.add_argument("--max-d", type=_positive, required=True)
    p.add_argument("--max-n", type=_positive)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except RevlexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # downstream reader closed early (e.g. `| head`); silence the flush at exit
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
