"""Command-line front end.

Exit codes: 0 success (or HOLDS), 1 VIOLATED, 2 usage or input error, 3 UNDECIDED.
"""

from __future__ import annotations

import argparse
import inspect
import sys
from fractions import Fraction
from typing import Iterable, Sequence

from . import families, verify
from .enumeration import all_connected, all_trees, all_trees_with_diameter, all_unicyclic, write_g6_lines
from .graph import GraphError, g6_decode, g6_encode, power, square
from .iso import minimal_forbidden
from .spectral import DEFAULT_TOL, exact_radius, spectral_radius

EXIT_OK, EXIT_VIOLATED, EXIT_USAGE, EXIT_UNDECIDED = 0, 1, 2, 3

STATUS_EXIT = {
    verify.HOLDS: EXIT_OK,
    verify.HOLDS_ON_RANGE: EXIT_OK,
    verify.VIOLATED: EXIT_VIOLATED,
    verify.UNDECIDED: EXIT_UNDECIDED,
}


def _graph_inputs(arg: str, stdin) -> Iterable[str]:
    """One graph6 string from the argument, or one per line of stdin when it is ``-``."""
    if arg != "-":
        yield arg
        return
    for line in stdin:
        line = line.strip()
        if line and not line.startswith(">>"):
            yield line


def format_radius(value: float) -> str:
    return f"{value:#.12g}"


def _cmd_rho(args, out, stdin) -> int:
    if args.power < 1:
        raise GraphError(f"--power must be >= 1, got {args.power}")
    for text in _graph_inputs(args.graph6, stdin):
        g = power(g6_decode(text), args.power)
        r = spectral_radius(g, args.tol)
        line = f"{format_radius(r.radius)} residual={r.residual:.3e}"
        if args.exact:
            ex = exact_radius(g)
            lo, hi = ex.interval
            line += f" interval=[{float(lo)!r},{float(hi)!r}] width={float(ex.width):.3e}"
            if ex.exact is not None:
                line += f" exact={ex.exact}"
        out.write(line + "\n")
    return EXIT_OK


def _cmd_square(args, out, stdin) -> int:
    for text in _graph_inputs(args.graph6, stdin):
        out.write(g6_encode(square(g6_decode(text))).decode("ascii") + "\n")
    return EXIT_OK


def _cmd_family(args, out, stdin) -> int:
    out.write(g6_encode(families.build(args.spec)).decode("ascii") + "\n")
    return EXIT_OK


def _cmd_enum(args, out, stdin) -> int:
    if args.girth is not None and args.kind != "unicyclic":
        raise GraphError("--girth applies to unicyclic enumeration only")
    if args.diameter is not None and args.kind != "trees":
        raise GraphError("--diameter applies to tree enumeration only")
    if args.kind == "trees":
        graphs = all_trees(args.n) if args.diameter is None else all_trees_with_diameter(args.n, args.diameter)
    elif args.kind == "unicyclic":
        graphs = all_unicyclic(args.n, args.girth)
    else:
        graphs = all_connected(args.n)
    write_g6_lines(graphs, out)
    return EXIT_OK


def _cmd_forbidden(args, out, stdin) -> int:
    try:
        threshold = Fraction(args.threshold)
    except (ValueError, ZeroDivisionError):
        raise GraphError(f"--threshold must be a rational number, got {args.threshold!r}") from None
    mode = "proper" if args.proper else "strict"
    write_g6_lines(minimal_forbidden(args.cls, threshold, args.n_max, mode), out)
    return EXIT_OK


def _call_with(fn, **candidates):
    accepted = inspect.signature(fn).parameters
    return fn(**{k: v for k, v in candidates.items() if k in accepted and v is not None})


def _emit(report: verify.ClaimReport, fmt: str, out) -> int:
    out.write(report.to_json() if fmt == "json" else report.to_csv())
    return STATUS_EXIT[report.status]


def _cmd_verify(args, out, stdin) -> int:
    fn = verify.CLAIMS.get(args.claim)
    if fn is None:
        raise GraphError(f"unknown claim id {args.claim!r}; known: {', '.join(verify.CLAIMS)}")
    report = _call_with(
        fn,
        n_min=args.n_min,
        n_max=args.n_max,
        seed=args.seed,
        trials=args.trials,
        jobs=args.jobs,
        timing=args.timing,
    )
    return _emit(report, args.format, out)


def _cmd_scan(args, out, stdin) -> int:
    fn = verify.SCANS[args.conjecture]
    if args.n_max < 5:
        raise GraphError(f"--n-max must be >= 5, got {args.n_max}")
    report = _call_with(fn, n_max=args.n_max, n_min=args.n_min, jobs=args.jobs, timing=args.timing)
    return _emit(report, args.format, out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphsquare",
        description="Spectral radius of graph squares: queries, enumeration and claim verification.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("rho", help="spectral radius of G (or G^K)")
    p.add_argument("graph6", help="graph6 string, or - to read one per line from stdin")
    p.add_argument("--power", type=int, default=1, help="use G^K instead of G")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--exact", action="store_true", help="also print the exact isolating interval")
    p.set_defaults(func=_cmd_rho)

    p = sub.add_parser("square", help="graph6 of G^2")
    p.add_argument("graph6")
    p.set_defaults(func=_cmd_square)

    p = sub.add_parser("family", help='build a named family, e.g. "broom:n=9,d=4,i=3"')
    p.add_argument("spec")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("enum", help="isomorphism classes as graph6 lines")
    p.add_argument("kind", choices=["trees", "unicyclic", "connected"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--girth", type=int)
    p.add_argument("--diameter", type=int)
    p.set_defaults(func=_cmd_enum)

    p = sub.add_parser("forbidden", help="minimal forbidden subgraphs for rho(G^2) above a threshold")
    p.add_argument("--class", dest="cls", choices=["tree", "unicyclic"], required=True)
    p.add_argument("--threshold", default="4")
    p.add_argument("--n-max", type=int, default=10)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--strict", action="store_true", help="rho > threshold (default)")
    mode.add_argument("--proper", action="store_true", help="rho >= threshold")
    p.set_defaults(func=_cmd_forbidden)

    jobs_help = f"worker processes (default from ${verify.JOBS_ENV}, else 1)"

    p = sub.add_parser("verify", help="run a claim checker")
    p.add_argument("claim", help="one of: " + ", ".join(verify.CLAIMS))
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--jobs", type=int, default=None, help=jobs_help)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--timing", action="store_true", help="fill runtime_ms (makes output non-reproducible)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("scan", help="conjecture scan")
    p.add_argument("conjecture", choices=sorted(verify.SCANS))
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--n-min", type=int)
    p.add_argument("--jobs", type=int, default=None, help=jobs_help)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--timing", action="store_true")
    p.set_defaults(func=_cmd_scan)
    return parser


def main(argv: Sequence[str] | None = None, out=None, stdin=None) -> int:
    out = out or sys.stdout
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "jobs", 1) is None:
        args.jobs = verify.default_jobs()
    if getattr(args, "jobs", 1) < 1:
        print("graphsquare: --jobs must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out, stdin)
    except (GraphError, ArithmeticError) as exc:
        print(f"graphsquare: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
