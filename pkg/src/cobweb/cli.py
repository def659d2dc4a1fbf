"""Command-line front end: tables, poset exports, verification sweeps, benchmarks.

Exit status contract: 0 success, 1 verification failure (any counterexample
or benchmark mismatch), 2 usage error, 3 guard refusal (enumeration or dense
matrix over its cap).  All numeric data output is exact decimal; timings are
wall-clock, labeled non-deterministic, and formatted in fixed point.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import Sequence

from . import chains, fibcalc, zeta
from .poset import CobwebPoset, Vertex, build_cobweb

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2
EXIT_GUARD = 3

# Vertex materialization grows as F(depth + 2); past this depth the CLI warns.
DEPTH_WARNING_THRESHOLD = 25


def _warn(message: str) -> None:
    print(f"warning: {message}", file=sys.stderr)


def _warn_depth(depth: int) -> None:
    if depth > DEPTH_WARNING_THRESHOLD:
        _warn(
            f"depth {depth} implies O(F({depth + 2})) vertices; "
            f"outputs beyond depth {DEPTH_WARNING_THRESHOLD} get very large"
        )


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _vertex(text: str) -> Vertex:
    level, sep, index = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected LEVEL:INDEX, got {text!r}")
    try:
        return Vertex(int(level), int(index))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LEVEL:INDEX, got {text!r}") from None


def _resolve_limit(args: argparse.Namespace) -> int:
    limit = args.unsafe_enumeration_limit
    if limit is None:
        return chains.DEFAULT_ENUMERATION_LIMIT
    _warn(f"enumeration guard overridden to {limit} predicted chains")
    return limit


def _emit(body: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(body)
    else:
        out.write_text(body)


def _hasse_dot(P: CobwebPoset) -> str:
    """DOT digraph of the Hasse diagram: nodes v{level}_{index}, edges low -> high."""
    lines = ["digraph cobweb {", "  rankdir=BT;"]
    for s in range(1, P.depth + 1):
        group = " ".join(f"{v.node_id()};" for v in P.level_vertices(s))
        lines.append(f"  {{ rank=same; {group} }}")
    for s in range(1, P.depth):
        for x in P.level_vertices(s):
            for y in P.level_vertices(s + 1):
                lines.append(f"  {x.node_id()} -> {y.node_id()};")
    lines.append("}")
    return "".join(line + "\n" for line in lines)


def _cmd_fib(args: argparse.Namespace) -> int:
    print(fibcalc.fib(args.n))
    return EXIT_OK


def _cmd_fibfact(args: argparse.Namespace) -> int:
    print(fibcalc.fib_factorial(args.n))
    return EXIT_OK


def _cmd_falling(args: argparse.Namespace) -> int:
    print(fibcalc.falling_f_factorial(args.n, args.k))
    return EXIT_OK


def _cmd_binom(args: argparse.Namespace) -> int:
    print(fibcalc.fibonomial(args.n, args.k))
    return EXIT_OK


def _cmd_row(args: argparse.Namespace) -> int:
    row = fibcalc.fibonomial_row(args.n)
    sep = "," if args.format == "csv" else " "
    print(sep.join(str(v) for v in row))
    return EXIT_OK


def _cmd_build(args: argparse.Namespace) -> int:
    _warn_depth(args.depth)
    P = build_cobweb(args.depth)
    sizes = P.level_sizes
    edges = sum(a * b for a, b in zip(sizes, sizes[1:]))
    print(f"depth={P.depth}")
    print(f"level_sizes={','.join(str(s) for s in sizes)}")
    print(f"vertices={P.vertex_count}")
    print(f"edges={edges}")
    return EXIT_OK


def _cmd_export(args: argparse.Namespace) -> int:
    _warn_depth(args.depth)
    P = build_cobweb(args.depth)
    if args.format == "csv":
        body = zeta.zeta_matrix(P).to_csv()
    else:
        body = _hasse_dot(P)
    _emit(body, args.out)
    return EXIT_OK


def _cmd_chains(args: argparse.Namespace) -> int:
    limit = _resolve_limit(args)
    _warn_depth(args.n)
    P = build_cobweb(args.n)
    start = args.from_vertex
    P.check_vertex(start)
    if start.level == args.n:
        predicted = 1
    else:
        predicted = chains.count_layer_chains_formula(start.level, args.n)
    if predicted > limit:
        raise chains.EnumerationGuardError(predicted, limit)
    for chain in chains.iter_chains(P, start, args.n):
        print(" ".join(v.node_id() for v in chain))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    limit = _resolve_limit(args)
    observations = [1, 2, 3] if args.obs == "all" else [int(args.obs)]
    reports = [chains.verify_observation(o, args.max_n, limit) for o in observations]
    if args.format == "structured":
        for report in reports:
            sys.stdout.write(report.to_text())
    else:
        for report in reports:
            status = "PASS" if report.passed else "FAIL"
            print(f"Observation {report.observation}: {status} ({len(report.cases)} cases, max_n={report.max_n})")
            for c in report.counterexamples:
                where = f" start={c.start.node_id()}" if c.start is not None else ""
                print(f"  counterexample: k={c.k} n={c.n}{where} formula={c.formula} oracle={c.oracle}")
        print(f"RESULT: {'PASS' if all(r.passed for r in reports) else 'FAIL'}")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFICATION


def _cmd_bench(args: argparse.Namespace) -> int:
    limit = _resolve_limit(args)
    P = build_cobweb(args.max_n)
    print("# wall-clock timings below are non-deterministic; counts are exact")
    for n in range(1, args.max_n + 1):
        t0 = time.perf_counter()
        formula = chains.count_from_root_formula(n)
        formula_s = time.perf_counter() - t0
        try:
            t0 = time.perf_counter()
            enumerated = chains.enumerate_from_root(P, n, limit)
            enum_s = time.perf_counter() - t0
        except chains.EnumerationGuardError as exc:
            print(
                f"guard: enumeration for n={n} predicts {exc.predicted} chains "
                f"over the limit of {exc.limit}; skipped",
                file=sys.stderr,
            )
            print(f"n={n} formula={formula} formula_s={formula_s:.6f} enumeration=skipped enumeration_s=- match=-")
            continue
        match = "yes" if enumerated == formula else "no"
        print(
            f"n={n} formula={formula} formula_s={formula_s:.6f} "
            f"enumeration={enumerated} enumeration_s={enum_s:.6f} match={match}"
        )
        if enumerated != formula:
            return EXIT_VERIFICATION
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cobweb",
        description="Exact Fibonomial tables and cobweb-poset chain counting, formula vs enumeration.",
    )
    sub = parser.add_subparsers(dest="verb", required=True, metavar="<verb>")

    p = sub.add_parser("fib", help="print the n-th Fibonacci number")
    p.add_argument("n", type=_nonnegative)
    p.set_defaults(handler=_cmd_fib)

    p = sub.add_parser("fibfact", help="print the n-th F-factorial")
    p.add_argument("n", type=_nonnegative)
    p.set_defaults(handler=_cmd_fibfact)

    p = sub.add_parser("falling", help="print the falling F-factorial with k factors")
    p.add_argument("n", type=_nonnegative)
    p.add_argument("k", type=_nonnegative)
    p.set_defaults(handler=_cmd_falling)

    p = sub.add_parser("binom", help="print the Fibonomial coefficient")
    p.add_argument("n", type=_nonnegative)
    p.add_argument("k", type=_nonnegative)
    p.set_defaults(handler=_cmd_binom)

    p = sub.add_parser("row", help="print one row of the Fibonomial triangle")
    p.add_argument("n", type=_nonnegative)
    p.add_argument("--format", choices=["plain", "csv"], default="plain")
    p.set_defaults(handler=_cmd_row)

    p = sub.add_parser("build", help="print the shape of the cobweb poset at a depth")
    p.add_argument("depth", type=_positive)
    p.set_defaults(handler=_cmd_build)

    p = sub.add_parser("export", help="export the incidence matrix (csv) or Hasse diagram (dot)")
    p.add_argument("depth", type=_positive)
    p.add_argument("--format", choices=["csv", "dot"], required=True)
    p.add_argument("--out", type=Path, default=None, help="write to a file instead of stdout")
    p.set_defaults(handler=_cmd_export)

    p = sub.add_parser("chains", help="list maximal chains up to level n, one per line")
    p.add_argument("n", type=_positive, help="target level")
    p.add_argument("--from", dest="from_vertex", type=_vertex, default=Vertex(1, 0),
                   metavar="LEVEL:INDEX", help="fixed start vertex (default 1:0, the root)")
    p.add_argument("--unsafe-enumeration-limit", type=_positive, default=None)
    p.set_defaults(handler=_cmd_chains)

    p = sub.add_parser("verify", help="sweep the counting observations, formula vs oracle")
    p.add_argument("--obs", choices=["1", "2", "3", "all"], default="all")
    p.add_argument("--max-n", type=_positive, default=7)
    p.add_argument("--format", choices=["plain", "structured"], default="plain")
    p.add_argument("--unsafe-enumeration-limit", type=_positive, default=None)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("bench", help="time formula counting against DFS enumeration")
    p.add_argument("max_n", type=_positive)
    p.add_argument("--unsafe-enumeration-limit", type=_positive, default=None)
    p.set_defaults(handler=_cmd_bench)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Parse argv and execute one verb; returns the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed its diagnostic
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.handler(args)
    except (chains.EnumerationGuardError, zeta.MatrixSizeError) as exc:
        print(f"guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
