"""Command-line front end.

JSON goes to stdout (or ``--out``), logs to stderr.  Exit codes: 0 success,
1 usage or parameter error, 2 verification failure, 3 solver budget
exhausted.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .analysis import CSV_HEADER, audit_lemmas, bound_table, bound_violations, write_bound_csv
from .constructions import construct_ck, construct_efficient, construct_p6k
from .exceptions import GPDomError
from .export import to_dot, to_svg
from .graph import (
    PetersenParams,
    VertexSet,
    build_petersen,
    is_dominating,
    is_efficient_dominating,
    undominated_vertices,
)
from .solver import SolveBudget, exact_gamma, exists_efficient, random_dominating_sets

log = logging.getLogger("gpdom")

EXIT_OK, EXIT_USAGE, EXIT_UNVERIFIED, EXIT_BUDGET = 0, 1, 2, 3

FAMILIES = ("ck", "thm21", "p6k", "efficient")


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """Parse ``"3..5"``, ``"4"`` or ``"3,5,7"`` into a list of ints."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            values = list(range(int(lo), int(hi) + 1))
        else:
            values = [int(part) for part in text.split(",")]
    except ValueError:
        raise UsageError(f"malformed range {text!r}") from None
    if not values:
        raise UsageError(f"empty range {text!r}")
    return values


def _params(args) -> PetersenParams:
    n, k, c = getattr(args, "n", None), getattr(args, "k", None), getattr(args, "c", None)
    if k is None:
        raise UsageError("--k is required")
    if c is not None:
        if n is not None and n != c * k:
            raise UsageError(f"--n {n} does not equal --c {c} times --k {k}")
        return PetersenParams.from_ck(c, k)
    if n is None:
        raise UsageError("give --n or --c together with --k")
    return PetersenParams.factored(n, k)


def load_witness(path: str) -> tuple[PetersenParams, VertexSet]:
    """Read ``{"n", "k", "set" | "witness": [tokens]}`` from a JSON file."""
    try:
        d = json.loads(Path(path).read_text())
        params = PetersenParams.factored(int(d["n"]), int(d["k"]))
        tokens = d["set"] if "set" in d else d["witness"]
        return params, VertexSet.from_tokens(tokens, params.n)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read witness file {path}: {exc}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _construct(family: str, args):
    if family == "p6k":
        return construct_p6k(args.k)
    if family == "efficient":
        return construct_efficient(_params(args))
    if args.c is None:
        if args.n is None or args.k is None or args.n % args.k:
            raise UsageError("the ck family needs --c and --k (or --n divisible by --k)")
        return construct_ck(args.n // args.k, args.k)
    return construct_ck(args.c, args.k)


def cmd_construct(args) -> int:
    rep = _construct(args.family, args)
    _emit(rep.to_json() + "\n", args.out)
    if not rep.verified:
        log.error("%s construction misses %s", rep.params.label(), rep.undominated.tokens())
        return EXIT_UNVERIFIED
    if not rep.size_matches:
        log.error("size %d differs from claimed %d", rep.actual_size, rep.claimed_size)
        return EXIT_UNVERIFIED
    log.info("%s %s: %d vertices, verified", rep.params.label(), rep.case, rep.actual_size)
    return EXIT_OK


def cmd_verify(args) -> int:
    params, s = load_witness(args.witness)
    g = build_petersen(params)
    dom = is_dominating(g, s)
    d = {
        "n": params.n,
        "k": params.k,
        "size": len(s),
        "dominating": dom,
        "efficient": is_efficient_dominating(g, s),
        "undominated": undominated_vertices(g, s).tokens(),
    }
    _emit(json.dumps(d) + "\n", args.out)
    return EXIT_OK if dom else EXIT_UNVERIFIED


def cmd_solve(args) -> int:
    g = build_petersen(_params(args))
    budget = SolveBudget(args.max_nodes, args.max_seconds, args.target)
    rep = exact_gamma(g, budget)
    _emit(rep.to_json() + "\n", args.out)
    log.info("%s: gamma=%d optimal=%s nodes=%d", g.params.label(), rep.gamma, rep.optimal, rep.nodes_explored)
    return EXIT_OK if rep.optimal else EXIT_BUDGET


def cmd_efficient(args) -> int:
    params = _params(args)
    found, witness = exists_efficient(build_petersen(params))
    d = {
        "n": params.n,
        "k": params.k,
        "exists": found,
        "predicted": params.n % 4 == 0 and params.k % 2 == 1,
        "witness": witness.tokens() if witness is not None else [],
    }
    _emit(json.dumps(d) + "\n", args.out)
    return EXIT_OK


def cmd_table(args) -> int:
    cs, ks = parse_range(args.c), parse_range(args.k)
    budget = SolveBudget(max_seconds=args.max_seconds) if args.max_seconds else None
    rows = bound_table(cs, ks, solve_limit=args.solve_limit, budget=budget, workers=args.workers)
    if args.format == "json":
        text = "".join(json.dumps(dict(zip(CSV_HEADER, r.values()))) + "\n" for r in rows)
    else:
        text = write_bound_csv(rows)
    _emit(text, args.out)
    for r in rows:
        if r.construction_size is None:
            log.warning("(%d,%d): construction failed verification", r.c, r.k)
    problems = bound_violations(rows)
    for p in problems:
        log.error("violation %s", p)
    return EXIT_UNVERIFIED if problems else EXIT_OK


def cmd_audit(args) -> int:
    params = _params(args)
    g = build_petersen(params)
    lines = []
    failures = 0
    for s in random_dominating_sets(g, args.count, args.seed):
        rep = audit_lemmas(g, s)
        failures += len(rep.violations)
        lines.extend(rep.json_lines() if args.all else [ln for ln, ch in zip(rep.json_lines(), rep.checks) if not ch.passed])
    summary = {"n": params.n, "k": params.k, "sets": args.count, "seed": args.seed, "violations": failures}
    lines.append(json.dumps(summary))
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_UNVERIFIED if failures else EXIT_OK


def cmd_export(args) -> int:
    if args.witness:
        if args.family:
            raise UsageError("use either --family or --witness, not both")
        params, s = load_witness(args.witness)
    elif args.family:
        rep = _construct(args.family, args)
        params, s = rep.params, rep.set
    else:
        params = _params(args)
        s = None
    g = build_petersen(params)
    text = to_svg(g, s) if args.format == "svg" else to_dot(g, s)
    _emit(text, args.out)
    return EXIT_OK


def _add_graph_args(p, need_k=True):
    p.add_argument("--n", type=int, help="number of outer vertices")
    p.add_argument("--k", type=int, required=need_k, help="inner skip")
    p.add_argument("--c", type=int, help="multiplier with n = c*k")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gpdom", description="Domination in generalized Petersen graphs")
    parser.add_argument("--quiet", action="store_true", help="suppress stderr logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build and verify an explicit dominating set")
    _add_graph_args(p)
    p.add_argument("--family", choices=FAMILIES, default="ck")
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a witness file")
    p.add_argument("--witness", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="exact domination number")
    _add_graph_args(p)
    p.add_argument("--max-nodes", type=int)
    p.add_argument("--max-seconds", type=float)
    p.add_argument("--target", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("efficient", help="search for an efficient dominating set")
    _add_graph_args(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_efficient)

    p = sub.add_parser("table", help="bound comparison table")
    p.add_argument("--c", required=True, help="range such as 3..20")
    p.add_argument("--k", required=True, help="range such as 3..20")
    p.add_argument("--solve-limit", type=int, default=40, help="solve graphs with at most this many vertices")
    p.add_argument("--max-seconds", type=float, help="per-cell solver time limit")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("audit", help="column audits on random dominating sets")
    _add_graph_args(p)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--all", action="store_true", help="emit passing checks too")
    p.add_argument("--out")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("export", help="DOT or SVG drawing")
    _add_graph_args(p, need_k=False)
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--witness")
    p.add_argument("--format", choices=("dot", "svg"), default="dot")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    logging.basicConfig(
        level=logging.CRITICAL + 1 if args.quiet else logging.INFO,
        format="%(levelname)s %(message)s",
        stream=sys.stderr,
        force=True,
    )
    try:
        return args.func(args)
    except (UsageError, GPDomError) as exc:
        log.error("%s", exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
