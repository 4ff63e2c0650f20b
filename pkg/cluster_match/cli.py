"""
Command-line front end.

    cluster-match xn --b 1 --c 4 --n 7
    cluster-match sequence --b 1 --c 4 --from 3 --to 13 --at-ones
    cluster-match table --b 1 --c 4 --from -3 --to 7
    cluster-match matchpoly --family 14 --n 6
    cluster-match graph --family 14 --n 5 --tilde --format dot
    cluster-match verify --suite --max 10
    cluster-match verify --identity TILDES --from -6 --to 6
    cluster-match serve

Exit status is 0 on success, 1 when a verification fails and 2 on usage
or domain errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import List, Sequence

from .config import ClusterConfig
from .graphs import cell_counts, export, family_graph
from .laurent import CanonicalForm, format_laurent, to_json_terms
from .matching import match_count, match_polynomial
from .recurrence import SequenceCache
from .types import CaseParams, ClusterError, IdentityId, Interval
from .verifier import run_full_suite, verify_identity

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def xn_payload(b: int, c: int, n: int, config: ClusterConfig | None = None) -> dict:
    x = SequenceCache(CaseParams(b, c), config).x_at(n)
    form = CanonicalForm.of(x)
    return {
        "b": b,
        "c": c,
        "n": n,
        "text": str(form),
        "expanded": format_laurent(x),
        "terms": to_json_terms(x),
        **form.to_dict(),
    }


def sequence_payload(
    b: int, c: int, start: int, stop: int, config: ClusterConfig | None = None
) -> List[dict]:
    cache = SequenceCache(CaseParams(b, c), config)
    rows = []
    for n in Interval(start, stop):
        x = cache.x_at(n)
        rows.append({"n": n, "at_ones": cache.eval_at_ones(n), "text": str(CanonicalForm.of(x))})
    return rows


def matchpoly_payload(
    family: str, n: int, tilde: bool = False, config: ClusterConfig | None = None
) -> dict:
    g = family_graph(family, n, tilde, config)
    p = match_polynomial(g, config)
    squares, octagons = cell_counts(g)
    return {
        "graph": g.tag,
        "vertices": g.vertex_count,
        "edges": len(g.edges),
        "squares": squares,
        "octagons": octagons,
        "count": match_count(g, config),
        "text": format_laurent(p),
        "terms": to_json_terms(p),
    }


def _add_case(p: argparse.ArgumentParser, b: int = 1, c: int = 4):
    p.add_argument("--b", type=int, default=b, help="exponent at odd indices")
    p.add_argument("--c", type=int, default=c, help="exponent at even indices")


def _add_range(p: argparse.ArgumentParser, start: int, stop: int):
    p.add_argument("--from", dest="start", type=int, default=start)
    p.add_argument("--to", dest="stop", type=int, default=stop)


def _add_family(p: argparse.ArgumentParser):
    p.add_argument("--family", choices=["22", "14", "41"], default="14")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tilde", action="store_true", help="use the tilde-G graphs (family 14)")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
    )

    parser = argparse.ArgumentParser(
        prog="cluster-match",
        description="Exact rank-two cluster variables and their perfect-matching graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("xn", parents=[common], help="print x_n as numerator over monomial")
    _add_case(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--expanded", action="store_true", help="flat Laurent form")

    p = sub.add_parser("sequence", parents=[common], help="x_n over an index range")
    _add_case(p)
    _add_range(p, 3, 13)
    p.add_argument("--at-ones", action="store_true", help="print x_n(1,1) only")

    p = sub.add_parser("table", parents=[common], help="x_n table in numerator/denominator form")
    _add_case(p)
    _add_range(p, -3, 7)

    p = sub.add_parser("matchpoly", parents=[common], help="perfect-matching polynomial")
    _add_family(p)

    p = sub.add_parser("graph", parents=[common], help="export a family graph")
    _add_family(p)
    p.add_argument("--format", choices=["json", "dot"], default="json")

    p = sub.add_parser("verify", parents=[common], help="check identities exactly")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--suite", action="store_true", help="run every identity")
    group.add_argument("--identity", help="one identity id, e.g. MAIN_14")
    p.add_argument("--max", type=int, default=10, help="suite index bound")
    p.add_argument("--workers", type=int, default=None, help="suite worker threads")
    _add_range(p, -6, 10)
    _add_case(p)

    sub.add_parser("serve", parents=[common], help="serve the library as MCP tools over stdio")
    return parser


def _print_json(data):
    print(json.dumps(data, indent=2))


def _cmd_xn(args, config: ClusterConfig) -> int:
    payload = xn_payload(args.b, args.c, args.n, config)
    if args.json:
        _print_json(payload)
    else:
        print(payload["expanded"] if args.expanded else payload["text"])
    return EXIT_OK


def _cmd_sequence(args, config: ClusterConfig) -> int:
    rows = sequence_payload(args.b, args.c, args.start, args.stop, config)
    if args.json:
        _print_json(rows if not args.at_ones else [r["at_ones"] for r in rows])
    elif args.at_ones:
        print(" ".join(str(r["at_ones"]) for r in rows))
    else:
        for r in rows:
            print(f"x_{r['n']} = {r['text']}")
    return EXIT_OK


def _cmd_table(args, config: ClusterConfig) -> int:
    rows = sequence_payload(args.b, args.c, args.start, args.stop, config)
    if args.json:
        _print_json(rows)
        return EXIT_OK
    width = max(len(str(r["n"])) for r in rows) if rows else 1
    for r in rows:
        print(f"{r['n']:>{width}}  {r['at_ones']:>10}  {r['text']}")
    return EXIT_OK


def _cmd_matchpoly(args, config: ClusterConfig) -> int:
    payload = matchpoly_payload(args.family, args.n, args.tilde, config)
    if args.json:
        _print_json(payload)
    else:
        print(payload["text"])
    return EXIT_OK


def _cmd_graph(args, config: ClusterConfig) -> int:
    g = family_graph(args.family, args.n, args.tilde, config)
    sys.stdout.write(export(g, args.format))
    if args.format == "json":
        sys.stdout.write("\n")
    return EXIT_OK


def _cmd_verify(args, config: ClusterConfig) -> int:
    if args.workers is not None:
        config.with_workers(args.workers)
    if args.suite:
        reports = run_full_suite(args.max, config)
    else:
        identity = IdentityId.parse(args.identity)
        reports = [
            verify_identity(
                identity, Interval(args.start, args.stop), CaseParams(args.b, args.c), config
            )
        ]
    if args.json:
        _print_json([r.to_dict() for r in reports])
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            note = f"  {r.note}" if r.note else ""
            print(f"{status} {r.identity.value} {r.range} ({r.checked} checked){note}")
            for n, lhs, rhs in r.failures:
                print(f"  n={n}: {lhs} != {rhs}")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def _cmd_serve(args, config: ClusterConfig) -> int:
    from .mcp_server import serve

    serve(config)
    return EXIT_OK


COMMANDS = {
    "xn": _cmd_xn,
    "sequence": _cmd_sequence,
    "table": _cmd_table,
    "matchpoly": _cmd_matchpoly,
    "graph": _cmd_graph,
    "verify": _cmd_verify,
    "serve": _cmd_serve,
}


def run(argv: Sequence[str] | None = None, config: ClusterConfig | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    config = config or ClusterConfig()
    config.configure_logging(level=getattr(logging, args.log_level))
    try:
        return COMMANDS[args.command](args, config)
    except (ClusterError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
