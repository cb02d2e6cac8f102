"""Command-line front end.

Subcommands cover enumeration, rank lookups, toggling, the generator
families, exact group orders and the verification harness.  Exit codes:
0 success (or all claims passed), 1 verification failure, 2 usage error,
3 resource bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .engine import build_chain
from .families import block_swap, family, prime_family, toggle_permutation
from .fibindex import FIB_CEILING, FibCeilingError, fib, rank, unrank
from .graphs import (
    IndependentSet,
    PathGraph,
    enumerate_independent_sets,
    format_set_text,
    parse_set_text,
    toggle_path,
)
from .perms import format_cycles
from .verify import all_claim_ids, verify_all

__all__ = ["main"]

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

# a permutation or enumeration of this many points is the largest the CLI
# will materialize; chains follow the engine's documented ample range
MAX_MATERIALIZED_DEGREE = 1_000_000
MAX_CHAIN_DEGREE = 377


class ResourceBoundError(RuntimeError):
    """Request exceeds the configured resource bounds."""


def _degree(n: int) -> int:
    try:
        return fib(n + 2)
    except FibCeilingError as exc:
        raise ResourceBoundError(str(exc)) from None


def _check_materializable(n: int) -> int:
    degree = _degree(n)
    if degree > MAX_MATERIALIZED_DEGREE:
        raise ResourceBoundError(
            f"degree {degree} exceeds the materialization bound {MAX_MATERIALIZED_DEGREE}"
        )
    return degree


def _emit(args: argparse.Namespace, text_lines: list[str], payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        for line in text_lines:
            print(line)


def _cmd_enumerate(args: argparse.Namespace) -> int:
    _check_materializable(args.n)
    sets = enumerate_independent_sets(PathGraph(args.n))
    rows = [(i + 1, str(s)) for i, s in enumerate(sets)]
    _emit(
        args,
        [f"{idx} {text}" for idx, text in rows],
        [{"index": idx, "set": text} for idx, text in rows],
    )
    return EXIT_OK


def _cmd_index(args: argparse.Namespace) -> int:
    _degree(args.n)
    idx = rank(args.n, parse_set_text(args.set))
    _emit(args, [str(idx)], {"index": idx})
    return EXIT_OK


def _cmd_unindex(args: argparse.Namespace) -> int:
    _degree(args.n)
    text = format_set_text(unrank(args.n, args.idx))
    _emit(args, [text], {"set": text})
    return EXIT_OK


def _cmd_toggle(args: argparse.Namespace) -> int:
    _degree(args.n)
    independent = IndependentSet(PathGraph(args.n), parse_set_text(args.set))
    text = str(toggle_path(args.n, args.k, independent))
    _emit(args, [text], {"set": text})
    return EXIT_OK


def _cmd_generators(args: argparse.Namespace) -> int:
    _check_materializable(args.n)
    members = prime_family(args.n) if args.prime else family(args.n).members
    lines = [format_cycles(t) for t in members]
    _emit(
        args,
        lines,
        {"n": args.n, "degree": _degree(args.n), "prime": bool(args.prime), "members": lines},
    )
    return EXIT_OK


def _cmd_hat_t(args: argparse.Namespace) -> int:
    _check_materializable(args.n)
    text = format_cycles(block_swap(args.n))
    _emit(args, [text], {"permutation": text})
    return EXIT_OK


def _cmd_toggle_perm(args: argparse.Namespace) -> int:
    _check_materializable(args.n)
    text = format_cycles(toggle_permutation(args.n, args.k))
    _emit(args, [text], {"permutation": text})
    return EXIT_OK


def _cmd_order(args: argparse.Namespace) -> int:
    degree = _check_materializable(args.n)
    if degree > MAX_CHAIN_DEGREE:
        raise ResourceBoundError(
            f"degree {degree} exceeds the chain bound {MAX_CHAIN_DEGREE}"
        )
    if args.prime:
        generators = list(prime_family(args.n))
    elif args.toggles:
        generators = [toggle_permutation(args.n, k) for k in range(1, args.n + 1)]
    else:
        generators = list(family(args.n).members)
    order = build_chain(generators, degree).order()
    _emit(args, [str(order)], {"order": str(order)})
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.max_n + 2 > FIB_CEILING:
        raise ResourceBoundError(f"max-n {args.max_n} exceeds the Fibonacci ceiling")
    claims = [args.claim] if args.claim else None
    if claims and claims[0] not in all_claim_ids():
        print(
            f"unknown claim {claims[0]!r}; valid: {', '.join(all_claim_ids())}",
            file=sys.stderr,
        )
        return EXIT_USAGE
    reports = verify_all(args.max_n, profile=args.profile, claims=claims)
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for r in reports:
        counts[r.status] += 1
    summary = (
        f"{counts['pass']} passed, {counts['fail']} failed, {counts['skipped']} skipped"
    )
    _emit(
        args,
        [r.text_line() for r in reports] + [summary],
        {"reports": [r.json_dict() for r in reports], "summary": counts},
    )
    if counts["fail"]:
        return EXIT_VERIFY_FAIL
    if counts["skipped"] and args.profile == "full":
        # the full profile promises completeness; a skip means a bound bit
        return EXIT_RESOURCE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        help="output format (default: text)",
    )

    parser = argparse.ArgumentParser(
        prog="togglegroup",
        description=(
            "Independent sets of the path on 1..n, their toggles, the "
            "Fibonacci-indexed generator families and the verification harness."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("enumerate", _cmd_enumerate, "list independent sets in rank order")
    p.add_argument("--n", type=int, required=True)

    p = add("index", _cmd_index, "rank of an independent set")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--set", required=True, help='set text like "{1,3}"')

    p = add("unindex", _cmd_unindex, "independent set at a rank")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--idx", type=int, required=True)

    p = add("toggle", _cmd_toggle, "toggle vertex k in an independent set")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--set", required=True)

    p = add("generators", _cmd_generators, "print the generator family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--prime", action="store_true", help="only members with k <= n-2")

    p = add("hat-t", _cmd_hat_t, "print the block-swap involution")
    p.add_argument("--n", type=int, required=True)

    p = add("toggle-perm", _cmd_toggle_perm, "permutation of ranks induced by a toggle")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = add("order", _cmd_order, "exact order of the generated group")
    p.add_argument("--n", type=int, required=True)
    which = p.add_mutually_exclusive_group()
    which.add_argument("--prime", action="store_true", help="reduced family")
    which.add_argument("--toggles", action="store_true", help="toggle-induced permutations")

    p = add("verify", _cmd_verify, "run the verification harness")
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    p.add_argument("--profile", choices=("quick", "full"), default="quick")
    p.add_argument("--claim", help="restrict to one claim id")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except ResourceBoundError as exc:
        print(f"resource bound: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except FibCeilingError as exc:
        print(f"resource bound: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
