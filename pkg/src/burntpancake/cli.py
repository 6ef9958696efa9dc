"""Command-line interface.

Exit codes: 0 success, 1 usage or parse error, 2 domain precondition
(non-simple input, size over cap), 3 verification violation.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .breakpoint import build_breakpoint_graph, dump, is_simple, to_tree
from .distances import NotSimpleError, distance_report
from .oracle import EXCHANGES, SIGNED, OracleCapError, check_cap, enumerate_simple
from .perm import PermutationError, SignedPermutation, apply_flips, parse_permutation
from .sorter import SortingError, sort_simple
from .verify import verify_theorems

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VIOLATION = 0, 1, 2, 3

GENERATOR_CHOICES = {"signed": SIGNED, "unsigned": EXCHANGES, "both": None}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class DomainError(Exception):
    pass


def _inputs(args) -> list[SignedPermutation]:
    if args.file:
        with open(args.file) as fh:
            lines = [ln for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
        if not lines:
            raise PermutationError(f"{args.file}: no permutations")
        return [parse_permutation(ln) for ln in lines]
    if not args.perm:
        raise PermutationError("no permutation given (pass entries or --file)")
    return [parse_permutation(" ".join(args.perm))]


def _emit(obj) -> None:
    print(json.dumps(obj))


def cmd_distance(args) -> int:
    perms = _inputs(args)
    for pi in perms:
        rep = distance_report(pi)
        if args.machine:
            _emit({"perm": list(pi.entries), **rep.as_dict()})
        elif len(perms) > 1:
            psrd = rep.formula_value if rep.simple else "?"
            print(f"{pi}\tg={rep.lower_bound}\tsimple={'yes' if rep.simple else 'no'}\tpsrd={psrd}")
        else:
            print(f"perm: {pi}")
            sys.stdout.write(rep.as_text())
    return EXIT_OK


def cmd_sort(args) -> int:
    perms = _inputs(args)
    for pi in perms:
        if not is_simple(build_breakpoint_graph(pi)):
            raise DomainError(
                f"<{pi}> is not simple; no optimal sorter is known. "
                f"Use `distance` for the lower bound."
            )
        trace = sort_simple(pi)
        if not apply_flips(pi, trace.flips).is_identity():
            raise SortingError(f"flips {trace.flips} do not sort <{pi}>; trace: {trace.as_tree()}")
        if args.machine:
            _emit(trace.as_tree())
            continue
        if args.trace:
            print(f"source {pi}")
            for line in trace.lines():
                print(line)
        print(" ".join(map(str, trace.flips)))
    return EXIT_OK


def cmd_analyze(args) -> int:
    for pi in _inputs(args):
        bg = build_breakpoint_graph(pi)
        if args.machine:
            _emit(to_tree(bg))
        else:
            sys.stdout.write(dump(bg))
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify_theorems(args.n, GENERATOR_CHOICES[args.generators],
                             lemma9=args.lemma9, max_n=args.max_n)
    if args.machine:
        _emit(report.as_tree())
    else:
        for line in report.lines():
            print(line)
        for check in report.checks:
            for v in check.violations:
                print(f"  {check.name}: {v}")
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_enumerate_simple(args) -> int:
    for pi in enumerate_simple(args.n, max_n=args.max_n):
        print(json.dumps(list(pi.entries)) if args.machine else pi)
    return EXIT_OK


def random_permutation(n: int, rng: random.Random, simple: bool = False,
                       max_tries: int = 1_000_000) -> SignedPermutation:
    for _ in range(max_tries):
        entries = list(range(1, n + 1))
        rng.shuffle(entries)
        pi = SignedPermutation([x if rng.random() < 0.5 else -x for x in entries], check=False)
        if not simple or is_simple(build_breakpoint_graph(pi)):
            return pi
    raise DomainError(f"no simple permutation of length {n} found in {max_tries} draws")


def cmd_random(args) -> int:
    if args.n < 1:
        raise DomainError("--n must be positive")
    rng = random.Random(args.seed)
    for _ in range(args.count):
        pi = random_permutation(args.n, rng, args.simple)
        print(json.dumps(list(pi.entries)) if args.machine else pi)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="burntpancake", description="Sort burnt pancakes by prefix signed reversals.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def perm_cmd(name, func, help):
        s = sub.add_parser(name, help=help)
        s.add_argument("perm", nargs="*", help="signed entries, e.g. -7 3 -1 4 2 8 -6 -5")
        s.add_argument("--file", help="read one permutation per line")
        s.add_argument("--machine", action="store_true", help="emit JSON")
        s.set_defaults(func=func)
        return s

    perm_cmd("distance", cmd_distance, "lower bound and, for simple permutations, exact distance")
    s = perm_cmd("sort", cmd_sort, "optimal flip sequence for a simple permutation")
    s.add_argument("--trace", action="store_true", help="print every flip with its move kind")
    perm_cmd("analyze", cmd_analyze, "breakpoint graph dump")

    s = sub.add_parser("verify", help="check the formulas against exhaustive BFS")
    s.add_argument("n", type=int)
    s.add_argument("--generators", choices=sorted(GENERATOR_CHOICES), default="both")
    s.add_argument("--lemma9", action="store_true", help="also search merging/splitting sequences")
    s.add_argument("--max-n", type=int, default=None, help="override the oracle size cap")
    s.add_argument("--machine", action="store_true")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("enumerate-simple", help="list every simple permutation of length n")
    s.add_argument("n", type=int)
    s.add_argument("--max-n", type=int, default=None)
    s.add_argument("--machine", action="store_true")
    s.set_defaults(func=cmd_enumerate_simple)

    s = sub.add_parser("random", help="seeded random permutations")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--count", type=int, default=1)
    s.add_argument("--simple", action="store_true", help="rejection-sample simple permutations")
    s.add_argument("--machine", action="store_true")
    s.set_defaults(func=cmd_random)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (PermutationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotSimpleError, OracleCapError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except SortingError as exc:
        print(f"internal verification failure: {exc}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
