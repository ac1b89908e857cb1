"""Command-line interface.

Exit codes: 0 success, 1 a verification failure is reported, 2 usage error,
3 a cap was exceeded (or a factor was not found within the cap).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .attractor import factor_attractor, mirror_attractor, prefix_attractor
from .closure import palindromic_closure
from .errors import CapExceeded, DirectiveError, DirectiveExhausted, FactorNotFound
from .oracle import minimal_attractor
from .profile import profile, profile_oracle_check
from .report import sweep
from .tower import build_tower, parse_directive, sequence_prefix
from .verifier import is_attractor
from .words import parse_positions, render_marked

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _directive(text: str):
    try:
        return parse_directive(text)
    except DirectiveError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _letter(text: str) -> str:
    if len(text) != 1:
        raise argparse.ArgumentTypeError(f"expected one letter, got {text!r}")
    return text


def _positions(text: str) -> list[int]:
    try:
        return parse_positions(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad position list {text!r}") from None


def cmd_closure(args) -> int:
    out = palindromic_closure(args.word, args.letter)
    if args.json:
        _emit({"word": args.word, "letter": args.letter, "closure": out})
    else:
        print(out)
    return EXIT_OK


def cmd_tower(args) -> int:
    spec = args.directive
    if args.normalize_check and not spec.is_normalized():
        logging.getLogger("epistring").warning(
            "directive letters first appear as %s, not 0, 1, 2, ...", spec.letters()
        )
    tower = build_tower(spec, args.levels, max_length=args.max_length, max_levels=args.max_levels)
    if args.json:
        _emit({
            "directive": str(spec),
            "exhausted": tower.exhausted,
            "levels": [dict(rec.as_dict(), level=n, word=tower.word(n))
                       for n, rec in enumerate(tower.levels)],
        })
    else:
        for n, rec in enumerate(tower.levels):
            m = ",".join(f"{a}:{p}" for a, p in sorted(rec.m_map.items()))
            print(f"{n}\t{rec.length}\t{rec.consumed or '-'}\t{rec.case_tag or '-'}\t{m or '-'}")
        if tower.exhausted:
            print(f"# directive exhausted after {tower.top} levels", file=sys.stderr)
    return EXIT_OK


def cmd_prefix(args) -> int:
    u = sequence_prefix(args.directive, args.length, max_length=args.max_length)
    if args.json:
        _emit({"directive": str(args.directive), "length": args.length, "prefix": u})
    else:
        print(u)
    return EXIT_OK


def _print_attractor(att, as_json: bool) -> int:
    if as_json:
        _emit(att.as_dict())
    else:
        print(render_marked(att.word, att.positions))
        print("positions:", ",".join(map(str, att.positions)))
        print("provenance:", att.provenance)
        if att.context is not None:
            ctx = att.context
            print(f"level: {ctx.level}  occurrence_start: {ctx.start}  case: {ctx.case}")
        print("status:", att.status)
        if att.witness is not None:
            print("witness:", att.witness)
    return EXIT_OK if att.verified else EXIT_FAILED


def cmd_attractor_prefix(args) -> int:
    tower = build_tower(args.directive, args.level, max_length=args.max_length)
    if tower.top < args.level:
        raise DirectiveExhausted(f"directive has only {tower.top} levels")
    if args.level < 1:
        raise ValueError("level must be at least 1")
    att = prefix_attractor(tower, args.level)
    if args.mirror:
        att = mirror_attractor(att)
    return _print_attractor(att.with_verdict(), args.json)


def cmd_attractor_factor(args) -> int:
    target = args.word if args.word is not None else (args.start, args.len)
    att = factor_attractor(args.directive, target, args.max_level, max_length=args.max_length)
    return _print_attractor(att, args.json)


def cmd_verify(args) -> int:
    outcome = is_attractor(args.word, args.positions)
    if args.json:
        _emit({"word": args.word, "positions": args.positions, **outcome.as_dict()})
    else:
        print(render_marked(args.word, args.positions))
        if outcome.passed:
            print("pass")
        else:
            occ = "; ".join(
                "{" + ",".join(map(str, o.positions)) + "}" for o in outcome.witness_occurrences
            )
            print(f"fail: witness {outcome.witness} occurs at {occ}")
    return EXIT_OK if outcome.passed else EXIT_FAILED


def cmd_minimal(args) -> int:
    found = minimal_attractor(args.word, args.max_size, budget=args.budget)
    if found is None:
        if args.json:
            _emit({"word": args.word, "size": None, "positions": None, "max_size": args.max_size})
        else:
            print(f"no attractor with at most {args.max_size} positions")
        return EXIT_CAP
    if args.json:
        _emit({"word": args.word, "size": found.size, "positions": list(found.positions),
               "checked": found.checked})
    else:
        print(render_marked(args.word, found.positions))
        print(f"size {found.size}: {','.join(map(str, found.positions))}")
    return EXIT_OK


def cmd_profile(args) -> int:
    if args.check_oracle:
        check = profile_oracle_check(
            args.directive, args.upto, oracle_upto=args.check_oracle, strict=False
        )
        table = check.table
    else:
        check = None
        table = profile(args.directive, args.upto)
    if args.json:
        if check is not None:
            _emit(check.as_dict())
        else:
            _emit({"rows": [{"n": n, "s": v} for n, v in table.rows()]})
    else:
        for n, v in table.rows():
            extra = ""
            if check is not None and n in check.oracle:
                extra = f"\t{check.oracle[n]}"
            print(f"{n}\t{v}{extra}")
    if check is not None and not check.agrees:
        return EXIT_FAILED
    return EXIT_OK


def cmd_sweep(args) -> int:
    report = sweep(args.directive, args.level, args.max_len)
    if args.json:
        print(report.to_json())
    else:
        for row in report.rows:
            att = row.attractor
            print(f"{render_marked(att.word, att.positions)}\t{att.provenance}\t{att.status}"
                  f"\t{att.witness or '-'}\t{row.size_d_exists}")
        s = report.summary()
        print(f"# {s['verified']}/{s['factors']} verified, "
              f"size-d attractor exists for {s['oracle_size_d_exists']}/{s['oracle_checked']}")
    return EXIT_FAILED if report.failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(
        prog="epistring",
        description="String attractors of episturmian sequences.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("closure", parents=[common], help="palindromic closure of WORD+LETTER")
    p.add_argument("word")
    p.add_argument("letter", type=_letter)
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("tower", parents=[common], help="levels of the palindromic prefix tower")
    p.add_argument("--directive", type=_directive, required=True)
    p.add_argument("--levels", type=int, required=True)
    p.add_argument("--normalize-check", action="store_true")
    p.add_argument("--max-length", type=int, default=None)
    p.add_argument("--max-levels", type=int, default=None)
    p.set_defaults(func=cmd_tower)

    p = sub.add_parser("prefix", parents=[common], help="prefix of the generated sequence")
    p.add_argument("--directive", type=_directive, required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--max-length", type=int, default=None)
    p.set_defaults(func=cmd_prefix)

    p = sub.add_parser("attractor-prefix", parents=[common], help="attractor of a tower level")
    p.add_argument("--directive", type=_directive, required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--mirror", action="store_true", help="report the reflected attractor")
    p.add_argument("--max-length", type=int, default=None)
    p.set_defaults(func=cmd_attractor_prefix)

    p = sub.add_parser("attractor-factor", parents=[common], help="attractor of a factor")
    p.add_argument("--directive", type=_directive, required=True)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--word")
    src.add_argument("--start", type=int)
    p.add_argument("--len", type=int)
    p.add_argument("--max-level", type=int, default=None)
    p.add_argument("--max-length", type=int, default=None)
    p.set_defaults(func=cmd_attractor_factor)

    p = sub.add_parser("verify", parents=[common], help="check a position set")
    p.add_argument("word")
    p.add_argument("positions", type=_positions)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("minimal", parents=[common], help="exhaustive minimum attractor")
    p.add_argument("word")
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_minimal)

    p = sub.add_parser("profile", parents=[common], help="attractor profile function")
    p.add_argument("--directive", type=_directive, required=True)
    p.add_argument("--upto", type=int, required=True)
    p.add_argument("--check-oracle", type=int, default=0, metavar="M",
                   help="compare with exhaustive search for n <= M")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("sweep", parents=[common], help="conformance sweep over all factors of a level")
    p.add_argument("--directive", type=_directive, required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(func=cmd_sweep)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
    )
    if args.command == "attractor-factor" and args.start is not None and args.len is None:
        print("attractor-factor: --start needs --len", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (CapExceeded, FactorNotFound, DirectiveExhausted) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
