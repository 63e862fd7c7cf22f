"""``bridgekit`` command line.

Exit status: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction

from . import corpus as corpus_mod
from .dt import DtError, canonicalize, diagram_bridges, over_under_sequence, parse_dt
from .invariants import SizeGuardExceeded, alexander, jones
from .realize import NotRealizable, pd_text, realize
from .tangles import (
    NotAKnot,
    RuleNotApplicable,
    fraction_to_cf,
    montesinos_bridge_index,
    montesinos_code,
    parse_fraction,
    parse_montesinos,
    rational_knot_code,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read_input(args) -> str:
    inline = getattr(args, "input", None)
    path = getattr(args, "file", None)
    if inline is not None and path is not None:
        raise InputError("give either an inline argument or --file, not both")
    if path is not None:
        try:
            with open(path) as fh:
                return fh.read()
        except OSError as exc:
            raise InputError(str(exc)) from None
    if inline is None or inline == "-":
        return sys.stdin.read()
    return inline


def _code(args):
    try:
        return parse_dt(_read_input(args))
    except DtError as exc:
        raise InputError(f"{type(exc).__name__}: {exc}") from None


def _emit(args, human: list[str], lines: list[str]) -> None:
    out = lines if args.format == "lines" else human
    for line in out:
        print(line)


def cmd_validate(args) -> int:
    code = _code(args)
    _emit(args, [f"valid DT code, {code.n} crossings"], ["valid"])
    return EXIT_OK


def cmd_bridges(args) -> int:
    code = _code(args)
    b = diagram_bridges(code)
    _emit(args, [str(b)], [str(b)])
    return EXIT_OK


def cmd_canon(args) -> int:
    c = canonicalize(_code(args))
    _emit(args, [str(c)], [str(v) for v in c.values])
    return EXIT_OK


def _realized(args):
    code = _code(args)
    try:
        return realize(code)
    except NotRealizable as exc:
        raise InputError(str(exc)) from None


def cmd_realize(args) -> int:
    d = _realized(args)
    sys.stdout.write(pd_text(d))
    return EXIT_OK


def cmd_alexander(args) -> int:
    res = alexander(_realized(args))
    _emit(args, [str(res.polynomial)], [str(res.polynomial)])
    return EXIT_OK


def cmd_det(args) -> int:
    res = alexander(_realized(args))
    _emit(args, [str(res.determinant)], [str(res.determinant)])
    return EXIT_OK


def cmd_jones(args) -> int:
    d = _realized(args)
    try:
        v = jones(d, guard=args.guard)
    except SizeGuardExceeded as exc:
        raise InputError(str(exc)) from None
    _emit(args, [str(v)], [str(v)])
    return EXIT_OK


def _fraction(text: str) -> Fraction:
    try:
        return parse_fraction(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_cf(args) -> int:
    terms = fraction_to_cf(_fraction(args.fraction))
    _emit(args, [" ".join(map(str, terms))], [str(a) for a in terms])
    return EXIT_OK


def cmd_rational(args) -> int:
    f = _fraction(args.fraction)
    try:
        code = rational_knot_code(f)
    except (NotAKnot, ValueError) as exc:
        raise InputError(str(exc)) from None
    det = alexander(realize(code)).determinant
    _emit(args, [f"DT: {code}", f"crossings: {code.n}", f"determinant: {det}"], [str(code)])
    return EXIT_OK


def cmd_montesinos(args) -> int:
    try:
        form = parse_montesinos(args.form)
        code = montesinos_code(form)
    except (NotAKnot, ValueError) as exc:
        raise InputError(str(exc)) from None
    try:
        b = str(montesinos_bridge_index(form))
    except RuleNotApplicable:
        b = "n/a"
    _emit(args, [f"DT: {code}", f"crossings: {code.n}", f"bridge index: {b}"], [str(code)])
    return EXIT_OK


def cmd_verify(args) -> int:
    path = args.corpus or corpus_mod.corpus_path()
    try:
        with open(path) as fh:
            entries = corpus_mod.load_corpus(fh)
    except OSError as exc:
        raise InputError(str(exc)) from None
    except (corpus_mod.FormatError, corpus_mod.ValidationError) as exc:
        raise InputError(str(exc)) from None
    report = corpus_mod.verify_all(entries, args.level, jobs=args.jobs)
    bad = [e for e in report.entries if not e.passed]
    if args.format == "lines":
        for e in report.entries:
            print(f"{e.name} {'ok' if e.passed else 'FAIL'}")
    else:
        for e in bad:
            print(f"{e.name}: " + ", ".join(e.failures()))
        c = report.counts()
        print(f"level {args.level}: {c['passed']}/{c['total']} passed, "
              f"{c['failed']} failed, {c['errored']} errored")
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bridgekit", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "lines"), default="human")
    dt_in = argparse.ArgumentParser(add_help=False, parents=[common])
    dt_in.add_argument("input", nargs="?", help="DT code, or '-' for stdin")
    dt_in.add_argument("--file", "-f", help="read the DT code from a file")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, help_ in (
        ("validate", cmd_validate, "check a DT code"),
        ("bridges", cmd_bridges, "bridge count of the diagram"),
        ("canon", cmd_canon, "canonical relabeling"),
        ("realize", cmd_realize, "planar realization as PD text"),
        ("alexander", cmd_alexander, "canonical Alexander polynomial"),
        ("det", cmd_det, "knot determinant"),
    ):
        p = sub.add_parser(name, parents=[dt_in], help=help_)
        p.set_defaults(func=fn)

    p = sub.add_parser("jones", parents=[dt_in], help="Jones polynomial (state sum)")
    p.add_argument("--guard", type=int, default=24, help="largest crossing count accepted")
    p.set_defaults(func=cmd_jones)

    for name, fn, help_ in (
        ("rational", cmd_rational, "2-bridge knot of the fraction p/q"),
        ("cf", cmd_cf, "continued fraction expansion of p/q"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        # let "-1/2" through as a positional
        p._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$")
        p.add_argument("fraction")
        p.set_defaults(func=fn)

    p = sub.add_parser("montesinos", parents=[common], help='knot of a form "(a0; b1/a1, ...)"')
    p.add_argument("form")
    p.set_defaults(func=cmd_montesinos)

    p = sub.add_parser("verify", parents=[common], help="verify a corpus file")
    p.add_argument("corpus", nargs="?", help="corpus file (default $BRIDGEKIT_CORPUS or shipped)")
    p.add_argument("--level", choices=corpus_mod.LEVELS, default="bridges")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"bridgekit: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
