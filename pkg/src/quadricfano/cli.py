"""Command-line front end.

Exit codes: 0 success, 1 contract error, 2 when ``verify-paper`` reports a
``Disagree`` status.
"""

from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction
from pathlib import Path

from .bundles import ChernData, segre_recurrence, twist
from .chow import QuadricContext, degree, hyperplane, middle_relations_check
from .classifier import FORMATS, FORMULA_MODES, RunConfig, classify
from .errors import ContractError, NotApplicable
from .filters import DEFAULT_PRECISION, nef_c2_bound, sin_incompatibility
from .replay import CheckStatus, verify_paper
from .report import emit_report
from .riemann_roch import chi_hrr, chi_q5


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _run_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n-min", type=int, default=5)
    p.add_argument("--n-max", type=int, default=11)
    p.add_argument("--c2-max", type=int, default=10)
    p.add_argument("--format", choices=FORMATS, default="json")
    p.add_argument("--precision", type=int, default=DEFAULT_PRECISION, help="decimal digits for the sine bound")
    p.add_argument("--formula", choices=FORMULA_MODES, default="both", help="closed form for chi on Q^5")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", type=Path, help="write the report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quadricfano", description=__doc__.splitlines()[0])
    parser.add_argument("--trace", action="store_true", help="log every filter evaluation to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    _run_options(sub.add_parser("classify", help="run the case analysis"))
    _run_options(sub.add_parser("verify-paper", help="replay every reference numeric step"))

    p = sub.add_parser("chi", help="Euler characteristic of rank-2 Chern data")
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--c1", type=_rational, required=True)
    p.add_argument("--c2", type=_rational, required=True)
    p.add_argument("--formula", choices=FORMULA_MODES, default="both")

    p = sub.add_parser("segre", help="Segre numbers s_0..s_i")
    p.add_argument("--c1", type=_rational, required=True)
    p.add_argument("--c2", type=_rational, required=True)
    p.add_argument("--i-max", type=int, default=6)
    p.add_argument("--twist", type=_rational, default=Fraction(0))

    p = sub.add_parser("bound", help="c2 bound from the nef twist (5 <= n <= 11) or the sine bound (n >= 12)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c1", type=int, default=0)
    p.add_argument("--precision", type=int, default=DEFAULT_PRECISION)

    p = sub.add_parser("chow-check", help="degree and middle-class relations on Q^n")
    p.add_argument("--n", type=int, required=True)
    return parser


def _config(args) -> RunConfig:
    return RunConfig(
        n_min=args.n_min, n_max=args.n_max, c2_max=args.c2_max, format=args.format,
        precision=args.precision, formula_mode=args.formula, workers=args.workers,
    )


def _write(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def _run(args) -> int:
    if args.command == "classify":
        config = _config(args)
        _write(emit_report(records=classify(config), format=config.format), args.out)
        return 0

    if args.command == "verify-paper":
        config = _config(args)
        checks = verify_paper(config)
        _write(emit_report(checks=checks, format=config.format), args.out)
        return 2 if any(c.status is CheckStatus.DISAGREE for c in checks) else 0

    if args.command == "chi":
        d = ChernData(args.c1, args.c2)
        if args.n == 5 and args.formula in ("printed", "both"):
            print(f"printed: {chi_q5(d, 'printed')}")
        if args.formula in ("hrr", "both"):
            print(f"hrr: {chi_hrr(QuadricContext(args.n), d)}")
        elif args.n != 5:
            raise ContractError("the printed closed form exists only for n = 5")
        return 0

    if args.command == "segre":
        d = twist(ChernData(args.c1, args.c2), args.twist)
        for i, s in enumerate(segre_recurrence(d, args.i_max)):
            print(f"s{i} = {s}")
        return 0

    if args.command == "bound":
        if args.n >= 12:
            v = sin_incompatibility(args.n, args.precision)
            print(f"{v.status}: {v.reason}")
            for k, w in v.witnesses.items():
                print(f"  {k} = {w}")
        else:
            print(f"c2 <= {nef_c2_bound(args.n, args.c1)}")
        return 0

    if args.command == "chow-check":
        ctx = QuadricContext(args.n)
        print(f"deg H^{args.n} = {degree(hyperplane(ctx) ** args.n)}")
        try:
            print(f"middle relations: {'hold' if middle_relations_check(ctx) else 'FAIL'}")
        except NotApplicable as exc:
            print(f"middle relations: not applicable ({exc})")
        return 0
    raise ContractError(f"unknown command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.trace:
        trace = logging.getLogger("quadricfano.trace")
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(message)s"))
        trace.addHandler(handler)
        trace.setLevel(logging.DEBUG)
    try:
        return _run(args)
    except (ContractError, NotApplicable) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    finally:
        if args.trace:
            trace.removeHandler(handler)
            trace.setLevel(logging.NOTSET)


if __name__ == "__main__":
    sys.exit(main())
