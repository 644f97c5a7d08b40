from polylb.polylb_arguments import SUITE_DEFAULTS, SUITE_LIMITS, PolyLBArguments
from polylb.polylb_output import FORMATS, TABLES
from polylb.polylb_version import polylb_version

from typing import (
    Any,
    List,
    Optional,
    Sequence,
    Tuple,
)
from textwrap import dedent
import argparse
import sys


class RichArgParser(argparse.ArgumentParser):
    def __init__(self, *args: Any, **kwargs: Any):
        from rich.console import Console

        self.console = Console()
        self.error_console = Console(file=sys.stderr)
        super().__init__(*args, **kwargs)

    def _print_message(self, message: Optional[str], file: Any = None) -> None:
        if message:
            console = self.error_console if file is sys.stderr else self.console
            console.print(message, end="")


def parse_range(text: str) -> Tuple[int, int]:
    """`A..B` (inclusive) or a single integer."""
    lo, sep, hi = text.partition("..")
    try:
        bounds = (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B or an integer, got {text!r}")
    if bounds[0] > bounds[1]:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return bounds


def parse_int_set(text: str) -> Tuple[int, ...]:
    """`2,3` or `2..5`, or a mix such as `2,4..6`."""
    values: List[int] = []
    for part in filter(None, (p.strip() for p in text.split(","))):
        lo, hi = parse_range(part)
        values.extend(range(lo, hi + 1))
    if not values:
        raise argparse.ArgumentTypeError("empty set")
    return tuple(sorted(set(values)))


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


class PolyLBParseArgs:
    @staticmethod
    def make_parser() -> RichArgParser:
        defaults = PolyLBArguments()
        usage = dedent(
            f"""[b]polylb[/b]: exact face counts of polytopes and checks of their lower bounds, version {polylb_version}

  % [b]polylb fvector J:s=3,d=5 --oracle[/b]
  % [b]polylb verify --suite all[/b]
  % [b]polylb table --which dichotomy --d 9..12[/b]
  % [b]polylb dump tmprod:d=5,a=5,m=2[/b]
"""
        )
        epilog = dedent(
            """Family strings: simplex:d=D, prism:s=S, triplex:s=S,d=D, J:s=S,d=D (B:d=D is J:s=3),
A:d=D, C:d=D, sigma:d=D, tmsum:d=D,a=A,m=M, tmprod:d=D,a=A,m=M, trunc:d=D,n=N.

Exit codes: 0 success, 1 suite failure, 2 argument error.
"""
        )
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument(
            "--format",
            choices=FORMATS,
            default=defaults.format,
            help=f"output format (default: [blue]{defaults.format}[/blue])",
        )
        common.add_argument(
            "--out",
            type=str,
            default=defaults.out,
            help="file to hold the output (default: [blue]stdout[/blue])",
        )
        common.add_argument(
            "-v",
            "--verbose",
            action="count",
            default=defaults.verbose,
            help="log progress to stderr; repeat for debug detail",
        )

        parser = RichArgParser(
            prog="polylb",
            description=usage,
            epilog=epilog,
            formatter_class=argparse.RawTextHelpFormatter,
            allow_abbrev=False,
        )
        parser.add_argument(
            "--version",
            action="version",
            version=f"polylb version {polylb_version}",
            help="prints the version number of polylb and exits",
        )
        commands = parser.add_subparsers(dest="command", metavar="command", required=True)

        fvector = commands.add_parser(
            "fvector",
            parents=[common],
            formatter_class=argparse.RawTextHelpFormatter,
            help="closed-form f-vector of a family member, optionally checked against the geometry",
        )
        fvector.add_argument("spec", help="family string, e.g. [b]J:s=3,d=5[/b]")
        fvector.add_argument(
            "--oracle",
            action="store_const",
            const=True,
            default=defaults.oracle,
            help=f"also compute the f-vector from the face lattice (default: [blue]{defaults.oracle}[/blue])",
        )
        fvector.add_argument(
            "--oracle-guard",
            type=_positive,
            default=defaults.oracle_guard,
            help=f"refuse oracle runs scanning more than this many d-subsets (default: [blue]{defaults.oracle_guard}[/blue])",
        )
        fvector.add_argument(
            "--force-oracle",
            action="store_const",
            const=True,
            default=defaults.force_oracle,
            help="run the oracle even above the guard",
        )

        verify = commands.add_parser(
            "verify",
            parents=[common],
            formatter_class=argparse.RawTextHelpFormatter,
            help="run verification suites",
        )
        limits = "\n".join(
            f"  {name}: default {SUITE_DEFAULTS[name]}, limits {lo}..{hi}"
            for name, (lo, hi) in SUITE_LIMITS.items()
        )
        verify.add_argument(
            "--suite",
            choices=["all"] + list(SUITE_DEFAULTS),
            default=defaults.suite,
            metavar="SUITE",
            help=f"suite to run, or [b]all[/b] (default: [blue]{defaults.suite}[/blue])\n{limits}",
        )
        verify.add_argument(
            "--d-max",
            dest="d_max",
            type=_positive,
            default=defaults.d_max,
            help="largest dimension of the grid (default: [blue]per suite[/blue])",
        )
        verify.add_argument(
            "--s-set",
            dest="s_set",
            type=parse_int_set,
            default=defaults.s_set,
            help="surpluses s for tau_minimality, as 2,3 or 2..5 (default: [blue]all[/blue])",
        )
        verify.add_argument(
            "--workers",
            type=_positive,
            default=defaults.workers,
            help="worker processes (default: [blue]$POLYLB_WORKERS, else 1[/blue])",
        )

        table = commands.add_parser(
            "table",
            parents=[common],
            formatter_class=argparse.RawTextHelpFormatter,
            help="emit a table of closed-form values",
        )
        table.add_argument("--which", choices=list(TABLES), required=True, help="table to emit")
        table.add_argument(
            "--d",
            dest="d_range",
            type=parse_range,
            required=True,
            help="dimensions, as [b]A..B[/b]",
        )

        dump = commands.add_parser(
            "dump",
            parents=[common],
            formatter_class=argparse.RawTextHelpFormatter,
            help="vertices, incidences and faces of a family member (always JSON)",
        )
        dump.add_argument("spec", help="family string, e.g. [b]sigma:d=4[/b]")
        dump.add_argument(
            "--force-oracle",
            action="store_const",
            const=True,
            default=defaults.force_oracle,
            help=f"build the face lattice even above the guard of [blue]{defaults.oracle_guard}[/blue] d-subsets",
        )
        return parser

    @staticmethod
    def parse_args(argv: Optional[Sequence[str]] = None) -> PolyLBArguments:
        parser = PolyLBParseArgs.make_parser()
        args = PolyLBArguments()
        parser.parse_args(list(sys.argv[1:] if argv is None else argv), namespace=args)
        return args
