"""The `polylb` command: fvector, verify, table and dump."""
import logging
import sys

from typing import List, Optional, Sequence, Tuple

from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape

from polylb.polylb_arguments import PolyLBArguments
from polylb.polylb_errors import DomainError, FamilySpecError, PolytopeError
from polylb.polylb_families import FamilySpec, build, expected_counts, expected_fvector, parse
from polylb.polylb_formulas import binomial
from polylb.polylb_output import PolyLBOutput, formula_table
from polylb.polylb_parseargs import PolyLBParseArgs
from polylb.polylb_polytope import VPolytope, f_vector, face_lattice, incidence_structure
from polylb.polylb_report import CheckReport
from polylb.polylb_verifier import run_all, run_suite
from polylb.polylb_workers import default_workers

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def configure_logging(verbose: int) -> None:
    """Route the polylb loggers through rich on stderr."""
    level = logging.WARNING if verbose <= 0 else logging.INFO if verbose == 1 else logging.DEBUG
    handler = RichHandler(console=Console(file=sys.stderr), show_path=False)
    handler.setFormatter(logging.Formatter("%(message)s"))
    root = logging.getLogger("polylb")
    for old in [h for h in root.handlers if isinstance(h, RichHandler)]:
        root.removeHandler(old)
    root.addHandler(handler)
    root.setLevel(level)


def _guarded_build(spec: FamilySpec, args: PolyLBArguments) -> VPolytope:
    """Build a family member, refusing facet scans above the oracle guard."""
    n_vertices = expected_counts(spec)[0]
    if n_vertices is None:
        n_vertices = build(spec).n_vertices
    subsets = binomial(n_vertices, spec.d)
    if subsets > args.oracle_guard and not args.force_oracle:
        raise DomainError(
            f"the facet scan would test {subsets} d-subsets, above the guard of "
            f"{args.oracle_guard}; pass --force-oracle to run it anyway",
            {"spec": str(spec), "f_0": n_vertices},
        )
    return build(spec)


def _fvector(args: PolyLBArguments, output: PolyLBOutput) -> Tuple[str, int]:
    spec = parse(args.spec)
    formula = expected_fvector(spec)
    oracle = f_vector(_guarded_build(spec, args)) if args.oracle else None
    if formula is not None and oracle is not None:
        verdict = "MATCH" if formula.counts == oracle.counts else "MISMATCH"
    else:
        verdict = "UNCHECKED"
    if formula is None and oracle is None:
        logger.warning("no closed form for %s; pass --oracle to compute its f-vector", spec)
    code = EXIT_FAILED if verdict == "MISMATCH" else EXIT_OK
    return output.fvector_result(str(spec), formula, oracle, verdict), code


def _verify(args: PolyLBArguments, output: PolyLBOutput) -> Tuple[str, int]:
    workers = args.workers or default_workers()
    s_set = args.s_set
    if s_set is not None:
        if min(s_set) < 2:
            raise DomainError("surpluses start at s = 2", {"s_set": ",".join(map(str, s_set))})
        if args.suite not in ("all", "tau_minimality"):
            logger.warning("--s-set only affects tau_minimality")
    reports: List[CheckReport]
    if args.suite == "all":
        reports = run_all(args.d_max, s_set, workers)
    else:
        reports = [run_suite(args.suite, args.d_max, s_set, workers)]
    output.verdict_table(reports)
    passed = all(r.passed for r in reports)
    return output.reports(reports), EXIT_OK if passed else EXIT_FAILED


def _table(args: PolyLBArguments, output: PolyLBOutput) -> Tuple[str, int]:
    lo, hi = args.d_range
    header, rows = formula_table(args.which, lo, hi)
    return output.rows(header, rows), EXIT_OK


def _dump(args: PolyLBArguments, output: PolyLBOutput) -> Tuple[str, int]:
    spec = parse(args.spec)
    P = _guarded_build(spec, args)
    js = output.json
    return (
        js.dumps(
            {
                "family": str(spec),
                "polytope": js.polytope(P),
                "incidence": js.incidence(incidence_structure(P)),
                "face_lattice": js.lattice(face_lattice(P)),
            }
        ),
        EXIT_OK,
    )


COMMANDS = {
    "fvector": _fvector,
    "verify": _verify,
    "table": _table,
    "dump": _dump,
}


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command and return its exit code: 0 ok, 1 failed check, 2 bad arguments."""
    try:
        args = PolyLBParseArgs.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 after --help/--version and 2 on bad arguments
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    configure_logging(args.verbose)
    output = PolyLBOutput(args.format)
    if args.command == "dump" and args.format != "json":
        logger.info("dump always writes JSON")
    try:
        text, code = COMMANDS[args.command](args, output)
    except (FamilySpecError, DomainError, PolytopeError) as exc:
        output.console.print(f"[red]error:[/red] {escape(str(exc))}")
        return EXIT_USAGE
    output.emit(text, args.out)
    return code
