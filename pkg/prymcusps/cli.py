"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 verification failure. Command
output goes to stdout; logs go to stderr.
"""

import argparse
import json
import sys
from typing import Any, Callable, Dict, List, Optional

from prymcusps import __version__
from prymcusps.config import get_settings
from prymcusps.errors import PrymCuspsError
from prymcusps.models.schemas import ReportRecord
from prymcusps.services.galois import orbits
from prymcusps.services.homology import (
    component_census,
    iota_T,
    pairing_on_imT_mod2,
    spin_component,
)
from prymcusps.services.prototypes import algebraic_prototypes, enumerate_prototypes
from prymcusps.services.quadfield import validate_discriminant
from prymcusps.services.report_service import build_records, records_to_csv, records_to_json
from prymcusps.services.stablecurve import fiber_ids, marked_points, node_constant, stable_fiber
from prymcusps.utils.formatters import format_decimal
from prymcusps.utils.logger import get_logger
from prymcusps.workflows.orchestrator import create_orchestrator

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_VERIFICATION_FAILED = 2


class UsageError(Exception):
    """Raised instead of argparse's own exit so bad arguments map to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _emit(payload: Any) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def cmd_enumerate(args: argparse.Namespace) -> int:
    records = build_records(args.D)
    if args.format == "csv":
        sys.stdout.write(records_to_csv(records))
    else:
        sys.stdout.write(records_to_json(records) + "\n")
    return EXIT_OK


def cmd_components(args: argparse.Namespace) -> int:
    census = component_census(args.D)
    payload = census.model_dump(mode="json")
    if not census.two_components:
        payload["note"] = "single component"
    _emit(payload)
    return EXIT_OK


def cmd_galois(args: argparse.Namespace) -> int:
    payload = []
    for orbit in orbits(args.D):
        payload.append({
            "members": [A.label for A in orbit.members],
            "labels": [int(label) for label in orbit.labels] if orbit.labels else None,
            "fixed": orbit.is_fixed,
        })
    _emit(payload)
    return EXIT_OK


def cmd_stable(args: argparse.Namespace) -> int:
    precision = args.prec or get_settings().stable_precision
    prototypes = algebraic_prototypes(args.D)
    ids = fiber_ids(prototypes)
    payload = []
    for A in prototypes:
        fiber = stable_fiber(A)
        points = marked_points(A, precision)
        payload.append({
            "algebraic": A.label,
            "fiber_id": ids[A],
            "s_exact": str(fiber.s),
            "s_decimal": format_decimal(fiber.s, precision),
            "u_exact": str(fiber.u),
            "complex": fiber.is_complex,
            "x1": {"real": points.x1_real, "imag": points.x1_imag},
            "x3": {"real": points.x3_real, "imag": points.x3_imag},
            "error_bound": points.error_bound,
            "residues": [str(r) for r in fiber.residues],
            "node_constant": str(node_constant(A)),
            "identified_pairs": [list(pair) for pair in fiber.identified_pairs],
        })
    _emit(payload)
    return EXIT_OK


def cmd_homology(args: argparse.Namespace) -> int:
    payload = []
    for P in enumerate_prototypes(args.D):
        rep = iota_T(P)
        payload.append({
            "prototype": P.label,
            "generator": [list(row) for row in rep.generator],
            "pairing": [list(row) for row in rep.pairing.entries],
            "restricted_pairing_even": pairing_on_imT_mod2(P),
            "component": int(spin_component(P)),
        })
    _emit(payload)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    dmax = args.dmax or get_settings().verify_dmax
    orchestrator = create_orchestrator(max_workers=args.workers)
    report = orchestrator.run(dmax)
    payload: Dict[str, Any] = report.model_dump(mode="json")
    payload["passed"] = report.passed
    _emit(payload)
    if not report.passed:
        sys.stderr.write(f"verification failed: {report.first_counterexample}\n")
        return EXIT_VERIFICATION_FAILED
    return EXIT_OK


def cmd_schema(args: argparse.Namespace) -> int:
    _emit(ReportRecord.model_json_schema())
    return EXIT_OK


def _discriminant(text: str) -> int:
    try:
        D = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if D <= 0:
        raise argparse.ArgumentTypeError(f"discriminant must be positive, got {D}")
    return D


def _add_format(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--format", choices=["json", "csv"], default="json")
    group.add_argument("--json", dest="format", action="store_const", const="json")
    group.add_argument("--csv", dest="format", action="store_const", const="csv")


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per report."""
    parser = _Parser(
        prog="prymcusps",
        description="Cusp prototypes of genus-3 Prym eigenform loci: enumeration, spin, Galois action, stable fibers.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("enumerate", help="list all prototypes of D in canonical order")
    p.add_argument("D", type=_discriminant)
    _add_format(p)
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("components", help="cusp counts per spin component")
    p.add_argument("D", type=_discriminant)
    p.set_defaults(handler=cmd_components)

    p = sub.add_parser("galois", help="Galois orbits of algebraic prototypes")
    p.add_argument("D", type=_discriminant)
    p.set_defaults(handler=cmd_galois)

    p = sub.add_parser("stable", help="stable fibers: s, marked points, residues")
    p.add_argument("D", type=_discriminant)
    p.add_argument("--prec", type=int, default=None, help="decimal digits of the marked points")
    p.set_defaults(handler=cmd_stable)

    p = sub.add_parser("homology", help="real multiplication matrices and mod-2 pairing (odd D)")
    p.add_argument("D", type=_discriminant)
    p.set_defaults(handler=cmd_homology)

    p = sub.add_parser("verify", help="run every property check for all D up to --dmax")
    p.add_argument("--dmax", type=int, default=None)
    p.add_argument("--workers", type=int, default=None, help="worker processes")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("schema", help="print the JSON schema of report records")
    p.set_defaults(handler=cmd_schema)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run the CLI.

    Args:
        argv: Arguments without the program name (sys.argv[1:] if omitted)

    Returns:
        Process exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "D", None) is not None:
            validate_discriminant(args.D)
        if getattr(args, "prec", None) is not None and args.prec < 1:
            raise UsageError("--prec must be positive")
        if getattr(args, "dmax", None) is not None and args.dmax < 5:
            raise UsageError("--dmax must be at least 5")
        if getattr(args, "workers", None) is not None and args.workers < 1:
            raise UsageError("--workers must be positive")
        handler: Callable[[argparse.Namespace], int] = args.handler
        return handler(args)
    except UsageError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INVALID_INPUT
    except PrymCuspsError as e:
        logger.warning("invalid_input", error=str(e))
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INVALID_INPUT
