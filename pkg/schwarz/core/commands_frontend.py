import argparse
import json
import logging
import sys
from pathlib import Path
from typing import TextIO

logger = logging.getLogger()

from schwarz.core.commands_backend import Commands_Backend
from schwarz.core.enum_classes import Exit_Status, VerifyKind
from schwarz.core.errors import ParseError, SchwarzError
from schwarz.core.records import CommandResult

EXPRESSION_HELP = (
    "rational expression in y: integers, + - * / ^ with integer exponents and parentheses, "
    "e.g. \"y^2\" or \"(y-1)/(y+1)\""
)


def build_parser() -> argparse.ArgumentParser:
    """Sub-command parser for the four commands."""
    parser = argparse.ArgumentParser(
        prog="schwarz",
        description="Classify and verify Schwarz triangle equations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    equation = sub.add_parser("classify-equation", help="strong minimality verdict with witness")
    equation.add_argument("--inv-angles", required=True,
                          help="three exact fractions 1/alpha,1/beta,1/gamma or 'generic'")

    group = sub.add_parser("classify-group", help="triangle group report for a signature")
    group.add_argument("--sig", required=True, help="three entries, integers >= 2 or 'inf'")

    verify = sub.add_parser("verify", help="numerical residual of a Schwarzian identity")
    verify.add_argument("kind", choices=[str(k) for k in VerifyKind])
    verify.add_argument("--inv-angles", help="parameters of the triangle equation")
    verify.add_argument("--rational-function",
                        help="R directly, as [num]/[den] coefficients or an expression; " + EXPRESSION_HELP)
    verify.add_argument("--phi", help="pullback map; " + EXPRESSION_HELP)
    verify.add_argument("--order", type=int, help="truncation order")
    verify.add_argument("--tol", type=float, help="residual tolerance")
    verify.add_argument("--base", help="expansion point, exact fraction")

    sweep = sub.add_parser("sweep", help="compare the exact classifier with the monodromy oracle")
    sweep.add_argument("--max-den", type=int, help="denominator bound, at least 2")
    sweep.add_argument("--out", type=Path, help="newline-delimited records file")
    sweep.add_argument("--workers", type=int, help="worker processes")

    return parser


class Commands_Frontend:
    """Frontend layer parsing arguments and writing structured output."""
    def __init__(self, backend: Commands_Backend = None, stdout: TextIO = None):
        """Initialize frontend with backend and output stream."""
        self.backend = backend or Commands_Backend()
        self.stdout = stdout or sys.stdout
        self.parser = build_parser()

    def emit(self, result: CommandResult):
        print(result.model_dump_json(), file=self.stdout)

    def error_message(self, command: str, e: Exception, status: Exit_Status) -> Exit_Status:
        """Write an error record; the message goes to the log as well."""
        logger.error("{} failed: {}".format(command, e))
        result = {"error": type(e).__name__, "message": str(e)}
        if isinstance(e, ParseError) and e.position is not None:
            result["position"] = e.position
        self.emit(CommandResult(command=command, result=result, status=status.value))
        return status

    def dispatch(self, args: argparse.Namespace) -> CommandResult:
        if args.command == "classify-equation":
            return self.backend.classify_equation(args.inv_angles)
        if args.command == "classify-group":
            return self.backend.classify_group(args.sig)
        if args.command == "verify":
            return self.backend.verify(
                args.kind,
                inv_angles=args.inv_angles,
                rational_function=args.rational_function,
                phi=args.phi,
                order=args.order,
                tol=args.tol,
                base=args.base,
            )

        result, records = self.backend.sweep(args.max_den, args.out, args.workers)
        if args.out is None:
            for record in records:
                print(json.dumps(record), file=self.stdout)
        return result

    def run(self, argv: list[str] | None = None) -> Exit_Status:
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as e:
            return Exit_Status.OKAY if e.code == 0 else Exit_Status.USAGE

        try:
            result = self.dispatch(args)
        except ParseError as e:
            return self.error_message(args.command, e, Exit_Status.USAGE)
        except (SchwarzError, OSError) as e:
            return self.error_message(args.command, e, Exit_Status.FAIL)

        self.emit(result)
        return Exit_Status(result.status)
