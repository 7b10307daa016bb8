import sys
import logging
import logging.config
import argparse
import pathlib
from typing import List, NoReturn, Optional

from ._cli_commands import (
    bench_command,
    bound_command,
    transform_command,
    verify_command,
)
from ._matrix import SingularMatrixError
from ._settings import load_settings, load_yaml, OUTPUT_FORMATS
from ._system_file import ParserError
from .utils import terminal_colors


class _ArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with status 1."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _common_arguments() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument(
        "--loglevel",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        default="WARNING",
        type=str,
        help="Wanted level of logging output. "
        "Selecting e.g. INFO will show all log events of level INFO or higher "
        "(WARNING, ERROR and CRITICAL). Default level is WARNING.",
    )
    common.add_argument(
        "--logconfig",
        type=pathlib.Path,
        default=None,
        metavar="CONFIGFILE",
        help="Path to YAML file with logging configuration "
        "(a logging.config.dictConfig dictionary).",
    )
    common.add_argument(
        "--config",
        type=pathlib.Path,
        default=None,
        metavar="SETTINGSFILE",
        help="Path to YAML file with default settings "
        "(J, cutoff, degree_bound, output_format, jmax). "
        "Command line flags take precedence.",
    )
    return common


def _system_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--file",
        type=pathlib.Path,
        required=True,
        help="Path to the system file describing tau(Y) = M Y.",
    )


def _bound_arguments(parser: argparse.ArgumentParser, componentwise: bool) -> None:
    parser.add_argument(
        "--J",
        type=int,
        default=None,
        help="How far the ladder M_j reaches (-J <= j <= J). Larger J gives "
        "sharper bounds at a higher cost. Default 1.",
    )
    if componentwise:
        parser.add_argument(
            "--cutoff",
            type=int,
            default=None,
            help="Stop the component-wise iteration when its negative entries "
            "stay unchanged for more than this many sweeps. Default 10.",
        )
        parser.add_argument(
            "--degree-bound",
            type=int,
            default=None,
            help="Optional degree bound for the solutions. Stops the "
            "component-wise iteration once the bound is exceeded.",
        )
    parser.add_argument(
        "--format",
        choices=OUTPUT_FORMATS,
        default=None,
        help="Print bounds factored (default) or as num/den.",
    )


def _mode_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--mode",
        choices=["global", "componentwise"],
        default="global",
        help="Which content bound to compute. Default global.",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="recbounds",
        description="Content and denominator bounds for rational solutions of "
        "first order linear recurrence systems tau(Y) = M Y.",
    )

    subparsers = parser.add_subparsers(
        metavar="SUBCOMMAND",
        help="Below are the available subcommands listed. "
        "Type e.g. 'recbounds global --help' "
        "to get help on one particular "
        "subcommand.",
    )
    subparsers.required = True
    common = _common_arguments()

    # Add "global" parser:

    parser_global = subparsers.add_parser(
        "global", parents=[common], help="Print the global content bound B"
    )
    _system_arguments(parser_global)
    _bound_arguments(parser_global, componentwise=False)
    parser_global.set_defaults(func=bound_command, mode="global")

    # Add "cw" parser:

    parser_cw = subparsers.add_parser(
        "cw", parents=[common], help="Print the component-wise content bound"
    )
    _system_arguments(parser_cw)
    _bound_arguments(parser_cw, componentwise=True)
    parser_cw.set_defaults(func=bound_command, mode="componentwise")

    # Add "transform" parser:

    parser_transform = subparsers.add_parser(
        "transform",
        parents=[common],
        help="Print the system satisfied by Z = B^-1 Y, in system file format",
    )
    _system_arguments(parser_transform)
    _bound_arguments(parser_transform, componentwise=True)
    _mode_argument(parser_transform)
    parser_transform.set_defaults(func=transform_command)

    # Add "verify" parser:

    parser_verify = subparsers.add_parser(
        "verify",
        parents=[common],
        help="Check that known solutions are contained in the bound",
    )
    _system_arguments(parser_verify)
    parser_verify.add_argument(
        "--solutions",
        type=pathlib.Path,
        required=True,
        help="File with one solution vector per line "
        "(n comma separated expressions).",
    )
    _bound_arguments(parser_verify, componentwise=True)
    _mode_argument(parser_verify)
    parser_verify.set_defaults(func=verify_command)

    # Add "bench" parser:

    parser_bench = subparsers.add_parser(
        "bench",
        parents=[common],
        help="Print a CSV with denominator degree and time of both bounds "
        "for J = 1, ..., jmax",
    )
    _system_arguments(parser_bench)
    parser_bench.add_argument(
        "--jmax", type=int, default=None, help="Largest J to run. Default 4."
    )
    parser_bench.add_argument("--cutoff", type=int, default=None)
    parser_bench.add_argument("--degree-bound", type=int, default=None)
    parser_bench.set_defaults(func=bench_command)

    return parser


def _configure_logging(loglevel: str, logconfig: Optional[pathlib.Path]) -> None:
    if logconfig is not None:
        logging.config.dictConfig(load_yaml(logconfig))
    else:
        logging.basicConfig(
            level=getattr(logging, loglevel),
            format="%(levelname)s %(name)s: %(message)s",
            stream=sys.stderr,
            force=True,
        )


def run(argv: Optional[List[str]] = None) -> int:
    """Runs the command line interface and returns the exit code: 0 on
    success, 1 on parse and usage errors, 2 for a singular matrix."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as excep:
        return excep.code if isinstance(excep.code, int) else 1

    try:
        _configure_logging(args.loglevel, args.logconfig)
        settings = load_settings(args.config).updated(
            J=getattr(args, "J", None),
            cutoff=getattr(args, "cutoff", None),
            degree_bound=getattr(args, "degree_bound", None),
            output_format=getattr(args, "format", None),
            jmax=getattr(args, "jmax", None),
        )
        return args.func(args, settings)
    except ParserError as excep:
        print(excep, file=sys.stderr)
        return 1
    except SingularMatrixError as excep:
        print(terminal_colors.highlight(f"Singular matrix: {excep}"), file=sys.stderr)
        return 2
    except (TypeError, ValueError) as excep:
        print(terminal_colors.highlight(str(excep)), file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
