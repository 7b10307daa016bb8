import argparse
import sys

from ._bench import run_bench
from ._bound_engine import (
    Caveat,
    ContentBound,
    cw_bound,
    global_bound,
    RecurrenceSystem,
    transform_system,
    verify_bound,
)
from ._settings import BoundSettings
from ._system_file import format_system, read_solutions_file, read_system_file
from ._verification_report import render_report
from .utils import terminal_colors

NO_SOLUTIONS = "0 (no nonzero rational solutions)"


def _compute(
    system: RecurrenceSystem, mode: str, settings: BoundSettings
) -> ContentBound:
    if mode == "global":
        return global_bound(system, settings.J)
    return cw_bound(system, settings.J, settings.cutoff, settings.degree_bound)


def _caveat_note(bound: ContentBound) -> None:
    if bound.caveat is Caveat.UP_TO_D_FACTOR:
        print(
            terminal_colors.highlight(
                "q-shift case: the bound holds up to a factor x^m "
                "that is not computed.",
                terminal_colors.YELLOW,
            ),
            file=sys.stderr,
        )
    if bound.cut_off:
        print(
            terminal_colors.highlight(
                "The component-wise iteration stopped through the cut-off.",
                terminal_colors.YELLOW,
            ),
            file=sys.stderr,
        )


def _print_bound(bound: ContentBound, output_format: str) -> None:
    _caveat_note(bound)
    if bound.is_zero:
        print(NO_SOLUTIONS)
        return
    for line in bound.format(output_format):
        print(line)


def bound_command(args: argparse.Namespace, settings: BoundSettings) -> int:
    """Both `global` and `cw`, told apart by args.mode."""
    system = read_system_file(args.file)
    _print_bound(_compute(system, args.mode, settings), settings.output_format)
    return 0


def transform_command(args: argparse.Namespace, settings: BoundSettings) -> int:
    system = read_system_file(args.file)
    bound = _compute(system, args.mode, settings)
    _caveat_note(bound)
    if bound.is_zero:
        print(NO_SOLUTIONS)
        return 0
    if any(component is None for component in bound.components):
        print(
            terminal_colors.highlight(
                "Some components of the bound are 0, the system cannot be transformed."
            ),
            file=sys.stderr,
        )
        return 1
    transformed = transform_system(system, bound)
    print(format_system(transformed), end="")
    return 0


def verify_command(args: argparse.Namespace, settings: BoundSettings) -> int:
    system = read_system_file(args.file)
    solutions = read_solutions_file(args.solutions, system.n)
    bound = _compute(system, args.mode, settings)
    report = verify_bound(system, bound, solutions)
    print(render_report(report, settings.output_format), end="")
    return 0


def bench_command(args: argparse.Namespace, settings: BoundSettings) -> int:
    system = read_system_file(args.file)
    table = run_bench(
        system,
        settings.jmax,
        settings.cutoff,
        settings.degree_bound,
        progress=sys.stderr.isatty(),
    )
    print(table.to_csv(index=False, float_format="%.3f"), end="")
    return 0

