from typing import Any, Dict, List

import jinja2

from ._bound_engine import BoundKind, Caveat, VerificationReport


def _violation_rows(report: VerificationReport) -> List[Dict[str, Any]]:
    return [
        {
            "solution": violation.solution + 1,
            "component": (
                None if violation.component is None else violation.component + 1
            ),
            "prime": None if violation.prime is None else str(violation.prime),
            "solution_valuation": violation.solution_valuation,
            "bound_valuation": violation.bound_valuation,
        }
        for violation in report.violations
    ]


def render_report(report: VerificationReport, output_format: str = "factored") -> str:
    """Human readable pass/fail summary of a verification run."""
    template_environment = jinja2.Environment(  # nosec
        loader=jinja2.PackageLoader("recurrence_bounds", "templates"),
        undefined=jinja2.StrictUndefined,
        autoescape=False,
        trim_blocks=True,
        lstrip_blocks=True,
    )
    template = template_environment.get_template("verification_report.txt.jinja2")
    bound = report.bound
    return template.render(
        kind="Global" if bound.kind is BoundKind.GLOBAL else "Component-wise",
        J=bound.J,
        caveat="up to a factor x^m" if bound.caveat is Caveat.UP_TO_D_FACTOR else "",
        bound_lines=bound.format(output_format),
        checked=report.checked,
        passed=report.passed,
        non_solutions=list(report.non_solutions),
        violations=_violation_rows(report),
    )
