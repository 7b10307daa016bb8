import copy
import pathlib
import sys
from typing import Any, Dict, Mapping, Optional

import yaml

from ._system_file import ParserError
from .utils import terminal_colors

OUTPUT_FORMATS = ("factored", "expanded")


class BoundSettings:
    """Settings shared by the subcommands. Values are validated when set and
    copied when read."""

    DEFAULTS: Dict[str, Any] = {
        "J": 1,
        "cutoff": 10,
        "degree_bound": None,
        "output_format": "factored",
        "jmax": 4,
    }

    def __init__(self, **settings: Any) -> None:
        unknown = sorted(set(settings) - set(self.DEFAULTS))
        if unknown:
            raise ParserError(
                terminal_colors.highlight(
                    f"Unknown settings {', '.join(unknown)}. "
                    f"Known settings are {', '.join(self.DEFAULTS)}."
                )
            )
        values = {**self.DEFAULTS, **settings}

        for key in ("J", "cutoff", "jmax"):
            if not _is_positive_int(values[key]):
                raise TypeError(
                    f"{key} must be a positive integer, got {values[key]!r}"
                )
        if values["degree_bound"] is not None and not (
            isinstance(values["degree_bound"], int)
            and not isinstance(values["degree_bound"], bool)
            and values["degree_bound"] >= 0
        ):
            raise TypeError(
                "degree_bound must be a nonnegative integer, "
                f"got {values['degree_bound']!r}"
            )
        if values["output_format"] not in OUTPUT_FORMATS:
            raise TypeError(
                f"output_format must be one of {', '.join(OUTPUT_FORMATS)}, "
                f"got {values['output_format']!r}"
            )

        self._values = values

    def __getattr__(self, name: str) -> Any:
        values = self.__dict__.get("_values", {})
        if name in values:
            return copy.deepcopy(values[name])
        raise AttributeError(name)

    def as_dict(self) -> Mapping[str, Any]:
        return copy.deepcopy(self._values)

    def updated(self, **overrides: Any) -> "BoundSettings":
        """New settings with every override that is not None applied."""
        values = dict(self._values)
        values.update(
            {key: value for key, value in overrides.items() if value is not None}
        )
        return BoundSettings(**values)


def _is_positive_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool) and value >= 1


def load_yaml(path: pathlib.Path) -> Any:
    """yaml.safe_load of a file, with syntax errors pointing at the line."""
    try:
        text = pathlib.Path(path).read_text(encoding="utf-8")
    except OSError as excep:
        raise ParserError(
            terminal_colors.highlight(f"Could not read {path}: {excep.strerror}.")
        ) from excep
    try:
        return yaml.safe_load(text)
    except yaml.MarkedYAMLError as excep:
        extra_info = f"There is something wrong in the YAML file {path}. "
        problem_mark = getattr(excep, "problem_mark", None)
        if problem_mark is not None:
            extra_info += (
                f"The typo is probably somewhere around line {problem_mark.line + 1}."
            )
        raise ParserError(
            f"{excep}. {terminal_colors.highlight(extra_info)}"
        ).with_traceback(sys.exc_info()[2]) from excep


def load_settings(path: Optional[pathlib.Path]) -> BoundSettings:
    if path is None:
        return BoundSettings()
    content = load_yaml(path)
    if content is None:
        return BoundSettings()
    if not isinstance(content, dict):
        raise ParserError(
            terminal_colors.highlight(
                f"The settings file {path} must contain a mapping."
            )
        )
    try:
        return BoundSettings(**content)
    except TypeError as excep:
        raise ParserError(
            terminal_colors.highlight(f"Invalid settings in {path}: {excep}")
        ) from excep
