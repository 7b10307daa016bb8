import pathlib
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple

from ._bound_engine import RecurrenceSystem
from ._difference_ring import DifferenceRing, RingCase
from ._matrix import RatFunMatrix
from ._polynomial import Polynomial
from ._rational_function import RationalFunction
from .utils import terminal_colors


class ParserError(Exception):
    pass


class Token(NamedTuple):
    kind: str
    text: str
    position: int


_TOKEN_PATTERN = re.compile(
    r"\s*(?:(?P<integer>[0-9]+)|(?P<symbol>x)|(?P<operator>[-+*/^()]))"
)


def _error(message: str, text: str, position: int) -> ParserError:
    return ParserError(
        terminal_colors.highlight(
            f"{message} at position {position + 1} in '{text}'.\n"
            f"  {text}\n  {' ' * position}^"
        )
    )


def tokenize(text: str) -> List[Token]:
    tokens = []
    position = 0
    while position < len(text):
        if text[position:].isspace():
            break
        match = _TOKEN_PATTERN.match(text, position)
        if match is None:
            offset = position + len(text[position:]) - len(text[position:].lstrip())
            raise _error(f"Unexpected character {text[offset]!r}", text, offset)
        kind = str(match.lastgroup)
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _ExpressionParser:
    """Recursive descent over

        expression := term (("+" | "-") term)*
        term       := unary (("*" | "/") unary)*
        unary      := "-" unary | power
        power      := atom ("^" integer)?
        atom       := integer | "x" | "(" expression ")"
    """

    def __init__(self, text: str) -> None:
        self._text = text
        self._tokens = tokenize(text)
        self._index = 0

    @property
    def _current(self) -> Token:
        return self._tokens[self._index]

    def _advance(self) -> Token:
        token = self._current
        self._index += 1
        return token

    def _expect(self, kind: str, text: Optional[str] = None) -> Token:
        token = self._current
        if token.kind != kind or (text is not None and token.text != text):
            expected = text if text is not None else kind
            found = token.text if token.kind != "end" else "end of input"
            raise _error(
                f"Expected {expected!r}, found {found!r}", self._text, token.position
            )
        return self._advance()

    def parse(self) -> RationalFunction:
        if self._current.kind == "end":
            raise _error("Empty expression", self._text, 0)
        value = self._expression()
        self._expect("end")
        return value

    def _is_operator(self, *symbols: str) -> bool:
        return self._current.kind == "operator" and self._current.text in symbols

    def _expression(self) -> RationalFunction:
        value = self._term()
        while self._is_operator("+", "-"):
            if self._advance().text == "+":
                value = value + self._term()
            else:
                value = value - self._term()
        return value

    def _term(self) -> RationalFunction:
        value = self._unary()
        while self._is_operator("*", "/"):
            operator = self._advance()
            right = self._unary()
            if operator.text == "*":
                value = value * right
            elif right.is_zero:
                raise _error("Division by zero", self._text, operator.position)
            else:
                value = value / right
        return value

    def _unary(self) -> RationalFunction:
        if self._is_operator("-"):
            self._advance()
            return -self._unary()
        return self._power()

    def _power(self) -> RationalFunction:
        base = self._atom()
        if self._is_operator("^"):
            self._advance()
            return base ** int(self._expect("integer").text)
        return base

    def _atom(self) -> RationalFunction:
        token = self._current
        if token.kind == "integer":
            self._advance()
            return RationalFunction(int(token.text))
        if token.kind == "symbol":
            self._advance()
            return RationalFunction(Polynomial.x())
        if self._is_operator("("):
            self._advance()
            value = self._expression()
            self._expect("operator", ")")
            return value
        found = token.text if token.kind != "end" else "end of input"
        raise _error(f"Unexpected {found!r}", self._text, token.position)


def parse_expression(text: str) -> RationalFunction:
    """Parses integers, x, unary minus, + - * / and ^ with a nonnegative
    integer exponent into a canonical rational function."""
    return _ExpressionParser(text).parse()


def format_expression(value: RationalFunction) -> str:
    return str(value)


def _content_lines(text: str) -> Iterator[Tuple[int, str]]:
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if line:
            yield number, line


def _parse_row(
    line: str, number: int, width: int, source: str
) -> Tuple[RationalFunction, ...]:
    cells = [cell.strip() for cell in line.split(",")]
    if len(cells) != width:
        raise ParserError(
            terminal_colors.highlight(
                f"Line {number} of {source} has {len(cells)} entries, expected {width}."
            )
        )
    try:
        return tuple(parse_expression(cell) for cell in cells)
    except ParserError as excep:
        raise ParserError(f"Line {number} of {source}: {excep}") from excep


def _parse_ring(value: str, number: int, source: str) -> DifferenceRing:
    match = re.fullmatch(r"(shift|qshift)(?:\s+q\s*=\s*(\S+))?", value)
    if match is None or (match.group(1) == "qshift") != (match.group(2) is not None):
        raise ParserError(
            terminal_colors.highlight(
                f"Line {number} of {source}: expected 'case: shift' or "
                f"'case: qshift q=<rational>', got 'case: {value}'."
            )
        )
    if match.group(1) == "shift":
        return DifferenceRing.shift()
    try:
        return DifferenceRing.qshift(Fraction(match.group(2)))
    except (ValueError, ZeroDivisionError) as excep:
        raise ParserError(
            terminal_colors.highlight(f"Line {number} of {source}: {excep}")
        ) from excep


@dataclass(frozen=True)
class SystemFile:
    """Plain text description of tau(Y) = M Y:

        case: shift            (or: case: qshift q=<rational>)
        n: <int>
        <n lines with n comma separated expressions>

    Everything after '#' on a line is a comment.
    """

    ring: DifferenceRing
    n: int
    rows: Tuple[Tuple[RationalFunction, ...], ...]

    @classmethod
    def parse(cls, text: str, source: str = "<string>") -> "SystemFile":
        lines = list(_content_lines(text))
        header: Dict[str, Tuple[int, str]] = {}
        for number, line in lines[:2]:
            key, _, value = line.partition(":")
            header[key.strip()] = (number, value.strip())
        if set(header) != {"case", "n"}:
            raise ParserError(
                terminal_colors.highlight(
                    f"{source} must start with a 'case:' line and an 'n:' line."
                )
            )

        ring = _parse_ring(header["case"][1], header["case"][0], source)
        number, size = header["n"]
        if not size.isdigit() or int(size) < 1:
            raise ParserError(
                terminal_colors.highlight(
                    f"Line {number} of {source}: "
                    f"n must be a positive integer, got '{size}'."
                )
            )
        n = int(size)

        body = lines[2:]
        if len(body) != n:
            raise ParserError(
                terminal_colors.highlight(
                    f"{source} has {len(body)} matrix rows, expected {n}."
                )
            )
        rows = tuple(_parse_row(line, number, n, source) for number, line in body)
        return cls(ring, n, rows)

    @classmethod
    def read(cls, path: pathlib.Path) -> "SystemFile":
        return cls.parse(_read_text(path), str(path))

    def system(self) -> RecurrenceSystem:
        return RecurrenceSystem(RatFunMatrix(self.rows), self.ring)


def _read_text(path: pathlib.Path) -> str:
    try:
        return pathlib.Path(path).read_text(encoding="utf-8")
    except OSError as excep:
        raise ParserError(
            terminal_colors.highlight(f"Could not read {path}: {excep.strerror}.")
        ) from excep


def read_system_file(path: pathlib.Path) -> RecurrenceSystem:
    return SystemFile.read(path).system()


def parse_solutions(
    text: str, n: int, source: str = "<string>"
) -> List[Tuple[RationalFunction, ...]]:
    """One solution vector per line, n comma separated expressions each."""
    return [
        _parse_row(line, number, n, source) for number, line in _content_lines(text)
    ]


def read_solutions_file(
    path: pathlib.Path, n: int
) -> List[Tuple[RationalFunction, ...]]:
    return parse_solutions(_read_text(path), n, str(path))


def format_system(system: RecurrenceSystem) -> str:
    """Text that SystemFile.parse reads back into the same system."""
    if system.ring.case is RingCase.SHIFT:
        case = "shift"
    else:
        case = f"qshift q={system.ring.q}"
    lines = [f"case: {case}", f"n: {system.n}"]
    lines.extend(
        ", ".join(format_expression(entry) for entry in row)
        for row in system.matrix.rows
    )
    return "\n".join(lines) + "\n"
