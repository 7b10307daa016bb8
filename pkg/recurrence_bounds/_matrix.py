from typing import Callable, Iterator, List, Optional, Sequence, Tuple, Union, cast

from ._polynomial import Coefficient, Polynomial
from ._rational_function import RationalFunction

Entry = Union[RationalFunction, Polynomial, Coefficient]


class DimensionError(ValueError):
    pass


class SingularMatrixError(ArithmeticError):
    pass


def _as_entry(value: Entry) -> RationalFunction:
    return value if isinstance(value, RationalFunction) else RationalFunction(value)


class RatFunMatrix:
    """Immutable rectangular matrix with RationalFunction entries."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Sequence[Sequence[Entry]]) -> None:
        if not rows or not rows[0]:
            raise DimensionError("A matrix needs at least one row and one column.")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise DimensionError("All matrix rows must have the same length.")
        self._rows: Tuple[Tuple[RationalFunction, ...], ...] = tuple(
            tuple(_as_entry(entry) for entry in row) for row in rows
        )

    @classmethod
    def identity(cls, n: int) -> "RatFunMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries: Sequence[Entry]) -> "RatFunMatrix":
        n = len(entries)
        return cls(
            [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)]
        )

    @classmethod
    def column_vector(cls, entries: Sequence[Entry]) -> "RatFunMatrix":
        return cls([[entry] for entry in entries])

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self._rows), len(self._rows[0])

    @property
    def rows(self) -> Tuple[Tuple[RationalFunction, ...], ...]:
        return self._rows

    @property
    def is_square(self) -> bool:
        return self.shape[0] == self.shape[1]

    @property
    def is_zero(self) -> bool:
        return all(entry.is_zero for entry in self.entries())

    def __getitem__(self, index: Tuple[int, int]) -> RationalFunction:
        row, col = index
        return self._rows[row][col]

    def entries(self) -> Iterator[RationalFunction]:
        for row in self._rows:
            yield from row

    def column(self, index: int) -> Tuple[RationalFunction, ...]:
        return tuple(row[index] for row in self._rows)

    def map_entries(
        self, func: Callable[[RationalFunction], RationalFunction]
    ) -> "RatFunMatrix":
        return RatFunMatrix([[func(entry) for entry in row] for row in self._rows])

    def __matmul__(self, other: "RatFunMatrix") -> "RatFunMatrix":
        if self.shape[1] != other.shape[0]:
            raise DimensionError(
                f"Cannot multiply a {self.shape} matrix by a {other.shape} matrix."
            )
        columns = [other.column(j) for j in range(other.shape[1])]
        return RatFunMatrix(
            [
                [_dot(row, column) for column in columns]
                for row in self._rows
            ]
        )

    def scaled(self, factor: Entry) -> "RatFunMatrix":
        factor = _as_entry(factor)
        return self.map_entries(lambda entry: entry * factor)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatFunMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __str__(self) -> str:
        return "\n".join(", ".join(str(entry) for entry in row) for row in self._rows)

    def __repr__(self) -> str:
        return f"RatFunMatrix({[[str(entry) for entry in row] for row in self._rows]})"

    def content(self) -> RationalFunction:
        """g/d where d is the monic lcm of the entry denominators and g the
        monic gcd of the entries of d*A. The zero matrix has content 0."""
        nonzero = [entry for entry in self.entries() if not entry.is_zero]
        if not nonzero:
            return RationalFunction.zero()
        common_denominator = Polynomial.one()
        for entry in nonzero:
            common_denominator = common_denominator.lcm(entry.denominator)
        common_numerator = Polynomial.zero()
        for entry in nonzero:
            cleared = entry.numerator * common_denominator.exquo(entry.denominator)
            common_numerator = common_numerator.gcd(cleared)
        return RationalFunction(common_numerator, common_denominator)

    def _cleared_rows(self) -> Tuple[List[List[Polynomial]], List[Polynomial]]:
        """Rows multiplied by the lcm of their denominators."""
        polynomial_rows = []
        multipliers = []
        for row in self._rows:
            multiplier = Polynomial.one()
            for entry in row:
                multiplier = multiplier.lcm(entry.denominator)
            multipliers.append(multiplier)
            polynomial_rows.append(
                [entry.numerator * multiplier.exquo(entry.denominator) for entry in row]
            )
        return polynomial_rows, multipliers

    def inverse(self) -> "RatFunMatrix":
        """Exact inverse by fraction-free (Bareiss) elimination on the
        denominator-cleared matrix P = diag(l) A, so that the inverse is
        P^{-1} diag(l).
        """
        if not self.is_square:
            raise DimensionError(f"Cannot invert a non-square {self.shape} matrix.")
        n = self.shape[0]
        polynomial_rows, multipliers = self._cleared_rows()
        augmented = [
            row + [Polynomial.one() if i == j else Polynomial.zero() for j in range(n)]
            for i, row in enumerate(polynomial_rows)
        ]
        _bareiss_forward(augmented, n)
        determinant = augmented[n - 1][n - 1]

        # Back substitution yields X = det(P) * P^{-1}, still fraction free.
        solution: List[List[Optional[Polynomial]]] = [[None] * n for _ in range(n)]
        for i in reversed(range(n)):
            for j in range(n):
                accumulated = determinant * augmented[i][n + j]
                for m in range(i + 1, n):
                    known = cast(Polynomial, solution[m][j])
                    accumulated = accumulated - augmented[i][m] * known
                solution[i][j] = accumulated.exquo(augmented[i][i])

        return RatFunMatrix(
            [
                [
                    RationalFunction(
                        cast(Polynomial, solution[i][j]) * multipliers[j], determinant
                    )
                    for j in range(n)
                ]
                for i in range(n)
            ]
        )

    def determinant(self) -> RationalFunction:
        if not self.is_square:
            raise DimensionError(
                f"Determinant of a non-square {self.shape} matrix is undefined."
            )
        n = self.shape[0]
        polynomial_rows, multipliers = self._cleared_rows()
        try:
            sign = _bareiss_forward(polynomial_rows, n)
        except SingularMatrixError:
            return RationalFunction.zero()
        scale = Polynomial.one()
        for multiplier in multipliers:
            scale = scale * multiplier
        return RationalFunction(polynomial_rows[n - 1][n - 1] * sign, scale)

    def is_invertible(self) -> bool:
        return self.is_square and not self.determinant().is_zero


def _dot(
    row: Sequence[RationalFunction], column: Sequence[RationalFunction]
) -> RationalFunction:
    total = RationalFunction.zero()
    for left, right in zip(row, column):
        if not left.is_zero and not right.is_zero:
            total = total + left * right
    return total


def _bareiss_forward(rows: List[List[Polynomial]], n: int) -> int:
    """In-place fraction-free elimination of the first n columns. Pivots on
    the lowest-degree nonzero candidate. Returns the sign of the row
    permutation and raises SingularMatrixError when a column has no pivot.
    """
    sign = 1
    previous = Polynomial.one()
    width = len(rows[0])
    for k in range(n):
        candidates = [r for r in range(k, n) if not rows[r][k].is_zero]
        if not candidates:
            raise SingularMatrixError("Matrix is singular.")
        pivot = min(candidates, key=lambda r: rows[r][k].degree)
        if pivot != k:
            rows[k], rows[pivot] = rows[pivot], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, width):
                rows[i][j] = (rows[k][k] * rows[i][j] - rows[i][k] * rows[k][j]).exquo(
                    previous
                )
            rows[i][k] = Polynomial.zero()
        previous = rows[k][k]
    return sign
