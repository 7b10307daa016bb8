from typing import List, Sequence, Tuple, Union

import numpy as np

from ._matrix import DimensionError, RatFunMatrix
from ._polynomial import Polynomial

TropicalValue = Union[int, float]


def min_plus_product(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """(left (x) right)_ij = min_k left_ik + right_kj, with +inf absorbing in
    every sum (so inf + -inf is inf)."""
    if left.shape[1] != right.shape[0]:
        raise DimensionError(
            "Cannot multiply tropical matrices of shapes "
            f"{left.shape} and {right.shape}."
        )
    absorbing = np.isposinf(left)[:, :, None] | np.isposinf(right)[None, :, :]
    with np.errstate(invalid="ignore"):
        sums = left[:, :, None] + right[None, :, :]
    return np.where(absorbing, np.inf, sums).min(axis=1)


class TropicalMatrix:
    """Read-only matrix over Z u {+inf} (and -inf inside local bounds) with
    the min-plus product as @."""

    __slots__ = ("_values",)

    def __init__(
        self, values: Union[np.ndarray, Sequence[Sequence[TropicalValue]]]
    ) -> None:
        array = np.array(values, dtype=float)
        if array.ndim != 2:
            raise DimensionError("A tropical matrix must be two dimensional.")
        array.setflags(write=False)
        self._values = array

    @classmethod
    def identity(cls, n: int) -> "TropicalMatrix":
        values = np.full((n, n), np.inf)
        np.fill_diagonal(values, 0)
        return cls(values)

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def shape(self) -> Tuple[int, int]:
        return self._values.shape  # type: ignore[return-value]

    def __getitem__(self, index: Tuple[int, int]) -> TropicalValue:
        value = float(self._values[index])
        return int(value) if np.isfinite(value) else value

    def __matmul__(self, other: "TropicalMatrix") -> "TropicalMatrix":
        return tropical_mul(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TropicalMatrix):
            return NotImplemented
        return bool(np.array_equal(self._values, other._values))

    def __hash__(self) -> int:
        return hash(self._values.tobytes())

    def dominates(self, other: "TropicalMatrix") -> bool:
        """Entrywise self >= other."""
        return bool(np.all(self._values >= other._values))

    def min_entry(self) -> TropicalValue:
        value = float(self._values.min())
        return int(value) if np.isfinite(value) else value

    def to_list(self) -> List[List[TropicalValue]]:
        return [
            [int(v) if np.isfinite(v) else float(v) for v in row]
            for row in self._values
        ]

    def __repr__(self) -> str:
        return f"TropicalMatrix({self.to_list()})"


def tropical_mul(left: TropicalMatrix, right: TropicalMatrix) -> TropicalMatrix:
    return TropicalMatrix(min_plus_product(left.values, right.values))


def val_matrix(matrix: RatFunMatrix, prime: Polynomial) -> TropicalMatrix:
    """Entrywise valuation V_p(A); zero entries give +inf."""
    return TropicalMatrix(
        [[entry.order_at(prime) for entry in row] for row in matrix.rows]
    )
