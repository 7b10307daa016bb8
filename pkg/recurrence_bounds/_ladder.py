import logging
from typing import Dict, Optional, Tuple

from ._difference_ring import DifferenceRing
from ._factored import FactoredElement
from ._matrix import RatFunMatrix
from ._rational_function import RationalFunction

logger = logging.getLogger(__name__)


class MatrixLadder:
    """The matrices M_j, -J <= j <= J, with tau^j(Y) = M_j Y for every
    solution of tau(Y) = M Y.

    M_0 = I, M_{j+1} = tau^j(M) M_j and M_j = tau^j(M^-1) M_{j+1} for j < 0.
    Contents and entry factorizations are computed once per j and cached on
    the instance.
    """

    def __init__(self, matrix: RatFunMatrix, ring: DifferenceRing, J: int) -> None:
        # pylint: disable=invalid-name
        if J < 1:
            raise ValueError(f"J must be a positive integer, got {J}.")
        if not matrix.is_square:
            raise ValueError(f"M must be square, got shape {matrix.shape}.")

        self.ring = ring
        self.J = J
        self.inverse = matrix.inverse()

        n = matrix.shape[0]
        self._matrices: Dict[int, RatFunMatrix] = {0: RatFunMatrix.identity(n)}
        for j in range(J):
            self._matrices[j + 1] = ring.tau_pow(matrix, j) @ self._matrices[j]
        for j in range(-1, -J - 1, -1):
            self._matrices[j] = ring.tau_pow(self.inverse, j) @ self._matrices[j + 1]
        logger.debug("Built M_j for %d <= j <= %d (n = %d)", -J, J, n)

        self._contents: Dict[int, RationalFunction] = {}
        self._factored_contents: Dict[int, FactoredElement] = {}
        self._factored_entries: Dict[
            int, Tuple[Tuple[Optional[FactoredElement], ...], ...]
        ] = {}

    def __getitem__(self, j: int) -> RatFunMatrix:
        return self._matrices[j]

    def indices(self) -> range:
        return range(-self.J, self.J + 1)

    def as_dict(self) -> Dict[int, RatFunMatrix]:
        return dict(self._matrices)

    def content(self, j: int) -> RationalFunction:
        if j not in self._contents:
            self._contents[j] = self._matrices[j].content()
        return self._contents[j]

    def factored_content(self, j: int) -> FactoredElement:
        if j not in self._factored_contents:
            self._factored_contents[j] = FactoredElement.from_rational_function(
                self.content(j)
            )
        return self._factored_contents[j]

    def factored_entries(
        self, j: int
    ) -> Tuple[Tuple[Optional[FactoredElement], ...], ...]:
        """Factorizations of the entries of M_j, None for zero entries."""
        if j not in self._factored_entries:
            self._factored_entries[j] = tuple(
                tuple(
                    None
                    if entry.is_zero
                    else FactoredElement.from_rational_function(entry)
                    for entry in row
                )
                for row in self._matrices[j].rows
            )
        return self._factored_entries[j]


def m_ladder(
    matrix: RatFunMatrix, J: int, ring: DifferenceRing
) -> Dict[int, RatFunMatrix]:
    # pylint: disable=invalid-name
    return MatrixLadder(matrix, ring, J).as_dict()
