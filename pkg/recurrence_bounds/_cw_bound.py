import logging
from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Sequence, Tuple

import numpy as np

from ._difference_ring import DifferenceRing, PrimeClassRep
from ._factored import FactoredElement
from ._local_bound import ExponentFunction, initial_window, ZERO_EXPONENTS
from ._matrix import RatFunMatrix
from ._polynomial import Polynomial
from ._tropical import min_plus_product, TropicalMatrix, TropicalValue

logger = logging.getLogger(__name__)

FactoredEntries = Sequence[Sequence[Optional[FactoredElement]]]


@dataclass(frozen=True, eq=False)
class MatrixExponentFunction:
    """k -> V_{tau^k(p)}(M_j). Outside [lo, hi] the value is at_infinity, which
    is +inf exactly at the zero entries of M_j and 0 elsewhere."""

    lo: int
    hi: int
    values: Tuple[TropicalMatrix, ...]
    at_infinity: TropicalMatrix

    def __call__(self, k: int) -> TropicalMatrix:
        if self.lo <= k <= self.hi:
            return self.values[k - self.lo]
        return self.at_infinity

    @property
    def n(self) -> int:
        # pylint: disable=invalid-name
        return self.at_infinity.shape[0]

    def support(self) -> Optional[Tuple[int, int]]:
        return (self.lo, self.hi) if self.values else None

    def scalar(self) -> ExponentFunction:
        """The exponent function of the content of M_j: min entry per k."""
        return ExponentFunction.from_mapping(
            {self.lo + i: int(value.min_entry()) for i, value in enumerate(self.values)}
        )


def matrix_exponent_function(
    matrix: RatFunMatrix,
    classrep: PrimeClassRep,
    ring: DifferenceRing,
    factored_entries: Optional[FactoredEntries] = None,
) -> MatrixExponentFunction:
    if ring.in_d(classrep.rep):
        raise ValueError(f"The prime {classrep.rep} lies in D.")
    if factored_entries is None:
        factored_entries = [
            [
                None if entry.is_zero else FactoredElement.from_rational_function(entry)
                for entry in row
            ]
            for row in matrix.rows
        ]

    zero_entries = np.array(
        [[entry is None for entry in row] for row in factored_entries], dtype=bool
    )
    at_infinity = np.where(zero_entries, np.inf, 0.0)

    overrides: Dict[int, np.ndarray] = {}
    for i, row in enumerate(factored_entries):
        for j, entry in enumerate(row):
            if entry is None:
                continue
            for prime, exponent in entry.factors:
                offset = ring.tau_equivalent(classrep.rep, prime)
                if offset is not None:
                    overrides.setdefault(offset, at_infinity.copy())[i, j] = exponent

    if not overrides:
        return MatrixExponentFunction(0, -1, (), TropicalMatrix(at_infinity))
    lo, hi = min(overrides), max(overrides)
    return MatrixExponentFunction(
        lo,
        hi,
        tuple(TropicalMatrix(overrides.get(k, at_infinity)) for k in range(lo, hi + 1)),
        TropicalMatrix(at_infinity),
    )


@dataclass(frozen=True, eq=False)
class ComponentLocalBound:
    """Vector valued local bound F with F_i(k) <= val_{tau^k(p)}(Y_i).

    Rows of values are F(k) for k = start, start + 1, ...; F(k) = 0 outside
    the stored rows. A +inf entry forces the corresponding solution entry to
    vanish.
    """

    lo: int
    hi: int
    start: int
    values: np.ndarray
    sweeps: int = 0
    cut_off: bool = False

    @property
    def n(self) -> int:
        # pylint: disable=invalid-name
        return int(self.values.shape[1])

    @property
    def stop(self) -> int:
        return self.start + self.values.shape[0] - 1

    def __call__(self, k: int) -> np.ndarray:
        if self.start <= k <= self.stop:
            return self.values[k - self.start]
        return np.zeros(self.n)

    def component(self, index: int) -> Dict[int, TropicalValue]:
        return {
            self.start + row: (int(value) if np.isfinite(value) else float(value))
            for row, value in enumerate(self.values[:, index])
            if value != 0
        }

    def vanishes(self, index: int) -> bool:
        return bool(np.isposinf(self.values[:, index]).any())


def _row(start: int, rows: np.ndarray, k: int) -> np.ndarray:
    if 0 <= k - start < rows.shape[0]:
        return rows[k - start]
    return np.zeros(rows.shape[1])


def _sweep(
    start: int,
    rows: np.ndarray,
    E: Mapping[int, MatrixExponentFunction],
    J: int,
    frame: Tuple[int, int],
) -> Tuple[int, np.ndarray]:
    # pylint: disable=invalid-name
    new_start = start - J
    new_rows = np.empty((rows.shape[0] + 2 * J, rows.shape[1]))
    for index in range(new_rows.shape[0]):
        k = new_start + index
        best = _row(start, rows, k)
        for j in range(-J, J + 1):
            if j == 0:
                continue
            candidate = min_plus_product(
                E[j](k + j).values, _row(start, rows, k + j)[:, None]
            )[:, 0]
            best = np.maximum(best, candidate)
        new_rows[index] = best
    return _trim(new_start, new_rows, frame)


def _trim(
    start: int, rows: np.ndarray, frame: Tuple[int, int]
) -> Tuple[int, np.ndarray]:
    """Drops all-zero rows at either end that lie outside the frame."""
    first, last = 0, rows.shape[0] - 1
    while first <= last and start + first < frame[0] and not rows[first].any():
        first += 1
    while last >= first and start + last > frame[1] and not rows[last].any():
        last -= 1
    return start + first, rows[first : last + 1]


def _same(first: Tuple[int, np.ndarray], second: Tuple[int, np.ndarray]) -> bool:
    (start_1, rows_1), (start_2, rows_2) = first, second
    if rows_1.shape[0] == 0 or rows_2.shape[0] == 0:
        return not rows_1.any() and not rows_2.any()
    low = min(start_1, start_2)
    high = max(start_1 + rows_1.shape[0], start_2 + rows_2.shape[0])
    return all(
        np.array_equal(_row(start_1, rows_1, k), _row(start_2, rows_2, k))
        for k in range(low, high)
    )


def _negative_entries(rows: np.ndarray) -> np.ndarray:
    return np.sort(rows[rows < 0])


def _implied_degree(rows: np.ndarray, prime_degree: int) -> int:
    positive = np.where(np.isfinite(rows) & (rows > 0), rows, 0)
    if positive.size == 0:
        return 0
    return int(positive.sum(axis=0).max()) * prime_degree


def cw_local(
    E: Mapping[int, MatrixExponentFunction],
    J: int,
    cutoff: int = 10,
    n: Optional[int] = None,
    *,
    degree_bound: Optional[int] = None,
    prime_degree: int = 1,
) -> ComponentLocalBound:
    """Tropical fixed-point iteration
    F_new(k) = max(E_j(k + j) (x) F(k + j) for -J <= j <= J).

    Stops at a fixed point, or returns the current F_new once the multiset of
    negative entries has stayed unchanged for more than `cutoff` sweeps in a
    row. With a degree bound D it also returns as soon as the positive part of
    some component implies a divisor of degree above n * (D + 1).
    """
    # pylint: disable=invalid-name,too-many-arguments,too-many-locals
    if J < 1:
        raise ValueError(f"J must be a positive integer, got {J}.")
    if cutoff < 1:
        raise ValueError(f"The cut-off must be a positive integer, got {cutoff}.")
    missing = [j for j in range(-J, J + 1) if j != 0 and j not in E]
    if missing:
        raise ValueError(f"Matrix exponent functions missing for j = {missing}.")
    if n is None:
        n = E[1].n

    lo, hi, _ = initial_window(
        E[1].scalar() if 1 in E else ZERO_EXPONENTS,
        E[-1].scalar() if -1 in E else ZERO_EXPONENTS,
    )
    lows, highs = [lo], [hi]
    for j in range(-J, J + 1):
        support = E[j].support() if j != 0 else None
        if support is not None:
            lows.append(support[0] - j)
            highs.append(support[1] - j)
    frame = (min(lows), max(highs))

    rows = np.zeros((max(0, frame[1] - frame[0] + 1), n))
    if lo <= hi:
        rows[lo - frame[0] : hi - frame[0] + 1] = -np.inf
    current = (frame[0], rows)

    stable_sweeps = 0
    sweeps = 0
    while True:
        updated = _sweep(*current, E, J, frame)
        sweeps += 1
        if _same(current, updated):
            logger.debug("Component bound stable after %d sweeps", sweeps)
            return ComponentLocalBound(lo, hi, *current, sweeps=sweeps)

        if np.array_equal(_negative_entries(current[1]), _negative_entries(updated[1])):
            stable_sweeps += 1
        else:
            stable_sweeps = 0

        if stable_sweeps > cutoff:
            logger.warning(
                "Component bound cut off after %d sweeps without a fixed point", sweeps
            )
            return ComponentLocalBound(lo, hi, *updated, sweeps=sweeps, cut_off=True)
        if (
            degree_bound is not None
            and _implied_degree(updated[1], prime_degree) > n * (degree_bound + 1)
        ):
            logger.warning(
                "Component bound exceeds the degree bound %d after %d sweeps",
                degree_bound,
                sweeps,
            )
            return ComponentLocalBound(lo, hi, *updated, sweeps=sweeps, cut_off=True)
        current = updated


def assemble_component_bounds(
    F: ComponentLocalBound, classrep: PrimeClassRep, ring: DifferenceRing
) -> Tuple[Optional[FactoredElement], ...]:
    """B_i = prod(tau^k(rep) ** F_i(k)), or None (the zero bound) when
    component i carries +inf."""
    # pylint: disable=invalid-name
    bounds = []
    for index in range(F.n):
        if F.vanishes(index):
            bounds.append(None)
            continue
        exponents: Dict[Polynomial, int] = {}
        for k, value in F.component(index).items():
            if value == -np.inf:
                raise ValueError(f"Component {index} is still -inf at k = {k}.")
            exponents[ring.translate(classrep.rep, k)] = int(value)
        bounds.append(FactoredElement.from_exponents(exponents))
    return tuple(bounds)
