import logging
from typing import List, Optional, Tuple

import numpy as np

from ._bound_engine import RecurrenceSystem
from ._difference_ring import DifferenceRing
from ._matrix import RatFunMatrix, SingularMatrixError
from ._polynomial import Polynomial
from ._rational_function import RationalFunction

logger = logging.getLogger(__name__)

Solutions = List[Tuple[RationalFunction, ...]]

MAX_ATTEMPTS = 100


def system_from_fundamental_matrix(
    fundamental: RatFunMatrix, ring: Optional[DifferenceRing] = None
) -> Tuple[RecurrenceSystem, Solutions]:
    """The system with M = tau(W) W^-1, whose solutions include every column
    of W (and so every W v with v constant)."""
    ring = DifferenceRing.shift() if ring is None else ring
    matrix = ring.tau_pow(fundamental, 1) @ fundamental.inverse()
    columns = [fundamental.column(j) for j in range(fundamental.shape[1])]
    return RecurrenceSystem(matrix, ring), columns


def _random_polynomial(rng: np.random.Generator, degree: int) -> Polynomial:
    return Polynomial(int(c) for c in rng.integers(-3, 4, size=degree + 1))


def _random_denominator(rng: np.random.Generator, complexity: int) -> Polynomial:
    denominator = Polynomial.one()
    for _ in range(int(rng.integers(0, complexity + 1))):
        if complexity > 1 and rng.random() < 0.2:
            factor = Polynomial([int(rng.integers(1, 4)), int(rng.integers(-2, 3)), 1])
        else:
            factor = Polynomial([int(rng.integers(-3, 4)), 1])
        denominator = denominator * factor
    return denominator


def _random_entry(rng: np.random.Generator, complexity: int) -> RationalFunction:
    if rng.random() < 0.15:
        return RationalFunction.zero()
    numerator = _random_polynomial(rng, int(rng.integers(0, complexity + 1)))
    if numerator.is_zero:
        numerator = Polynomial.one()
    return RationalFunction(numerator, _random_denominator(rng, complexity))


def random_system_with_solutions(
    n: int,
    seed: int,
    complexity: int = 1,
    ring: Optional[DifferenceRing] = None,
) -> Tuple[RecurrenceSystem, Solutions]:
    """A random system with n known independent rational solutions, built
    from a random invertible W. Singular draws are discarded."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}.")
    rng = np.random.default_rng(seed)
    for attempt in range(MAX_ATTEMPTS):
        fundamental = RatFunMatrix(
            [[_random_entry(rng, complexity) for _ in range(n)] for _ in range(n)]
        )
        try:
            return system_from_fundamental_matrix(fundamental, ring)
        except SingularMatrixError:
            logger.debug("Attempt %d gave a singular W, drawing again", attempt)
    raise SingularMatrixError(
        f"No invertible W found in {MAX_ATTEMPTS} attempts (seed {seed})."
    )


def eigenring_system(
    a0: RationalFunction, a1: RationalFunction, ring: Optional[DifferenceRing] = None
) -> RecurrenceSystem:
    """The 4x4 system whose rational solutions give the eigenring of the
    operator tau^2 + a1 tau + a0."""
    ring = DifferenceRing.shift() if ring is None else ring
    if a0.is_zero:
        raise ValueError("a0 must be nonzero.")
    b = ring.tau_pow(a0, 1).inverse()  # pylint: disable=invalid-name
    return RecurrenceSystem(
        RatFunMatrix(
            [
                [0, 0, 0, 1],
                [0, 0, -b, -a1 * b],
                [0, -a0, 0, -a1],
                [a0 * b, a0 * a1 * b, a1 * b, a1 * a1 * b],
            ]
        ),
        ring,
    )
