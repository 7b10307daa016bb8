import logging
import math
from dataclasses import dataclass, replace
from typing import Dict, Iterator, List, Mapping, Optional, Tuple, Union

from ._difference_ring import DifferenceRing, PrimeClassRep
from ._factored import FactoredElement
from ._polynomial import Polynomial
from ._rational_function import RationalFunction

logger = logging.getLogger(__name__)

NEG_INFINITY = -math.inf

BoundValue = Union[int, float]


@dataclass(frozen=True)
class ExponentFunction:
    """k -> val_{tau^k(p)}(c) for a content c and a prime p. Values are
    stored for lo <= k <= hi and are 0 elsewhere."""

    lo: int = 0
    hi: int = -1
    values: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if len(self.values) != max(0, self.hi - self.lo + 1):
            raise ValueError("Exponent function values must cover [lo, hi] exactly.")

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> "ExponentFunction":
        support = [k for k, value in mapping.items() if value != 0]
        if not support:
            return cls()
        lo, hi = min(support), max(support)
        return cls(lo, hi, tuple(mapping.get(k, 0) for k in range(lo, hi + 1)))

    def __call__(self, k: int) -> int:
        if self.lo <= k <= self.hi:
            return self.values[k - self.lo]
        return 0

    def support(self) -> Optional[Tuple[int, int]]:
        """Tight support bounds, None when the function is identically 0."""
        nonzero = [self.lo + i for i, value in enumerate(self.values) if value != 0]
        if not nonzero:
            return None
        return nonzero[0], nonzero[-1]

    def as_dict(self) -> Dict[int, int]:
        return {self.lo + i: v for i, v in enumerate(self.values) if v != 0}


ZERO_EXPONENTS = ExponentFunction()


@dataclass(frozen=True)
class LocalBound:
    """Local content bound f with val_{tau^k(p)}(Y) >= f(k) for every rational
    solution Y.

    [lo, hi] is the window outside which f is known to be >= 0, values are
    stored from k = start on and are 0 outside the stored range. When
    no_solutions is set the system has no nonzero rational solution and f
    carries no values.
    """

    lo: int
    hi: int
    start: int = 0
    values: Tuple[BoundValue, ...] = ()
    no_solutions: bool = False
    history: Tuple["LocalBound", ...] = ()
    sweeps: int = 0

    @property
    def stop(self) -> int:
        return self.start + len(self.values) - 1

    def __call__(self, k: int) -> BoundValue:
        if self.no_solutions:
            raise ValueError("The no-solutions marker has no values.")
        if self.start <= k <= self.stop:
            return self.values[k - self.start]
        return 0

    def items(self) -> Iterator[Tuple[int, BoundValue]]:
        for i, value in enumerate(self.values):
            yield self.start + i, value

    def as_dict(self) -> Dict[int, BoundValue]:
        return {k: value for k, value in self.items() if value != 0}

    @property
    def is_finite(self) -> bool:
        return not self.no_solutions and all(v != NEG_INFINITY for v in self.values)


def exponent_function(
    content: Union[RationalFunction, FactoredElement],
    classrep: PrimeClassRep,
    ring: DifferenceRing,
) -> ExponentFunction:
    if isinstance(content, RationalFunction):
        if content.is_zero:
            raise ValueError("The exponent function of a zero content is undefined.")
        content = FactoredElement.from_rational_function(content)
    if ring.in_d(classrep.rep):
        raise ValueError(f"The prime {classrep.rep} lies in D.")

    mapping: Dict[int, int] = {}
    for prime, exponent in content.factors:
        offset = ring.tau_equivalent(classrep.rep, prime)
        if offset is not None:
            mapping[offset] = exponent
    return ExponentFunction.from_mapping(mapping)


def initial_window(
    e1: ExponentFunction, em1: ExponentFunction
) -> Tuple[int, int, LocalBound]:
    """Window [l, m] outside of which every local bound is >= 0, with
    l = min(l_1, l_-1 + 1) and m = max(m_1 - 1, m_-1). The returned f is -inf
    on the window and 0 elsewhere."""
    support_1, support_m1 = e1.support(), em1.support()
    lows = []
    highs = []
    if support_1 is not None:
        lows.append(support_1[0])
        highs.append(support_1[1] - 1)
    if support_m1 is not None:
        lows.append(support_m1[0] + 1)
        highs.append(support_m1[1])
    if not lows:
        return 0, -1, LocalBound(0, -1)

    lo, hi = min(lows), max(highs)
    if lo > hi:
        return lo, hi, LocalBound(lo, hi)
    return lo, hi, LocalBound(lo, hi, lo, (NEG_INFINITY,) * (hi - lo + 1))


def _working_window(
    f: LocalBound, e: Mapping[int, ExponentFunction], J: int
) -> Tuple[int, int]:
    # pylint: disable=invalid-name
    lows = [f.lo - J]
    highs = [f.hi + J]
    if f.values:
        lows.append(f.start)
        highs.append(f.stop)
    for j, exponents in e.items():
        support = exponents.support()
        if support is not None and -J <= j <= J:
            lows.append(support[0] - j)
            highs.append(support[1] - j)
    return min(lows), max(highs)


def improve(f: LocalBound, e: Mapping[int, ExponentFunction], J: int) -> LocalBound:
    """f_new(k) = max(e_j(k + j) + f(k + j) for -J <= j <= J), computed from
    the old f at every k of the working window."""
    # pylint: disable=invalid-name
    if f.no_solutions:
        raise ValueError("Cannot improve the no-solutions marker.")
    start, stop = _working_window(f, e, J)
    values = tuple(
        max(e.get(j, ZERO_EXPONENTS)(k + j) + f(k + j) for j in range(-J, J + 1))
        for k in range(start, stop + 1)
    )
    return LocalBound(f.lo, f.hi, start, values)


def _same_values(f: LocalBound, g: LocalBound) -> bool:
    start = min(f.start, g.start)
    stop = max(f.stop, g.stop)
    return all(f(k) == g(k) for k in range(start, stop + 1))


def local_bound(e: Mapping[int, ExponentFunction], J: int) -> LocalBound:
    """Iterates improve from the initial window to a fixed point. Returns the
    no-solutions marker as soon as a positive value shows up outside the
    window."""
    # pylint: disable=invalid-name
    if J < 1:
        raise ValueError(f"J must be a positive integer, got {J}.")
    lo, hi, f = initial_window(e.get(1, ZERO_EXPONENTS), e.get(-1, ZERO_EXPONENTS))
    history: List[LocalBound] = [f]
    sweeps = 0
    while True:
        f_new = improve(f, e, J)
        sweeps += 1
        escaped = [k for k, value in f_new.items() if value > 0 and not lo <= k <= hi]
        if escaped:
            logger.debug(
                "Positive value at k = %d outside [%d, %d], no rational solutions",
                escaped[0],
                lo,
                hi,
            )
            return LocalBound(
                lo, hi, no_solutions=True, history=tuple(history), sweeps=sweeps
            )
        if _same_values(f, f_new):
            logger.debug("Local bound stable after %d sweeps", sweeps)
            return replace(f_new, history=tuple(history), sweeps=sweeps)
        history.append(f_new)
        f = f_new


def assemble_local_bound(
    f: LocalBound, classrep: PrimeClassRep, ring: DifferenceRing
) -> FactoredElement:
    """prod(tau^k(rep) ** f(k)) over the support of f."""
    if f.no_solutions:
        raise ValueError("The no-solutions marker does not give a factored bound.")
    exponents: Dict[Polynomial, int] = {}
    for k, value in f.as_dict().items():
        if value == NEG_INFINITY:
            raise ValueError(f"Local bound is still -inf at k = {k}.")
        exponents[ring.translate(classrep.rep, k)] = int(value)
    return FactoredElement.from_exponents(exponents)
