import enum
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Set, Tuple, Union

from ._cw_bound import assemble_component_bounds, cw_local, matrix_exponent_function
from ._difference_ring import DifferenceRing, RingCase
from ._factored import factor, FactoredElement
from ._ladder import MatrixLadder
from ._local_bound import assemble_local_bound, exponent_function, local_bound
from ._matrix import DimensionError, RatFunMatrix, SingularMatrixError
from ._polynomial import Polynomial
from ._rational_function import RationalFunction, Valuation

logger = logging.getLogger(__name__)

Vector = Sequence[RationalFunction]


class BoundKind(enum.Enum):
    GLOBAL = "global"
    COMPONENTWISE = "componentwise"


class Caveat(enum.Enum):
    EXACT = "exact"
    UP_TO_D_FACTOR = "up-to-D-factor"


@dataclass(frozen=True)
class RecurrenceSystem:
    """The first order system tau(Y) = M Y with M square and invertible."""

    matrix: RatFunMatrix
    ring: DifferenceRing = field(default_factory=DifferenceRing.shift)

    def __post_init__(self) -> None:
        if not self.matrix.is_square:
            raise DimensionError(f"M must be square, got shape {self.matrix.shape}.")
        if not self.matrix.is_invertible():
            raise SingularMatrixError("M must be invertible.")

    @property
    def n(self) -> int:
        # pylint: disable=invalid-name
        return self.matrix.shape[0]

    def is_solution(self, vector: Vector) -> bool:
        if len(vector) != self.n:
            raise DimensionError(
                f"Expected a solution with {self.n} entries, got {len(vector)}."
            )
        column = RatFunMatrix.column_vector(vector)
        return self.ring.tau_pow(column, 1) == self.matrix @ column


@dataclass(frozen=True)
class ContentBound:
    """Global bound (one component) or component-wise bound (n components).
    A component None is the zero bound: the matching solution entries (all
    of them for a global bound) must vanish."""

    kind: BoundKind
    components: Tuple[Optional[FactoredElement], ...]
    caveat: Caveat = Caveat.EXACT
    J: int = 1  # pylint: disable=invalid-name
    iterations: int = 0
    cut_off: bool = False

    @property
    def value(
        self,
    ) -> Union[Optional[FactoredElement], Tuple[Optional[FactoredElement], ...]]:
        if self.kind is BoundKind.GLOBAL:
            return self.components[0]
        return self.components

    @property
    def is_zero(self) -> bool:
        return all(component is None for component in self.components)

    def denominator_degree(self) -> int:
        return sum(
            component.denominator_degree()
            for component in self.components
            if component is not None
        )

    def multipliers(self, n: int) -> Tuple[RationalFunction, ...]:
        """The diagonal of B as rational functions, zero for a zero bound."""
        expanded = tuple(
            RationalFunction.zero() if component is None else component.expand()
            for component in self.components
        )
        if self.kind is BoundKind.GLOBAL:
            return expanded * n
        if len(expanded) != n:
            raise DimensionError(f"Bound has {len(expanded)} components, expected {n}.")
        return expanded

    def valuation(self, prime: Polynomial, component: int = 0) -> Valuation:
        bound = self.components[component]
        return float("inf") if bound is None else bound.valuation(prime)

    def format(self, output_format: str = "factored") -> List[str]:
        return [
            "0" if component is None else component.format(output_format)
            for component in self.components
        ]


def _caveat(ring: DifferenceRing) -> Caveat:
    return Caveat.UP_TO_D_FACTOR if ring.case is RingCase.QSHIFT else Caveat.EXACT


def _denominator_primes(factored: FactoredElement) -> Set[Polynomial]:
    return {prime for prime, exponent in factored.factors if exponent < 0}


def global_bound(system: RecurrenceSystem, J: int) -> ContentBound:
    """Content bound B with every rational solution in B * F[x]^n, assembled
    from the scalar local bounds at the primes of den(c_1) and den(c_-1)."""
    # pylint: disable=invalid-name
    ring = system.ring
    ladder = MatrixLadder(system.matrix, ring, J)
    primes = _denominator_primes(ladder.factored_content(1)) | _denominator_primes(
        ladder.factored_content(-1)
    )

    bound = FactoredElement()
    iterations = 0
    for classrep in ring.partition_classes(primes):
        if ring.in_d(classrep.rep):
            logger.debug("Skipping the class of %s, it lies in D", classrep.rep)
            continue
        exponents = {
            j: exponent_function(ladder.factored_content(j), classrep, ring)
            for j in ladder.indices()
            if j != 0
        }
        local = local_bound(exponents, J)
        iterations += local.sweeps
        if local.no_solutions:
            logger.info(
                "J = %d: no nonzero rational solutions (prime %s)", J, classrep.rep
            )
            return ContentBound(BoundKind.GLOBAL, (None,), _caveat(ring), J, iterations)
        bound = bound * assemble_local_bound(local, classrep, ring)

    logger.info("J = %d: global bound %s", J, bound)
    return ContentBound(BoundKind.GLOBAL, (bound,), _caveat(ring), J, iterations)


def cw_bound(
    system: RecurrenceSystem,
    J: int,
    cutoff: int = 10,
    degree_bound: Optional[int] = None,
) -> ContentBound:
    """Component-wise content bound (B_1, ..., B_n) with Y_i in B_i * F[x]
    for every rational solution Y, from the primes of the entry denominators
    of M and M_-1."""
    # pylint: disable=invalid-name,too-many-locals
    ring = system.ring
    n = system.n
    ladder = MatrixLadder(system.matrix, ring, J)

    primes: Set[Polynomial] = set()
    for j in (1, -1):
        for row in ladder.factored_entries(j):
            for entry in row:
                if entry is not None:
                    primes |= _denominator_primes(entry)

    bounds = [FactoredElement()] * n
    vanishing = [False] * n
    iterations = 0
    cut_off = False
    for classrep in ring.partition_classes(primes):
        if ring.in_d(classrep.rep):
            logger.debug("Skipping the class of %s, it lies in D", classrep.rep)
            continue
        exponents = {
            j: matrix_exponent_function(
                ladder[j], classrep, ring, ladder.factored_entries(j)
            )
            for j in ladder.indices()
            if j != 0
        }
        local = cw_local(
            exponents,
            J,
            cutoff,
            n,
            degree_bound=degree_bound,
            prime_degree=int(classrep.rep.degree),
        )
        iterations += local.sweeps
        cut_off = cut_off or local.cut_off
        for index, part in enumerate(assemble_component_bounds(local, classrep, ring)):
            if part is None:
                vanishing[index] = True
            else:
                bounds[index] = bounds[index] * part

    components = tuple(
        None if vanishing[index] else bounds[index] for index in range(n)
    )
    logger.info(
        "J = %d: component-wise bound (%s)",
        J,
        ", ".join("0" if c is None else str(c) for c in components),
    )
    return ContentBound(
        BoundKind.COMPONENTWISE, components, _caveat(ring), J, iterations, cut_off
    )


def _nonzero_multipliers(
    system: RecurrenceSystem, bound: ContentBound
) -> Tuple[RationalFunction, ...]:
    multipliers = bound.multipliers(system.n)
    zero = [index for index, value in enumerate(multipliers) if value.is_zero]
    if zero:
        raise ValueError(f"The bound has zero components {zero}, it is not invertible.")
    return multipliers


def transform_system(system: RecurrenceSystem, bound: ContentBound) -> RecurrenceSystem:
    """The system tau(Z) = M' Z with M' = tau(B)^-1 M B satisfied by
    Z = B^-1 Y."""
    multipliers = _nonzero_multipliers(system, bound)
    shifted = [system.ring.tau_pow(value, 1) for value in multipliers]
    n = system.n
    return RecurrenceSystem(
        RatFunMatrix(
            [
                [system.matrix[i, j] * multipliers[j] / shifted[i] for j in range(n)]
                for i in range(n)
            ]
        ),
        system.ring,
    )


def to_transformed_solution(
    system: RecurrenceSystem, bound: ContentBound, solution: Vector
) -> Tuple[RationalFunction, ...]:
    multipliers = _nonzero_multipliers(system, bound)
    return tuple(entry / multiplier for entry, multiplier in zip(solution, multipliers))


def from_transformed_solution(
    system: RecurrenceSystem, bound: ContentBound, solution: Vector
) -> Tuple[RationalFunction, ...]:
    multipliers = _nonzero_multipliers(system, bound)
    return tuple(entry * multiplier for entry, multiplier in zip(solution, multipliers))


@dataclass(frozen=True)
class Violation:
    """Solution `solution` is not contained in the bound: at `prime` its
    valuation is below the bound's. prime is None when the bound is zero
    and the solution is not."""

    solution: int
    component: Optional[int]
    prime: Optional[Polynomial]
    solution_valuation: Optional[Valuation] = None
    bound_valuation: Optional[Valuation] = None


@dataclass(frozen=True)
class VerificationReport:
    bound: ContentBound
    checked: int
    violations: Tuple[Violation, ...] = ()
    non_solutions: Tuple[int, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations and not self.non_solutions


def _relevant_primes(
    entries: Sequence[RationalFunction], bound: FactoredElement, ring: DifferenceRing
) -> List[Polynomial]:
    primes = set(bound.primes)
    for entry in entries:
        for part in (entry.numerator, entry.denominator):
            if not part.is_constant:
                primes |= set(factor(part).primes)
    return sorted((p for p in primes if not ring.in_d(p)), key=Polynomial.sort_key)


def verify_bound(
    system: RecurrenceSystem, bound: ContentBound, solutions: Sequence[Vector]
) -> VerificationReport:
    """Checks val_r(Y) >= val_r(B) at every prime r outside D for each
    solution Y (entrywise for component-wise bounds). Vectors failing the
    substitution check are reported as non-solutions."""
    violations: List[Violation] = []
    non_solutions: List[int] = []
    for index, solution in enumerate(solutions):
        if not system.is_solution(solution):
            non_solutions.append(index)
            continue
        if bound.kind is BoundKind.GLOBAL:
            groups = [(None, list(solution), bound.components[0])]
        else:
            groups = [
                (component, [solution[component]], bound.components[component])
                for component in range(system.n)
            ]
        for component, entries, factored in groups:
            nonzero = [entry for entry in entries if not entry.is_zero]
            if not nonzero:
                continue
            if factored is None:
                violations.append(Violation(index, component, None))
                continue
            for prime in _relevant_primes(nonzero, factored, system.ring):
                have = min(entry.order_at(prime) for entry in nonzero)
                need = factored.valuation(prime)
                if have < need:
                    violations.append(Violation(index, component, prime, have, need))

    if violations or non_solutions:
        logger.info(
            "Verification failed: %d violations, %d non-solutions",
            len(violations),
            len(non_solutions),
        )
    return VerificationReport(
        bound, len(solutions), tuple(violations), tuple(non_solutions)
    )
