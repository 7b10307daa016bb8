from typing import List, Tuple

import pytest
import sympy

from recurrence_bounds import (
    BoundKind,
    ContentBound,
    DifferenceRing,
    FactoredElement,
    MatrixLadder,
    Polynomial,
    RatFunMatrix,
    RationalFunction,
    RecurrenceSystem,
    cw_bound,
    from_transformed_solution,
    global_bound,
    random_system_with_solutions,
    system_from_fundamental_matrix,
    to_transformed_solution,
    transform_system,
    verify_bound,
)

X = Polynomial.x()
CORPUS = range(200)


def _corpus_system(
    seed: int,
) -> Tuple[RecurrenceSystem, List[Tuple[RationalFunction, ...]]]:
    return random_system_with_solutions(seed % 3 + 1, seed, complexity=1 + seed % 2)


def _no_weaker(sharp: FactoredElement, coarse: FactoredElement) -> bool:
    return all(
        sharp.valuation(prime) >= coarse.valuation(prime)
        for prime in coarse.primes + sharp.primes
    )


@pytest.mark.parametrize("seed", CORPUS)
def test_generated_solutions_satisfy_their_system(seed: int) -> None:
    system, solutions = _corpus_system(seed)
    assert len(solutions) == system.n
    assert all(system.is_solution(solution) for solution in solutions)


@pytest.mark.parametrize("J", [1, 2])
@pytest.mark.parametrize("seed", CORPUS)
def test_global_bound_contains_every_solution(
    seed: int, J: int  # pylint: disable=invalid-name
) -> None:
    system, solutions = _corpus_system(seed)
    bound = global_bound(system, J)
    assert not bound.is_zero
    report = verify_bound(system, bound, solutions)
    assert report.passed, report.violations


@pytest.mark.parametrize("J", [1, 2])
@pytest.mark.parametrize("seed", CORPUS)
def test_componentwise_bound_contains_every_solution(
    seed: int, J: int  # pylint: disable=invalid-name
) -> None:
    system, solutions = _corpus_system(seed)
    report = verify_bound(system, cw_bound(system, J), solutions)
    assert report.passed, report.violations


@pytest.mark.parametrize("seed", CORPUS)
def test_larger_j_gives_a_sharper_global_bound(seed: int) -> None:
    system, _ = _corpus_system(seed)
    bounds = [global_bound(system, J).value for J in (1, 2, 3)]
    for coarse, sharp in zip(bounds, bounds[1:]):
        assert isinstance(coarse, FactoredElement)
        assert isinstance(sharp, FactoredElement)
        assert _no_weaker(sharp, coarse)


@pytest.mark.parametrize("seed", CORPUS)
def test_componentwise_fixed_point_is_sharper_than_global(seed: int) -> None:
    system, _ = _corpus_system(seed)
    componentwise = cw_bound(system, 1)
    if componentwise.cut_off:
        pytest.skip("stopped through the cut-off")
    overall = global_bound(system, 1).value
    assert isinstance(overall, FactoredElement)
    for component in componentwise.components:
        assert component is None or _no_weaker(component, overall)


@pytest.mark.parametrize("seed", CORPUS)
def test_transform_round_trip(seed: int) -> None:
    system, solutions = _corpus_system(seed)
    bound = global_bound(system, 1)
    reduced = transform_system(system, bound)
    for solution in solutions:
        transformed = to_transformed_solution(system, bound, solution)
        assert reduced.is_solution(transformed)
        assert from_transformed_solution(system, bound, transformed) == tuple(solution)
        # shift case: Z = B^-1 Y is polynomial
        for entry in transformed:
            assert entry.is_zero or entry.denominator.is_constant


@pytest.mark.parametrize("shift", range(-3, 4))
def test_no_solutions_marker_for_gamma_like_systems(shift: int) -> None:
    system = RecurrenceSystem(RatFunMatrix([[X + shift]]))
    assert global_bound(system, 1).is_zero
    assert global_bound(system, 2).is_zero


def test_no_rational_solution_of_low_degree_over_the_candidate_denominator() -> None:
    # tau(y) = (x+1)*y, ansatz y = P/d with deg P <= 8
    matrix = RatFunMatrix([[X + 1]])
    ladder = MatrixLadder(matrix, DifferenceRing.shift(), 1)
    primes = {
        prime
        for j in (1, -1)
        for prime, exponent in ladder.factored_content(j).factors
        if exponent < 0
    }
    assert primes == {X}

    denominator = Polynomial.one()
    for prime in primes:
        for k in range(-8, 9):
            denominator = denominator * prime.shift(k)

    images = [
        (X + 1) ** i * denominator - (X + 1) * X**i * denominator.shift(1)
        for i in range(9)
    ]
    size = max(len(image.coefficients) for image in images)
    rows = [
        [
            sympy.Rational(c.numerator, c.denominator)
            for c in image.coefficients + (0,) * (size - len(image.coefficients))
        ]
        for image in images
    ]
    assert sympy.Matrix(rows).rank() == len(images)


def test_first_order_scalar_solutions_are_contained() -> None:
    # tau(y) = y*(x+c)/(x+d) is solved by a product of consecutive linear factors
    for c in range(-2, 3):
        for d in range(-2, 3):
            a = RationalFunction(X + c, X + d)
            system = RecurrenceSystem(RatFunMatrix([[a]]))
            bound = global_bound(system, 1)
            if c == d:
                solution = RationalFunction.one()
            elif c > d:
                solution = RationalFunction.one()
                for k in range(d, c):
                    solution = solution * (X + k)
            else:
                solution = RationalFunction.one()
                for k in range(c, d):
                    solution = solution / (X + k)
            assert system.is_solution([solution])
            assert verify_bound(system, bound, [[solution]]).passed


def test_non_solutions_and_violations_are_reported() -> None:
    fundamental = RatFunMatrix([[RationalFunction(1, X)]])
    system, (solution,) = system_from_fundamental_matrix(fundamental)

    report = verify_bound(system, global_bound(system, 1), [[RationalFunction.x()]])
    assert not report.passed
    assert report.non_solutions == (0,)

    too_small = ContentBound(BoundKind.GLOBAL, (FactoredElement(),))
    report = verify_bound(system, too_small, [solution])
    assert not report.passed
    (violation,) = report.violations
    assert violation.prime == X
    assert violation.solution_valuation == -1
    assert violation.bound_valuation == 0

    zero = ContentBound(BoundKind.GLOBAL, (None,))
    (violation,) = verify_bound(system, zero, [solution]).violations
    assert violation.prime is None
    with pytest.raises(ValueError):
        transform_system(system, zero)
