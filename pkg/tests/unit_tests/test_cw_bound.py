import math

import numpy as np
import pytest

from recurrence_bounds import (
    ComponentLocalBound,
    DifferenceRing,
    FactoredElement,
    MatrixLadder,
    Polynomial,
    PrimeClassRep,
    RecurrenceSystem,
    assemble_component_bounds,
    cw_local,
    matrix_exponent_function,
)

X = Polynomial.x()
INF = math.inf
SHIFT = DifferenceRing.shift()
CLASS = PrimeClassRep(X - 1, ((X - 1, 0),))


def _diag_exponents(diag_x_1: RecurrenceSystem, J: int) -> dict:
    # pylint: disable=invalid-name
    ladder = MatrixLadder(diag_x_1.matrix, SHIFT, J)
    return {
        j: matrix_exponent_function(ladder[j], CLASS, SHIFT)
        for j in ladder.indices()
        if j != 0
    }


def _factors(count: int) -> FactoredElement:
    return FactoredElement.from_exponents({X - i: 1 for i in range(1, count + 1)})


def test_matrix_exponent_function(diag_x_1: RecurrenceSystem) -> None:
    exponents = _diag_exponents(diag_x_1, 1)

    plus = exponents[1]
    assert plus.support() == (1, 1)
    assert plus(1).to_list() == [[1, INF], [INF, 0]]
    assert plus(0).to_list() == [[0, INF], [INF, 0]]
    assert plus(7) == plus.at_infinity
    assert plus.n == 2
    assert not plus.scalar().as_dict()

    minus = exponents[-1]
    assert minus.support() == (0, 0)
    assert minus(0).to_list() == [[-1, INF], [INF, 0]]
    assert minus.scalar().as_dict() == {0: -1}


def test_matrix_exponent_function_rejects_primes_in_d(
    diag_x_1: RecurrenceSystem,
) -> None:
    constant = PrimeClassRep(Polynomial.one(), ((Polynomial.one(), 0),))
    with pytest.raises(ValueError):
        matrix_exponent_function(diag_x_1.matrix, constant, SHIFT)


def test_cut_off_stops_unbounded_growth(diag_x_1: RecurrenceSystem) -> None:
    local = cw_local(_diag_exponents(diag_x_1, 1), 1)
    assert local.cut_off
    assert local.sweeps == 11
    assert local.component(0) == {k: 1 for k in range(-10, 1)}
    assert local.component(1) == {}
    assert not local.vanishes(0)

    first, second = assemble_component_bounds(local, CLASS, SHIFT)
    assert first == _factors(11)
    assert second == FactoredElement()


def test_cut_off_counter(diag_x_1: RecurrenceSystem) -> None:
    local = cw_local(_diag_exponents(diag_x_1, 1), 1, cutoff=3)
    assert local.cut_off
    assert local.sweeps == 4
    assert assemble_component_bounds(local, CLASS, SHIFT)[0] == _factors(4)


def test_degree_bound_hook(diag_x_1: RecurrenceSystem) -> None:
    local = cw_local(_diag_exponents(diag_x_1, 1), 1, degree_bound=2)
    assert local.cut_off
    assert local.sweeps == 7
    assert assemble_component_bounds(local, CLASS, SHIFT)[0] == _factors(7)


def test_cw_local_rejects_bad_arguments(diag_x_1: RecurrenceSystem) -> None:
    exponents = _diag_exponents(diag_x_1, 1)
    with pytest.raises(ValueError):
        cw_local(exponents, 0)
    with pytest.raises(ValueError):
        cw_local(exponents, 1, cutoff=0)
    with pytest.raises(ValueError):
        cw_local({1: exponents[1]}, 1)
    with pytest.raises(ValueError):
        cw_local(exponents, 2)


def test_assemble_component_bounds() -> None:
    local = ComponentLocalBound(
        lo=0,
        hi=1,
        start=0,
        values=np.array([[-1.0, np.inf], [2.0, 0.0]]),
    )
    assert local.n == 2
    assert local.stop == 1
    assert list(local(5)) == [0, 0]
    assert local.vanishes(1)

    first, second = assemble_component_bounds(local, CLASS, SHIFT)
    assert first == FactoredElement.from_exponents({X - 1: -1, X: 2})
    assert second is None

    unfinished = ComponentLocalBound(0, 0, 0, np.array([[-np.inf, 0.0]]))
    with pytest.raises(ValueError):
        assemble_component_bounds(unfinished, CLASS, SHIFT)
