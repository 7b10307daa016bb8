import math
from fractions import Fraction

import numpy as np
import pytest

from recurrence_bounds import (
    Polynomial,
    RationalFunction,
    parse_expression,
    ratfun_arith,
    valuation,
)

X = Polynomial.x()
PRIMES = [X, X + 1, X - 1, X + 2, X**2 + 1, X**2 + X + 1]


def _random_element(rng: np.random.Generator) -> RationalFunction:
    value = RationalFunction(Fraction(int(rng.integers(1, 7)), int(rng.integers(1, 7))))
    for prime in PRIMES:
        value = value * RationalFunction(prime) ** int(rng.integers(-2, 3))
    return value


def test_canonical_form() -> None:
    value = RationalFunction(2 * X + 2, 2 * X)
    assert value.numerator == X + 1
    assert value.denominator == X

    value = RationalFunction(X**2 - 1, X - 1)
    assert value == X + 1
    assert value.is_polynomial

    zero = RationalFunction(0, X + 5)
    assert zero.is_zero
    assert zero.denominator == 1

    negative = RationalFunction(1, -3 * X)
    assert negative.numerator == Fraction(-1, 3)
    assert negative.denominator == X


def test_zero_denominator() -> None:
    with pytest.raises(ZeroDivisionError):
        RationalFunction(X, 0)
    with pytest.raises(ZeroDivisionError):
        ratfun_arith(RationalFunction.x(), RationalFunction.zero(), "/")
    with pytest.raises(ZeroDivisionError):
        RationalFunction.zero().inverse()


def test_field_operations() -> None:
    one_over_x = RationalFunction(1, X)
    assert one_over_x + one_over_x == RationalFunction(2, X)
    product = ratfun_arith(RationalFunction(X, X + 1), RationalFunction(X + 1, X), "*")
    assert product == 1
    assert ratfun_arith(one_over_x, one_over_x, "-").is_zero
    assert 1 - one_over_x == RationalFunction(X - 1, X)
    assert 2 / RationalFunction(X) == RationalFunction(2, X)
    assert RationalFunction(X + 1, X) ** -2 == RationalFunction(X**2, (X + 1) ** 2)
    with pytest.raises(ValueError):
        ratfun_arith(one_over_x, one_over_x, "%")


def test_cancellation_through_products() -> None:
    left = parse_expression("((x+2)^2*(2*x+1))/(2*(x+1)^2*(x+3))")
    right = parse_expression("2*(x+1)^2*(x+3)/(x+2)^2")
    assert left * right == 2 * X + 1


def test_str() -> None:
    assert str(RationalFunction(X + 1, X * (X + 2))) == "(x+1)/(x^2+2*x)"
    assert str(RationalFunction(1, X)) == "1/x"
    assert str(RationalFunction(X**2 + 1)) == "x^2+1"


def test_valuation() -> None:
    value = parse_expression("(x+2)^2/(x*(x+1)^2*(x+3))")
    assert valuation(value, X) == -1
    assert valuation(value, X + 1) == -2
    assert valuation(value, X + 2) == 2
    assert valuation(value, 3 * X + 6) == 2
    assert valuation(value, X + 4) == 0
    assert valuation(RationalFunction.zero(), X) == math.inf


def test_valuation_needs_an_irreducible_prime() -> None:
    value = RationalFunction(X, X + 1)
    with pytest.raises(ValueError):
        valuation(value, X**2 - 1)
    with pytest.raises(ValueError):
        valuation(value, Polynomial.constant(3))


def test_valuation_laws_on_random_elements() -> None:
    rng = np.random.default_rng(7)
    for _ in range(200):
        a, b = _random_element(rng), _random_element(rng)
        if rng.random() < 0.2:
            b = -a
        for prime in PRIMES:
            assert valuation(a * b, prime) == valuation(a, prime) + valuation(b, prime)
            lowest = min(valuation(a, prime), valuation(b, prime))
            assert valuation(a + b, prime) >= lowest
        assert RationalFunction(a.numerator, a.denominator) == a
        assert a * a.inverse() == 1
