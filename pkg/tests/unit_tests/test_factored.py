from fractions import Fraction

import numpy as np
import pytest

from recurrence_bounds import FactoredElement, Polynomial, RationalFunction, factor

X = Polynomial.x()
P = X**2 + 3 * X + 1
Q = X**2 + 5 * X + 5

IRREDUCIBLES = [
    X,
    X + 1,
    X - 2,
    X**2 + 1,
    X**2 + X + 1,
    X**2 - 2,
    X**3 - 2,
    X**3 + X + 1,
    X**4 + X + 1,
]


def test_factor_normalizes_primes_and_unit() -> None:
    expected = FactoredElement.from_exponents({X + 1: 1, X + 2: 1})
    assert factor(X**2 + 3 * X + 2) == expected
    assert factor(P).factors == ((P, 1),)

    factored = factor(2 * (X + 1) ** 2 * (X - 3))
    assert factored.unit == 2
    assert factored.factors == ((X - 3, 1), (X + 1, 2))

    with pytest.raises(ValueError):
        factor(Polynomial.zero())


def test_factor_reassembles() -> None:
    polynomial = X**4 + 7 * X**3 + 11 * X**2 - 4 * X - 4
    factored = factor(polynomial)
    assert factored.expand() == polynomial
    assert all(prime.is_irreducible() for prime in factored.primes)


def test_factor_random_products() -> None:
    rng = np.random.default_rng(3)
    for _ in range(200):
        size = int(rng.integers(1, 5))
        chosen = rng.choice(len(IRREDUCIBLES), size=size, replace=False)
        exponents = {IRREDUCIBLES[i]: int(rng.integers(1, 3)) for i in chosen}
        unit = Fraction(int(rng.integers(1, 9)), int(rng.integers(1, 9)))
        if rng.random() < 0.5:
            unit = -unit
        product = Polynomial.constant(unit)
        for prime, exponent in exponents.items():
            product = product * prime**exponent
        assert factor(product) == FactoredElement.from_exponents(exponents, unit)


def test_from_rational_function_and_expand() -> None:
    value = RationalFunction(X + 1, X * (X + 2))
    factored = FactoredElement.from_rational_function(value)
    assert factored.factors == ((X, -1), (X + 1, 1), (X + 2, -1))
    assert factored.expand() == value
    assert factored.numerator() == X + 1
    assert factored.denominator() == X**2 + 2 * X
    assert factored.denominator_degree() == 2
    with pytest.raises(ValueError):
        FactoredElement.from_rational_function(RationalFunction.zero())


def test_format() -> None:
    bound = FactoredElement.from_exponents({X + 1: 1, X: -1, X + 2: -1})
    assert str(bound) == "(x+1)/(x*(x+2))"
    assert bound.format("expanded") == "(x+1)/(x^2+2*x)"
    with pytest.raises(ValueError):
        bound.format("latex")

    bound = FactoredElement.from_exponents({X - 1: -1, X: -2, X + 3: -1, P: -1, Q: -1})
    assert str(bound) == "1/((x-1)*x^2*(x+3)*(x^2+3*x+1)*(x^2+5*x+5))"
    assert bound.denominator_degree() == 8

    assert str(FactoredElement()) == "1"
    assert str(FactoredElement.from_exponents({X - 1: 1}, -1)) == "-(x-1)"
    assert str(FactoredElement.from_exponents({X: -1}, Fraction(1, 2))) == "1/2/x"


def test_multiplication_cancels_exponents() -> None:
    left = FactoredElement.from_exponents({X: 2, X + 1: -1})
    right = FactoredElement.from_exponents({X: -2, P: 1}, 3)
    product = left * right
    assert product.factors == ((X + 1, -1), (P, 1))
    assert product.unit == 3
    assert (product * product.inverse()) == FactoredElement()
    assert product.valuation(X + 1) == -1
    assert product.valuation(X) == 0


def test_invalid_construction() -> None:
    with pytest.raises(ValueError):
        FactoredElement(Fraction(0))
    with pytest.raises(ValueError):
        FactoredElement(Fraction(1), ((X + 1, 1), (X, 1)))
    with pytest.raises(ValueError):
        FactoredElement(Fraction(1), ((X, 0),))
    with pytest.raises(ValueError):
        FactoredElement(Fraction(1), ((2 * X, 1),))
