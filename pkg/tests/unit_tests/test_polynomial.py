from fractions import Fraction

import numpy as np
import pytest

from recurrence_bounds import Polynomial, poly_gcd
from recurrence_bounds._polynomial import ZERO_DEGREE

X = Polynomial.x()


def test_coefficients_are_trimmed() -> None:
    assert Polynomial([1, 2, 0, 0]).coefficients == (1, 2)
    assert Polynomial([0, 0]).coefficients == ()
    assert Polynomial([Fraction(1, 2)]).coefficients == (Fraction(1, 2),)
    assert Polynomial([1, 2]) == 2 * X + 1


def test_degree_of_zero_is_below_every_integer() -> None:
    zero = Polynomial.zero()
    assert zero.degree is ZERO_DEGREE
    assert zero.degree < -100
    assert not zero.degree > 0
    assert (X + 1).degree == 1
    assert Polynomial.constant(5).degree == 0


def test_predicates() -> None:
    assert Polynomial.zero().is_zero
    assert Polynomial.one().is_one
    assert Polynomial.constant(3).is_constant
    assert not X.is_constant
    assert (X**3 + 1).term_count == 2
    assert (2 * X**2 + 4).monic() == X**2 + 2
    assert (2 * X**2 + 4).leading_coefficient == 2


def test_gcd_is_monic() -> None:
    assert poly_gcd(X**2 - 1, X - 1) == X - 1
    assert poly_gcd(2 * X + 4, Polynomial.zero()) == X + 2
    assert poly_gcd(Polynomial.zero(), Polynomial.zero()).is_zero
    assert poly_gcd((X + 1) ** 2 * (X + 2), 3 * (X + 1) * (X + 3)) == X + 1
    assert poly_gcd(X, X + 1).is_one


def test_lcm() -> None:
    assert (2 * X).lcm(X * (X + 1)) == X**2 + X
    assert X.lcm(Polynomial.zero()).is_zero


def test_division() -> None:
    quotient, remainder = divmod(X**2 + 1, X + 1)
    assert quotient == X - 1
    assert remainder == 2
    assert (X**2 - 1).exquo(X + 1) == X - 1
    with pytest.raises(ArithmeticError):
        (X**2 + 1).exquo(X + 1)
    with pytest.raises(ZeroDivisionError):
        divmod(X, Polynomial.zero())
    assert (X + 1).divides(X**2 - 1)
    assert not Polynomial.zero().divides(X)


def test_multiplicity() -> None:
    assert ((X + 1) ** 3 * X).multiplicity(X + 1) == 3
    assert ((X + 1) ** 3 * X).multiplicity(2 * X + 2) == 3
    assert (X**2 + 1).multiplicity(X) == 0
    with pytest.raises(ValueError):
        Polynomial.zero().multiplicity(X)
    with pytest.raises(ValueError):
        X.multiplicity(Polynomial.constant(2))


def test_shift_and_scale() -> None:
    assert (X**2).shift(-1) == (X - 1) ** 2
    assert (X**2 + 3 * X + 1).shift(0) == X**2 + 3 * X + 1
    assert (X + 1).scale(2) == 2 * X + 1
    assert (X**2 + 1).scale(Fraction(1, 3)) == Fraction(1, 9) * X**2 + 1


def test_irreducibility() -> None:
    assert (X**2 + 1).is_irreducible()
    assert not (X**2 - 1).is_irreducible()
    assert not Polynomial.constant(3).is_irreducible()


def test_str() -> None:
    assert str(X**2 + 3 * X + 1) == "x^2+3*x+1"
    assert str(X - 1) == "x-1"
    assert str(-(X**2) + Fraction(1, 2)) == "-x^2+1/2"
    assert str(Fraction(1, 2) * X) == "1/2*x"
    assert str(X**4 + 7 * X**3 + 11 * X**2 - 4 * X - 4) == "x^4+7*x^3+11*x^2-4*x-4"
    assert str(Polynomial.zero()) == "0"


def test_sort_key_orders_by_degree_then_coefficients() -> None:
    primes = [X**2 + 3 * X + 1, X + 3, X - 1, X]
    expected = [X - 1, X, X + 3, X**2 + 3 * X + 1]
    assert sorted(primes, key=Polynomial.sort_key) == expected


def test_ring_laws_on_random_polynomials() -> None:
    rng = np.random.default_rng(20)
    for _ in range(200):
        a, b, c = (
            Polynomial(int(v) for v in rng.integers(-5, 6, size=rng.integers(1, 5)))
            for _ in range(3)
        )
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a - a == 0
        if not b.is_zero:
            quotient, remainder = divmod(a, b)
            assert quotient * b + remainder == a
            assert remainder.is_zero or remainder.degree < b.degree
        gcd = poly_gcd(a, b)
        if not gcd.is_zero:
            assert gcd.divides(a) and gcd.divides(b)
            assert gcd.leading_coefficient == 1
