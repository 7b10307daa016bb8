import functools
from fractions import Fraction
from typing import Iterable, List, Tuple, Union

import sympy

X = sympy.Symbol("x")

Coefficient = Union[int, Fraction]


@functools.total_ordering
class _ZeroDegree:
    """Degree of the zero polynomial. Orders below every integer and never
    takes part in arithmetic.
    """

    _instance = None

    def __new__(cls) -> "_ZeroDegree":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other: object) -> bool:
        return not isinstance(other, _ZeroDegree)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, _ZeroDegree)

    def __hash__(self) -> int:
        return hash("-oo")

    def __repr__(self) -> str:
        return "-oo"


ZERO_DEGREE = _ZeroDegree()


def _to_domain(value: Coefficient) -> sympy.Rational:
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def _to_fraction(value: sympy.Expr) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


class Polynomial:
    """Univariate polynomial in x over the rationals.

    Coefficients are given lowest power first. The instance is immutable;
    all arithmetic is delegated to a `sympy.Poly` over QQ.
    """

    __slots__ = ("_poly", "_coefficients")

    def __init__(self, coefficients: Iterable[Coefficient] = ()) -> None:
        high_to_low = [_to_domain(c) for c in reversed(list(coefficients))]
        self._poly = sympy.Poly.from_list(high_to_low or [0], X, domain=sympy.QQ)
        self._coefficients: Union[Tuple[Fraction, ...], None] = None

    @classmethod
    def _wrap(cls, poly: sympy.Poly) -> "Polynomial":
        instance = cls.__new__(cls)
        instance._poly = poly
        instance._coefficients = None
        return instance

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([0, 1])

    @classmethod
    def constant(cls, value: Coefficient) -> "Polynomial":
        return cls([value])

    @classmethod
    def one(cls) -> "Polynomial":
        return cls([1])

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        if self._coefficients is None:
            if self._poly.is_zero:
                self._coefficients = ()
            else:
                self._coefficients = tuple(
                    _to_fraction(c) for c in reversed(self._poly.all_coeffs())
                )
        return self._coefficients

    @property
    def degree(self) -> Union[int, _ZeroDegree]:
        if self._poly.is_zero:
            return ZERO_DEGREE
        return int(self._poly.degree())

    @property
    def is_zero(self) -> bool:
        return bool(self._poly.is_zero)

    @property
    def is_one(self) -> bool:
        return bool(self._poly.is_one)

    @property
    def is_constant(self) -> bool:
        """True for the zero polynomial and the nonzero constants."""
        return bool(self._poly.is_ground)

    @property
    def leading_coefficient(self) -> Fraction:
        return _to_fraction(self._poly.LC())

    @property
    def term_count(self) -> int:
        return sum(1 for c in self.coefficients if c)

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        return Polynomial._wrap(self._poly.monic())

    def __add__(self, other: object) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial._wrap(self._poly + other._poly)

    __radd__ = __add__

    def __sub__(self, other: object) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial._wrap(self._poly - other._poly)

    def __rsub__(self, other: object) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial._wrap(other._poly - self._poly)

    def __mul__(self, other: object) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial._wrap(self._poly * other._poly)

    __rmul__ = __mul__

    def __neg__(self) -> "Polynomial":
        return Polynomial._wrap(-self._poly)

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("Polynomials only take nonnegative powers.")
        return Polynomial._wrap(self._poly**exponent)

    def __divmod__(self, other: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        if other.is_zero:
            raise ZeroDivisionError("Polynomial division by zero.")
        quotient, remainder = self._poly.div(other._poly)
        return Polynomial._wrap(quotient), Polynomial._wrap(remainder)

    def exquo(self, other: "Polynomial") -> "Polynomial":
        """Exact quotient. Raises ArithmeticError if other does not divide self."""
        quotient, remainder = divmod(self, other)
        if not remainder.is_zero:
            raise ArithmeticError(f"{other} does not divide {self}.")
        return quotient

    def divides(self, other: "Polynomial") -> bool:
        return not self.is_zero and divmod(other, self)[1].is_zero

    def gcd(self, other: "Polynomial") -> "Polynomial":
        return Polynomial._wrap(self._poly.gcd(other._poly)).monic()

    def lcm(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero or other.is_zero:
            return Polynomial.zero()
        return Polynomial._wrap(self._poly.lcm(other._poly)).monic()

    def multiplicity(self, prime: "Polynomial") -> int:
        """How many times prime divides self. Self must be nonzero."""
        if self.is_zero:
            raise ValueError("The zero polynomial is divisible by every power.")
        if prime.is_constant:
            raise ValueError(f"Multiplicity of the constant {prime} is undefined.")
        count = 0
        current = self
        while True:
            quotient, remainder = divmod(current, prime)
            if not remainder.is_zero:
                return count
            count += 1
            current = quotient

    def shift(self, offset: Coefficient) -> "Polynomial":
        """f(x) -> f(x + offset)"""
        if offset == 0:
            return self
        return Polynomial._wrap(self._poly.shift(_to_domain(offset)))

    def scale(self, factor: Coefficient) -> "Polynomial":
        """f(x) -> f(factor * x)"""
        factor = Fraction(factor)
        return Polynomial(c * factor**i for i, c in enumerate(self.coefficients))

    def is_irreducible(self) -> bool:
        return not self.is_constant and bool(self._poly.is_irreducible)

    def factor_list(self) -> Tuple[Fraction, List[Tuple["Polynomial", int]]]:
        """Irreducible factors over QQ as reported by sympy (not normalized)."""
        coefficient, factors = self._poly.factor_list()
        return _to_fraction(coefficient), [
            (Polynomial._wrap(factor), int(exponent)) for factor, exponent in factors
        ]

    def sort_key(self) -> Tuple[int, Tuple[Fraction, ...]]:
        degree = self.degree
        return (-1 if isinstance(degree, _ZeroDegree) else degree, self.coefficients)

    def __eq__(self, other: object) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __str__(self) -> str:
        terms = []
        for power in range(len(self.coefficients) - 1, -1, -1):
            coefficient = self.coefficients[power]
            if coefficient:
                terms.append(_format_term(coefficient, power))
        if not terms:
            return "0"
        text = terms[0]
        for term in terms[1:]:
            text += term if term.startswith("-") else f"+{term}"
        return text

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def _format_term(coefficient: Fraction, power: int) -> str:
    if power == 0:
        return str(coefficient)
    monomial = "x" if power == 1 else f"x^{power}"
    if coefficient == 1:
        return monomial
    if coefficient == -1:
        return f"-{monomial}"
    return f"{coefficient}*{monomial}"


def _coerce(value: object) -> "Polynomial":
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Polynomial.constant(value)
    return NotImplemented  # type: ignore[return-value]


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor, with gcd(0, 0) = 0."""
    return a.gcd(b)
