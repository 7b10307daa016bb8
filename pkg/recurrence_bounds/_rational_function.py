import math
from fractions import Fraction
from typing import Callable, Dict, Tuple, Union

from ._polynomial import Coefficient, Polynomial

Valuation = Union[int, float]


class RationalFunction:
    """Reduced quotient num/den of polynomials over the rationals.

    The denominator is monic and coprime to the numerator, so two equal
    rational functions always have identical (num, den) pairs. The zero
    element is 0/1.
    """

    __slots__ = ("_num", "_den")

    def __init__(
        self,
        num: Union[Polynomial, Coefficient] = 0,
        den: Union[Polynomial, Coefficient] = 1,
    ) -> None:
        num = _as_polynomial(num)
        den = _as_polynomial(den)
        if den.is_zero:
            raise ZeroDivisionError(f"Denominator of {num}/0 is zero.")
        common = num.gcd(den)
        if not common.is_one and not common.is_zero:
            num = num.exquo(common)
            den = den.exquo(common)
        self._num, self._den = _normalized(num, den)

    @classmethod
    def _coprime(cls, num: Polynomial, den: Polynomial) -> "RationalFunction":
        """Builds from a pair already known to be coprime."""
        instance = cls.__new__(cls)
        instance._num, instance._den = _normalized(num, den)
        return instance

    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls(0)

    @classmethod
    def one(cls) -> "RationalFunction":
        return cls(1)

    @classmethod
    def x(cls) -> "RationalFunction":
        return cls(Polynomial.x())

    @property
    def numerator(self) -> Polynomial:
        return self._num

    @property
    def denominator(self) -> Polynomial:
        return self._den

    @property
    def is_zero(self) -> bool:
        return self._num.is_zero

    @property
    def is_one(self) -> bool:
        return self._num.is_one and self._den.is_one

    @property
    def is_polynomial(self) -> bool:
        return self._den.is_one

    @property
    def is_constant(self) -> bool:
        return self._den.is_one and self._num.is_constant

    def inverse(self) -> "RationalFunction":
        if self.is_zero:
            raise ZeroDivisionError("Zero has no inverse.")
        return RationalFunction._coprime(self._den, self._num)

    def map_polynomials(
        self, func: Callable[[Polynomial], Polynomial]
    ) -> "RationalFunction":
        """Applies a ring automorphism of F[x] to numerator and denominator.
        Automorphisms keep the pair coprime, so no gcd is needed."""
        return RationalFunction._coprime(func(self._num), func(self._den))

    def order_at(self, prime: Polynomial) -> Valuation:
        """Valuation at a prime assumed irreducible; inf for zero."""
        if self.is_zero:
            return math.inf
        return self._num.multiplicity(prime) - self._den.multiplicity(prime)

    def __add__(self, other: object) -> "RationalFunction":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        common = self._den.gcd(other._den)
        self_cofactor = other._den.exquo(common)
        num = self._num * self_cofactor + other._num * self._den.exquo(common)
        return RationalFunction(num, self._den * self_cofactor)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction._coprime(-self._num, self._den)

    def __sub__(self, other: object) -> "RationalFunction":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "RationalFunction":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: object) -> "RationalFunction":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RationalFunction.zero()
        left = self._num.gcd(other._den)
        right = other._num.gcd(self._den)
        return RationalFunction._coprime(
            self._num.exquo(left) * other._num.exquo(right),
            self._den.exquo(right) * other._den.exquo(left),
        )

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "RationalFunction":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: object) -> "RationalFunction":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "RationalFunction":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return RationalFunction._coprime(self._num**exponent, self._den**exponent)

    def __eq__(self, other: object) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        return hash((self._num, self._den))

    def __str__(self) -> str:
        if self._den.is_one:
            return str(self._num)
        return f"{_group(self._num)}/{_group(self._den)}"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"


def _group(polynomial: Polynomial) -> str:
    text = str(polynomial)
    return text if polynomial.term_count <= 1 else f"({text})"


def _normalized(num: Polynomial, den: Polynomial) -> Tuple[Polynomial, Polynomial]:
    if num.is_zero:
        return Polynomial.zero(), Polynomial.one()
    lead = den.leading_coefficient
    if lead != 1:
        num = num * (1 / lead)
        den = den * (1 / lead)
    return num, den


def _as_polynomial(value: Union[Polynomial, Coefficient]) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return Polynomial.constant(value)


def _coerce(value: object) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, Polynomial):
        return RationalFunction._coprime(value, Polynomial.one())
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return RationalFunction(value)
    return NotImplemented  # type: ignore[return-value]


_Operation = Callable[[RationalFunction, RationalFunction], RationalFunction]

_OPERATIONS: Dict[str, _Operation] = {
    "+": lambda a, b: a + b,
    "-": lambda a, b: a - b,
    "*": lambda a, b: a * b,
    "/": lambda a, b: a / b,
}


def ratfun_arith(a: RationalFunction, b: RationalFunction, op: str) -> RationalFunction:
    """Field operation selected by one of "+", "-", "*", "/"."""
    try:
        operation = _OPERATIONS[op]
    except KeyError as exc:
        raise ValueError(
            f"Unknown operation {op!r}, expected one of {', '.join(_OPERATIONS)}."
        ) from exc
    return operation(a, b)


def valuation(a: RationalFunction, prime: Polynomial) -> Valuation:
    """Multiplicity of prime in the numerator minus its multiplicity in the
    denominator. Returns math.inf for a = 0.
    """
    if prime.is_constant:
        raise ValueError(f"Cannot take the valuation at the constant {prime}.")
    if not prime.is_irreducible():
        raise ValueError(f"{prime} is reducible over the rationals.")
    return a.order_at(prime)
