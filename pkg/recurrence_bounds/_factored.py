from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple

from ._polynomial import Coefficient, Polynomial
from ._rational_function import RationalFunction


@dataclass(frozen=True)
class FactoredElement:
    """unit * prod(prime ** exponent) with distinct monic irreducible primes,
    sorted by (degree, coefficients). Exponents are nonzero and may be
    negative, so this represents any nonzero element of Q(x).
    """

    unit: Fraction = Fraction(1)
    factors: Tuple[Tuple[Polynomial, int], ...] = ()

    def __post_init__(self) -> None:
        if self.unit == 0:
            raise ValueError("The unit of a factored element must be nonzero.")
        primes = [prime for prime, _ in self.factors]
        if len(set(primes)) != len(primes):
            raise ValueError("Primes of a factored element must be distinct.")
        if any(exponent == 0 for _, exponent in self.factors):
            raise ValueError("Exponents of a factored element must be nonzero.")
        if primes != sorted(primes, key=Polynomial.sort_key):
            raise ValueError("Primes of a factored element must be sorted.")
        if any(prime.leading_coefficient != 1 for prime in primes):
            raise ValueError("Primes of a factored element must be monic.")

    @classmethod
    def from_exponents(
        cls, exponents: Mapping[Polynomial, int], unit: Coefficient = 1
    ) -> "FactoredElement":
        return cls(
            Fraction(unit),
            tuple(
                (prime, exponents[prime])
                for prime in sorted(exponents, key=Polynomial.sort_key)
                if exponents[prime] != 0
            ),
        )

    @classmethod
    def from_rational_function(cls, value: RationalFunction) -> "FactoredElement":
        if value.is_zero:
            raise ValueError("Zero has no factorization.")
        numerator = factor(value.numerator)
        denominator = factor(value.denominator)
        return numerator * denominator.inverse()

    @property
    def primes(self) -> Tuple[Polynomial, ...]:
        return tuple(prime for prime, _ in self.factors)

    def valuation(self, prime: Polynomial) -> int:
        return dict(self.factors).get(prime.monic(), 0)

    def inverse(self) -> "FactoredElement":
        return FactoredElement(
            1 / self.unit, tuple((prime, -exponent) for prime, exponent in self.factors)
        )

    def __mul__(self, other: "FactoredElement") -> "FactoredElement":
        exponents: Dict[Polynomial, int] = dict(self.factors)
        for prime, exponent in other.factors:
            exponents[prime] = exponents.get(prime, 0) + exponent
        return FactoredElement.from_exponents(exponents, self.unit * other.unit)

    def numerator(self) -> Polynomial:
        return _product((prime, e) for prime, e in self.factors if e > 0)

    def denominator(self) -> Polynomial:
        return _product((prime, -e) for prime, e in self.factors if e < 0)

    def denominator_degree(self) -> int:
        return sum(
            -exponent * int(prime.degree)
            for prime, exponent in self.factors
            if exponent < 0
        )

    def expand(self) -> RationalFunction:
        return RationalFunction(self.numerator() * self.unit, self.denominator())

    def format(self, output_format: str = "factored") -> str:
        if output_format == "expanded":
            return str(self.expand())
        if output_format != "factored":
            raise ValueError(f"Unknown output format {output_format!r}.")
        return str(self)

    def __str__(self) -> str:
        upper = [_power(prime, e) for prime, e in self.factors if e > 0]
        lower = [_power(prime, -e) for prime, e in self.factors if e < 0]

        numerator = "*".join(upper)
        if not numerator:
            numerator = str(self.unit)
        elif self.unit == -1:
            numerator = f"-{numerator}"
        elif self.unit != 1:
            numerator = f"{self.unit}*{numerator}"

        if not lower:
            return numerator
        if len(lower) == 1:
            return f"{numerator}/{lower[0]}"
        return f"{numerator}/({'*'.join(lower)})"


def _power(prime: Polynomial, exponent: int) -> str:
    base = str(prime) if prime.term_count == 1 else f"({prime})"
    return base if exponent == 1 else f"{base}^{exponent}"


def _product(powers: Iterable[Tuple[Polynomial, int]]) -> Polynomial:
    result = Polynomial.one()
    for prime, exponent in powers:
        result = result * prime**exponent
    return result


def factor(p: Polynomial) -> FactoredElement:
    """Irreducible factorization over the rationals with monic primes; the
    unit is the leading coefficient of p.
    """
    if p.is_zero:
        raise ValueError("Zero has no factorization.")
    _, factors = p.factor_list()
    exponents: Dict[Polynomial, int] = {}
    for prime, exponent in factors:
        prime = prime.monic()
        exponents[prime] = exponents.get(prime, 0) + exponent
    return FactoredElement.from_exponents(exponents, p.leading_coefficient)
