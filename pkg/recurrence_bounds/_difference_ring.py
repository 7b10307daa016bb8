import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple, TypeVar, cast

from ._matrix import RatFunMatrix
from ._polynomial import Coefficient, Polynomial
from ._rational_function import RationalFunction

logger = logging.getLogger(__name__)

Tauable = TypeVar("Tauable", Polynomial, RationalFunction, RatFunMatrix)


class RingCase(enum.Enum):
    SHIFT = "shift"
    QSHIFT = "qshift"


@dataclass(frozen=True)
class PrimeClassRep:
    """A tau-equivalence class of primes. Every member satisfies
    tau^offset(rep) ~ member, with offsets counted from the representative.
    """

    rep: Polynomial
    members: Tuple[Tuple[Polynomial, int], ...]

    def offset_of(self, prime: Polynomial) -> Optional[int]:
        return dict(self.members).get(prime.monic())

    @property
    def primes(self) -> Tuple[Polynomial, ...]:
        return tuple(prime for prime, _ in self.members)


@dataclass(frozen=True)
class DifferenceRing:
    """F[x] with the automorphism tau(f(x)) = f(x+1) (shift case) or
    tau(f(x)) = f(q*x) (q-shift case)."""

    case: RingCase = RingCase.SHIFT
    q: Optional[Fraction] = None

    def __post_init__(self) -> None:
        if self.case is RingCase.QSHIFT:
            if self.q is None:
                raise ValueError("The q-shift case needs a value for q.")
            object.__setattr__(self, "q", Fraction(self.q))
            if self.q in (0, 1, -1):
                raise ValueError(
                    f"q = {self.q} is not allowed, "
                    "q must be nonzero and not a root of unity."
                )
        elif self.q is not None:
            raise ValueError("Only the q-shift case takes a value for q.")

    @classmethod
    def shift(cls) -> "DifferenceRing":
        return cls(RingCase.SHIFT)

    @classmethod
    def qshift(cls, q: Coefficient) -> "DifferenceRing":
        return cls(RingCase.QSHIFT, Fraction(q))

    def __str__(self) -> str:
        if self.case is RingCase.SHIFT:
            return "shift"
        return f"qshift q={self.q}"

    def _tau_polynomial(self, polynomial: Polynomial, k: int) -> Polynomial:
        if k == 0:
            return polynomial
        if self.case is RingCase.SHIFT:
            return polynomial.shift(k)
        return polynomial.scale(self.q**k)  # type: ignore[operator]

    def tau_pow(self, value: Tauable, k: int) -> Tauable:
        """tau^k applied to a polynomial, a rational function or (entrywise)
        a matrix."""
        if isinstance(value, Polynomial):
            return self._tau_polynomial(value, k)
        if isinstance(value, RationalFunction):
            if k == 0 or value.is_constant:
                return value
            return value.map_polynomials(lambda p: self._tau_polynomial(p, k))
        if isinstance(value, RatFunMatrix):
            return value.map_entries(lambda entry: self.tau_pow(entry, k))
        raise TypeError(f"tau is not defined on {type(value).__name__}.")

    def translate(self, prime: Polynomial, k: int) -> Polynomial:
        """The monic associate of tau^k(prime)."""
        return self._tau_polynomial(prime, k).monic()

    def in_d(self, a: Polynomial) -> bool:
        """Whether tau^k(a) ~ a for some k != 0."""
        if a.is_zero:
            raise ValueError("Membership in D is undefined for zero.")
        if self.case is RingCase.SHIFT:
            return a.is_constant
        return a.term_count == 1

    def tau_equivalent(self, p1: Polynomial, p2: Polynomial) -> Optional[int]:
        """The k with tau^k(p1) ~ p2, or None when p1 and p2 are not
        tau-equivalent."""
        p1, p2 = p1.monic(), p2.monic()
        if p1.degree != p2.degree:
            return None
        if p1 == p2:
            return 0
        if p1.is_constant:
            return None
        if self.case is RingCase.SHIFT:
            candidate = self._shift_candidate(p1, p2)
        else:
            candidate = self._qshift_candidate(p1, p2)
        if candidate is None or self.translate(p1, candidate) != p2:
            return None
        return candidate

    @staticmethod
    def _shift_candidate(p1: Polynomial, p2: Polynomial) -> Optional[int]:
        degree = int(p1.degree)
        # tau^k moves the subleading coefficient of a monic polynomial by d*k.
        offset = (p2.coefficients[degree - 1] - p1.coefficients[degree - 1]) / degree
        if offset.denominator != 1:
            return None
        return int(offset)

    def _qshift_candidate(self, p1: Polynomial, p2: Polynomial) -> Optional[int]:
        degree = int(p1.degree)
        first, second = p1.coefficients, p2.coefficients
        support = [i for i, c in enumerate(first) if c]
        if support != [i for i, c in enumerate(second) if c]:
            return None
        lower = [i for i in support if i < degree]
        if not lower:
            return None
        # After monic normalization tau^k scales coefficient i by q^(k*(i-d)).
        index = lower[0]
        return _integer_log(
            cast(Fraction, self.q) ** (index - degree), second[index] / first[index]
        )

    def partition_classes(self, primes: Iterable[Polynomial]) -> List[PrimeClassRep]:
        """Groups primes into tau-equivalence classes. The representative of
        a class is its member with the smallest offset."""
        groups: List[List[Tuple[Polynomial, int]]] = []
        for prime in sorted({p.monic() for p in primes}, key=Polynomial.sort_key):
            for group in groups:
                offset = self.tau_equivalent(group[0][0], prime)
                if offset is not None:
                    group.append((prime, offset))
                    break
            else:
                groups.append([(prime, 0)])

        classes = []
        for group in groups:
            base = min(offset for _, offset in group)
            members = tuple(
                sorted(
                    ((prime, offset - base) for prime, offset in group),
                    key=lambda m: m[1],
                )
            )
            classes.append(PrimeClassRep(rep=members[0][0], members=members))
        classes.sort(key=lambda c: c.rep.sort_key())

        logger.debug(
            "Prime classes: %s",
            "; ".join(
                "{" + ", ".join(f"{p}@{k}" for p, k in c.members) + "}" for c in classes
            ),
        )
        return classes


def _integer_log(base: Fraction, target: Fraction) -> Optional[int]:
    """The integer k with base**k == target, where |base| != 1."""
    if target == 1:
        return 0
    if target == 0 or abs(target) == 1:
        return None
    grow = abs(target) > 1
    step, sign = (base, 1) if (abs(base) > 1) == grow else (1 / base, -1)
    power, k = step, 1
    while abs(power) < abs(target) if grow else abs(power) > abs(target):
        power *= step
        k += 1
    return sign * k if power == target else None
