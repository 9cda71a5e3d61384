"""Value types shared by the arithmetic construction and the oracle."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError


@dataclass(frozen=True)
class DecimalValue:
    """A signed terminating decimal.

    ``magnitude`` is an exact, reduced rational whose denominator divides a
    power of ten; ``sign`` is 0 exactly when the magnitude is 0.
    """

    sign: int
    magnitude: Fraction

    def __post_init__(self):
        mag = Fraction(self.magnitude)
        if mag < 0:
            raise DomainError("magnitude must be non-negative")
        if self.sign not in (-1, 0, 1) or (self.sign == 0) != (mag == 0):
            raise DomainError(f"inconsistent sign {self.sign} for magnitude {mag}")
        _decimal_places(mag.denominator)
        object.__setattr__(self, "magnitude", mag)

    @classmethod
    def of(cls, value) -> DecimalValue:
        value = Fraction(value)
        sign = (value > 0) - (value < 0)
        return cls(sign, abs(value))

    @property
    def value(self) -> Fraction:
        return self.sign * self.magnitude

    @property
    def places(self) -> int:
        """Minimal ``t`` such that ``magnitude * 10**t`` is an integer."""
        return _decimal_places(self.magnitude.denominator)

    def scaled(self) -> tuple[int, int]:
        """``(numerator, 10**t)`` with the minimal ``t``; e.g. ``(-1711, 100)``."""
        den = 10**self.places
        return int(self.value * den), den

    def __str__(self):
        num, den = self.scaled()
        if num == 0:
            return "0"
        whole, frac = divmod(abs(num), den)
        text = str(whole)
        if self.places:
            text += "." + str(frac).rjust(self.places, "0")
        return ("-" if num < 0 else "") + text


def _decimal_places(den: int) -> int:
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        raise DomainError("denominator is not a divisor of a power of ten")
    return max(twos, fives)


ZERO = DecimalValue(0, Fraction(0))


@dataclass(frozen=True)
class Z13Point:
    """The rational ``y / 13**n``, kept with 13 not dividing ``y`` (or y = n = 0)."""

    y: int
    n: int = 0

    @classmethod
    def make(cls, y: int, n: int = 0) -> Z13Point:
        if n < 0:
            raise DomainError("exponent must be non-negative")
        if y == 0:
            return cls(0, 0)
        while n and y % 13 == 0:
            y //= 13
            n -= 1
        return cls(y, n)

    @classmethod
    def from_fraction(cls, q) -> Z13Point:
        q = Fraction(q)
        den, n = q.denominator, 0
        while den % 13 == 0:
            den //= 13
            n += 1
        if den != 1:
            raise DomainError(f"{q} is not in Z[1/13]")
        return cls.make(q.numerator, n)

    @property
    def is_canonical(self) -> bool:
        if self.y == 0:
            return self.n == 0
        return self.n == 0 or self.y % 13 != 0

    def __float__(self):
        return self.y / 13**self.n
