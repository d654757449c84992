"""Baumslag-Solitar groups BS(1,n) as Z[1/n] x| Z.

The product law is (r1, e1)(r2, e2) = (r1 + n^e1 r2, e1 + e2) with
a = (1, 0) and t = (0, 1), so t a t^-1 = a^n.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from groups.errors import UnknownGeneratorError
from groups.words import Word


@dataclass(frozen=True)
class NAdic:
    """numerator / n**power in lowest terms (power >= 0, n does not divide
    numerator when power > 0, zero stored as 0/n**0)."""

    numerator: int
    power: int
    n: int

    @classmethod
    def make(cls, numerator: int, power: int, n: int) -> "NAdic":
        if n < 2:
            raise ValueError(f"base must be >= 2, got {n}")
        if numerator == 0:
            return cls(0, 0, n)
        if power < 0:
            return cls(numerator * n ** (-power), 0, n)
        while power > 0 and numerator % n == 0:
            numerator //= n
            power -= 1
        return cls(numerator, power, n)

    @classmethod
    def integer(cls, value: int, n: int) -> "NAdic":
        return cls.make(value, 0, n)

    def __add__(self, other: "NAdic") -> "NAdic":
        p = max(self.power, other.power)
        num = self.numerator * self.n ** (p - self.power) + other.numerator * self.n ** (p - other.power)
        return NAdic.make(num, p, self.n)

    def __neg__(self) -> "NAdic":
        return NAdic(-self.numerator, self.power, self.n)

    def scaled(self, e: int) -> "NAdic":
        """self * n**e."""
        return NAdic.make(self.numerator, self.power - e, self.n)

    def is_zero(self) -> bool:
        return self.numerator == 0

    def is_integral(self) -> bool:
        return self.power == 0

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.n ** self.power)

    def __str__(self) -> str:
        if self.power == 0:
            return str(self.numerator)
        return f"{self.numerator}/{self.n}^{self.power}"


BSElement = Tuple[NAdic, int]


def bs_identity(n: int) -> BSElement:
    return (NAdic.integer(0, n), 0)


def bs_multiply(x: BSElement, y: BSElement) -> BSElement:
    (r1, e1), (r2, e2) = x, y
    return (r1 + r2.scaled(e1), e1 + e2)


def bs_normal_form(n: int, w: Word, a: str = "a", t: str = "t") -> BSElement:
    """(r, e) with r in Z[1/n]; (0, 0) exactly when w is trivial in BS(1,n)."""
    r, e = bs_identity(n)
    one = NAdic.integer(1, n)
    for name, sign in w.letters:
        if name == a:
            step = one.scaled(e)
            r = r + step if sign > 0 else r + (-step)
        elif name == t:
            e += sign
        else:
            raise UnknownGeneratorError(name, f"BS(1,{n})")
    return (r, e)


def bs_word(n: int, element: BSElement, a: str = "a", t: str = "t") -> Word:
    """Canonical word t^-i a^k t^j with the least i >= 0."""
    r, e = element
    i = max(r.power, -e, 0)
    k = r.numerator * n ** (i - r.power)
    j = e + i
    return Word.gen(t, -i) * Word.gen(a, k) * Word.gen(t, j)


def bs_relator(n: int, a: str = "a", t: str = "t") -> Word:
    """t a t^-1 a^-n."""
    return Word.gen(t) * Word.gen(a) * Word.gen(t, -1) * Word.gen(a, -n)
