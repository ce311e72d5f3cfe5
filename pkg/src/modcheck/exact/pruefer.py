"""Canonical arithmetic in the Prüfer quotient ℚ/ℤ_(q).

Every class has a unique representative k/q^n with n ≥ 0, 0 ≤ k < q^n
and q ∤ k unless k = 0 (in which case n = 0).  Addition, negation, and
multiplication by elements of ℤ_(q) renormalize back to that form, so
equality is plain field-by-field comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import ShapeMismatch
from .rationals import LocalizedRational, as_fraction


def _canonical(q: int, x: Fraction) -> tuple:
    """(n, k) of the class of x in ℚ/ℤ_(q)."""
    den = x.denominator
    n = 0
    d = 1
    while den % q == 0:
        den //= q
        d *= q
        n += 1
    if n == 0:
        return 0, 0
    # x = num / (den * q^n) with gcd(den, q) = 1; the class only depends on
    # num * den^(-1) mod q^n.
    k = x.numerator * pow(den, -1, d) % d
    while k and k % q == 0:
        k //= q
        d //= q
        n -= 1
    if k == 0:
        return 0, 0
    return n, k


@dataclass(frozen=True)
class PrueferElement:
    """A class in ℚ/ℤ_(q), stored as the canonical k/q^n representative."""

    q: int
    n: int
    k: int

    def __post_init__(self):
        ok = (self.n == 0 and self.k == 0) or (
            self.n > 0 and 0 < self.k < self.q**self.n and self.k % self.q != 0
        )
        if not ok:
            raise ShapeMismatch(f"{self.k}/{self.q}^{self.n} is not canonical")

    @classmethod
    def from_rational(cls, q: int, x) -> "PrueferElement":
        n, k = _canonical(q, as_fraction(x))
        return cls(q, n, k)

    @classmethod
    def zero(cls, q: int) -> "PrueferElement":
        return cls(q, 0, 0)

    def representative(self) -> Fraction:
        return Fraction(self.k, self.q**self.n)

    def is_zero(self) -> bool:
        return self.n == 0

    def order(self) -> int:
        """Additive order q^n of the class."""
        return self.q**self.n

    def __add__(self, other: "PrueferElement") -> "PrueferElement":
        if self.q != other.q:
            raise ShapeMismatch("Prüfer elements at different primes")
        return PrueferElement.from_rational(
            self.q, self.representative() + other.representative()
        )

    def __sub__(self, other: "PrueferElement") -> "PrueferElement":
        return self + (-other)

    def __neg__(self) -> "PrueferElement":
        return PrueferElement.from_rational(self.q, -self.representative())

    def scale(self, c) -> "PrueferElement":
        """Multiply by c ∈ ℤ_(q); well defined since c has no q-denominator."""
        if isinstance(c, LocalizedRational):
            if c.prime != self.q:
                raise ShapeMismatch("scalar localized at the wrong prime")
            c = c.value
        c = as_fraction(c)
        if self.is_zero():
            return self
        if c.denominator % self.q == 0:
            raise ShapeMismatch(f"scaling by {c} is not defined on Q/Z_({self.q})")
        return PrueferElement.from_rational(self.q, self.representative() * c)
