"""Exact Gaussian-rational scalars.

Every coefficient in the engine is a + b*i with exact rational a, b, so
"this polynomial is zero" is a decidable structural question. Fraction
keeps both parts in lowest terms with positive denominators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Coefficient:
    re: Fraction
    im: Fraction

    @staticmethod
    def of(re=0, im=0) -> "Coefficient":
        """Build from anything Fraction accepts (ints, strings, Fractions)."""
        return Coefficient(Fraction(re), Fraction(im))

    def __add__(self, other: "Coefficient") -> "Coefficient":
        return Coefficient(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "Coefficient") -> "Coefficient":
        return Coefficient(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "Coefficient":
        return Coefficient(-self.re, -self.im)

    def __mul__(self, other: "Coefficient") -> "Coefficient":
        # (a + bi)(c + di) = (ac - bd) + (ad + bc)i
        return Coefficient(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        if self.re:
            parts.append(str(self.re))
        if self.im:
            if self.im == 1:
                parts.append("i")
            elif self.im == -1:
                parts.append("-i")
            else:
                parts.append("%s*i" % self.im)
        return "+".join(parts).replace("+-", "-")


ZERO = Coefficient.of(0)
ONE = Coefficient.of(1)
MINUS_ONE = Coefficient.of(-1)
I = Coefficient.of(0, 1)
MINUS_I = Coefficient.of(0, -1)
