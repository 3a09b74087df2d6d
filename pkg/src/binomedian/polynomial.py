"""Dense integer-coefficient polynomials, ascending degree order.

Coefficients are plain Python ints, so nothing here ever overflows or
rounds.  The evaluation helpers come in two flavors: an exact Fraction
Horner scheme, and a homogenized integer form den^deg * P(num/den) whose
sign (and zeroness) matches P at the rational point while staying in pure
integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

__all__ = ["IntPolynomial"]


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


@dataclass(frozen=True)
class IntPolynomial:
    """coeffs[i] is the coefficient of x**i; trailing zeros are trimmed."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _trim(tuple(int(c) for c in self.coeffs)))

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def constant(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def scale(self, factor: int) -> "IntPolynomial":
        return IntPolynomial(tuple(factor * c for c in self.coeffs))

    def shift(self, power: int) -> "IntPolynomial":
        """Multiply by x**power."""
        if self.is_zero:
            return self
        return IntPolynomial((0,) * power + self.coeffs)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    def evaluate(self, x: Fraction | int) -> Fraction:
        """Exact Horner evaluation."""
        value = Fraction(0)
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def scaled_value(self, num: int, den: int) -> int:
        """den**degree * P(num/den) as an integer, for den > 0.

        Shares sign and zeroness with P(num/den), so bisection and root
        candidate tests never need Fraction arithmetic.
        """
        if den <= 0:
            raise ValueError("den must be positive")
        if self.is_zero:
            return 0
        value = self.coeffs[-1]
        den_power = 1
        for c in reversed(self.coeffs[:-1]):
            den_power *= den
            value = value * num + c * den_power
        return value

    def sign_at(self, x: Fraction) -> int:
        """Sign of P(x): -1, 0, or +1."""
        v = self.scaled_value(x.numerator, x.denominator)
        return (v > 0) - (v < 0)

    def compose_one_minus_x(self) -> "IntPolynomial":
        """The polynomial P(1 - x), expanded."""
        result = IntPolynomial.zero()
        one_minus_x = IntPolynomial((1, -1))
        for c in reversed(self.coeffs):
            result = result * one_minus_x + IntPolynomial((c,))
        return result

    def to_json_list(self) -> list[str]:
        """Coefficients as decimal strings, ascending degree."""
        return [str(c) for c in self.coeffs]
