"""Exact binomial pmf, CDF, and survival function at rational p."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .rational import as_exact, binomial_coeff

__all__ = ["ParameterError", "BinomialParams", "pmf", "cdf", "survival", "pmf_sequence"]


class ParameterError(ValueError):
    """Trial count or success probability outside the valid domain."""


@dataclass(frozen=True)
class BinomialParams:
    """Trial count n >= 0 and exact success probability 0 <= p <= 1."""

    n: int
    p: Fraction

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 0:
            raise ParameterError(f"n must be a nonnegative integer, got {self.n!r}")
        object.__setattr__(self, "p", as_exact(self.p))
        if not 0 <= self.p <= 1:
            raise ParameterError(f"p must lie in [0, 1], got {self.p}")


def pmf(k: int, params: BinomialParams) -> Fraction:
    """P(X = k), exactly; zero outside 0 <= k <= n."""
    n, p = params.n, params.p
    if k < 0 or k > n:
        return Fraction(0)
    return binomial_coeff(n, k) * p**k * (1 - p) ** (n - k)


def pmf_sequence(params: BinomialParams) -> Iterator[Fraction]:
    """Yield P(X = 0), ..., P(X = n) using the incremental mass ratio.

    Each successive mass is the previous one times (n-k)p / ((k+1)(1-p)),
    so the whole sequence costs O(n) exact operations instead of O(n)
    fresh power computations.
    """
    n, p = params.n, params.p
    if p == 1:
        # point mass at n; the ratio recurrence would divide by 1-p = 0
        for k in range(n):
            yield Fraction(0)
        yield Fraction(1)
        return
    ratio = p / (1 - p)
    mass = (1 - p) ** n
    yield mass
    for k in range(n):
        mass = mass * ratio * (n - k) / (k + 1)
        yield mass


def cdf(k: int, params: BinomialParams) -> Fraction:
    """P(X <= k), exactly; clamped to 0 below the support and 1 above."""
    n = params.n
    if k < 0:
        return Fraction(0)
    if k >= n:
        return Fraction(1)
    total = Fraction(0)
    for i, mass in enumerate(pmf_sequence(params)):
        total += mass
        if i == k:
            break
    return total


def survival(k: int, params: BinomialParams) -> Fraction:
    """P(X >= k) = 1 - P(X <= k-1), exactly."""
    return 1 - cdf(k - 1, params)
