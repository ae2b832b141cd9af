"""Density of pairs meeting at least one of the three coprimality conditions.

The limiting density is ``5/2 a1 - 2 a2 + 1/2 a3`` with
``a_k = prod_p (1 - k/p^2)``.  Truncating the product at ``B`` leaves a tail
``prod_{p > B} (1 - k/p^2)`` between ``1 - k/B`` and ``1``, which gives a
rigorous enclosure.
"""

from __future__ import annotations

import decimal
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, gcd
from typing import Iterable

import numpy as np

from .errors import ValidationError

EXACT_LIMIT = 10**5
MAX_BOUND = 10**8
DECIMAL_DIGITS = 50


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, n + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


@dataclass(frozen=True)
class Interval:
    lower: Fraction
    upper: Fraction

    def __contains__(self, x) -> bool:
        x = Fraction(x)
        return self.lower <= x <= self.upper

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    @property
    def midpoint(self) -> Fraction:
        return (self.lower + self.upper) / 2

    def within(self, other: "Interval") -> bool:
        return other.lower <= self.lower and self.upper <= other.upper

    def to_json(self, digits: int = 30) -> dict:
        lo, hi = _outward(self.lower, self.upper, digits)
        return {"lower": _ratio(lo), "upper": _ratio(hi), "decimal": _decimal_str(self.midpoint, digits)}


def _ratio(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _decimal_str(x: Fraction, digits: int) -> str:
    with decimal.localcontext() as ctx:
        ctx.prec = digits
        return str(decimal.Decimal(x.numerator) / decimal.Decimal(x.denominator))


def _outward(lo: Fraction, hi: Fraction, digits: int) -> tuple[Fraction, Fraction]:
    """Round an enclosure outward to ``digits`` significant decimal digits."""
    with decimal.localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = decimal.ROUND_FLOOR
        dlo = decimal.Decimal(lo.numerator) / decimal.Decimal(lo.denominator)
        ctx.rounding = decimal.ROUND_CEILING
        dhi = decimal.Decimal(hi.numerator) / decimal.Decimal(hi.denominator)
    return Fraction(dlo), Fraction(dhi)


def _truncated_exact(k: int, primes: Iterable[int]) -> Fraction:
    num = den = 1
    for p in primes:
        q = p * p
        num *= q - k
        den *= q
    return Fraction(num, den)


def _truncated_rounded(k: int, primes: Iterable[int], rounding: str) -> Fraction:
    # every factor is positive, so rounding each step in one direction
    # rounds the whole product in that direction
    with decimal.localcontext() as ctx:
        ctx.prec = DECIMAL_DIGITS
        ctx.rounding = rounding
        D = decimal.Decimal
        acc = D(1)
        for p in primes:
            q = p * p
            acc = acc * (D(q - k) / D(q))
    return Fraction(acc)


def alpha(k: int, B: int) -> Interval:
    """Enclosure of ``prod_p (1 - k/p^2)`` from the primes up to ``B``."""
    if k not in (1, 2, 3):
        raise ValidationError(f"k must be 1, 2 or 3, got {k}")
    if B < 2:
        raise ValidationError(f"B must be at least 2, got {B}")
    if B > MAX_BOUND:
        raise ValidationError(f"B is capped at {MAX_BOUND}")
    ps = primes_up_to(B)
    tail = 1 - Fraction(k, B)
    if B <= EXACT_LIMIT:
        head = _truncated_exact(k, ps)
        return Interval(max(Fraction(0), head * tail), head)
    lo = _truncated_rounded(k, ps, decimal.ROUND_FLOOR)
    hi = _truncated_rounded(k, ps, decimal.ROUND_CEILING)
    return Interval(max(Fraction(0), lo * tail), hi)


def initial_pair_probability(B: int) -> Interval:
    """Enclosure of ``5/2 a1 - 2 a2 + 1/2 a3``."""
    a1, a2, a3 = (alpha(k, B) for k in (1, 2, 3))
    half, five_halves = Fraction(1, 2), Fraction(5, 2)
    lower = five_halves * a1.lower - 2 * a2.upper + half * a3.lower
    upper = five_halves * a1.upper - 2 * a2.lower + half * a3.upper
    return Interval(lower, upper)


def _condition_arrays(N: int):
    m, n = np.triu_indices(N, k=1)
    m = m + 1
    n = n + 1
    e1 = np.gcd(m, n) == 1
    e2 = np.gcd(m, n + 1) == 1
    e3 = (np.gcd(m + 1, n + 1) == 1) & (2 * m >= n)
    return {1: e1, 2: e2, 3: e3}


def _check_conditions(I: Iterable[int]) -> tuple[int, ...]:
    I = tuple(sorted(set(int(i) for i in I)))
    if not I or any(i not in (1, 2, 3) for i in I):
        raise ValidationError(f"condition set must be a nonempty subset of {{1,2,3}}, got {I}")
    return I


def empirical_density(N: int, I: Iterable[int]) -> Fraction:
    """Share of pairs ``1 <= m < n <= N`` satisfying every condition in ``I``.

    Condition 1: ``gcd(m, n) = 1``; 2: ``gcd(m, n+1) = 1``;
    3: ``gcd(m+1, n+1) = 1`` and ``2m >= n``.
    """
    if N < 2:
        raise ValidationError(f"N must be at least 2, got {N}")
    I = _check_conditions(I)
    conds = _condition_arrays(N)
    hit = np.ones(comb(N, 2), dtype=bool)
    for i in I:
        hit &= conds[i]
    return Fraction(int(hit.sum()), comb(N, 2))


def inclusion_exclusion_estimate(N: int) -> Fraction:
    """Share of pairs up to ``N`` meeting at least one condition, by inclusion-exclusion."""
    total = Fraction(0)
    for size in (1, 2, 3):
        for I in combinations((1, 2, 3), size):
            total += (-1) ** (size + 1) * empirical_density(N, I)
    return total


def count_any_condition(N: int) -> int:
    """Direct count of pairs ``m < n <= N`` meeting at least one condition."""
    return sum(
        1
        for n in range(2, N + 1)
        for m in range(1, n)
        if gcd(m, n) == 1 or gcd(m, n + 1) == 1 or (gcd(m + 1, n + 1) == 1 and 2 * m >= n)
    )
