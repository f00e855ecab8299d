"""Riemann zeta on the real ray s > 1 by Euler-Maclaurin summation.

    zeta(s) = sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
              + sum_{k=1..m} B_2k/(2k)! * s(s+1)...(s+2k-2) * N^(1-s-2k) + R

For real s the remainder R has modulus at most the first omitted
correction term, which is what ``abs_error_bound`` reports (plus a
floating-point rounding allowance).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exceptions import DomainError

_M = 12
_EPS = 2.0**-52


@lru_cache(maxsize=None)
def _bernoulli_even(m: int):
    """B_2, B_4, ..., B_2m as floats (B_1 = -1/2 convention)."""
    n_max = 2 * m
    b = [Fraction(0)] * (n_max + 1)
    b[0] = Fraction(1)
    for n in range(1, n_max + 1):
        acc = Fraction(0)
        for k in range(n):
            acc += math.comb(n + 1, k) * b[k]
        b[n] = -acc / (n + 1)
    return tuple(float(b[2 * k] / math.factorial(2 * k)) for k in range(1, m + 1))


@dataclass(frozen=True)
class ZetaValue:
    s: float
    value: float
    abs_error_bound: float

    def __float__(self) -> float:
        return self.value


def _correction_terms(s: float, n: int, count: int):
    coeffs = _bernoulli_even(count)
    terms = []
    rising = s  # s(s+1)...(s+2k-2)
    power = n ** (-s - 1.0)
    inv_n2 = 1.0 / (n * n)
    for k in range(1, count + 1):
        terms.append(coeffs[k - 1] * rising * power)
        rising *= (s + 2 * k - 1) * (s + 2 * k)
        power *= inv_n2
    return terms


def _evaluate(s: float, n: int):
    head = math.fsum(k ** -s for k in range(1, n))
    tail = n ** (1.0 - s) / (s - 1.0) + 0.5 * n ** -s
    terms = _correction_terms(s, n, _M + 1)
    value = math.fsum([head, tail, *terms[:_M]])
    remainder = abs(terms[_M])
    rounding = 4.0 * _EPS * (head + abs(tail) + sum(abs(t) for t in terms))
    return value, remainder, rounding


@lru_cache(maxsize=4096)
def riemann_zeta(s: float) -> ZetaValue:
    """zeta(s) for real s > 1 with a rigorous-in-exact-arithmetic error bound.

    Raises DomainError for s <= 1, where the series diverges.
    """
    s = float(s)
    if not s > 1.0 or math.isnan(s):
        raise DomainError(f"zeta(s) needs s > 1, got s={s}")
    if s > 1100.0:
        return ZetaValue(s, 1.0, 0.0)
    # N grows with s so that the rising factorial stays below (2*pi*N)^(2m).
    n = max(10, int(math.ceil(s / 4.0)))
    value, remainder, rounding = _evaluate(s, n)
    while remainder > _EPS * value and n < 10_000:
        n *= 2
        value, remainder, rounding = _evaluate(s, n)
    return ZetaValue(s, value, remainder + rounding)
