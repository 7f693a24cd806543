"""Exact integer and rational building blocks.

Stirling numbers of the second kind, Bernoulli numbers, divisor sums, and the
normalizing constants consumed by the identity engine. Every value is a Python
int or a fractions.Fraction; no floating point enters at any stage. Fraction
keeps results in lowest terms with a positive denominator, which is the
exactness contract everything downstream relies on.

Conventions fixed here:
  * Stirling numbers are second kind: S(n, j) counts partitions of an n-element
    set into j non-empty blocks, S(0, 0) = 1, S(n, j) = 0 for j > n.
  * Bernoulli numbers use the B_1 = -1/2 convention; only even indices are
    exposed because odd ones past B_1 vanish and nothing here needs B_1.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial, isqrt

__all__ = [
    "StirlingTable",
    "stirling2",
    "bernoulli",
    "d_constant",
    "divisors",
    "sigma",
    "sigma_sharp",
    "zeta_even_exact",
]


class StirlingTable:
    """Grow-on-demand triangular table of Stirling numbers S(n, j).

    Row n holds S(n, 0..n). Growth appends whole rows under a lock, and rows
    are never mutated after they are appended, so concurrent readers always
    see fully built rows.
    """

    def __init__(self) -> None:
        self._rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    @property
    def max_n(self) -> int:
        return len(self._rows) - 1

    def value(self, n: int, j: int) -> int:
        if n < 0 or j < 0:
            raise ValueError(f"Stirling indices must be non-negative, got ({n}, {j})")
        if j > n:
            return 0
        if n > self.max_n:
            self._grow(n)
        return self._rows[n][j]

    def _grow(self, n: int) -> None:
        with self._lock:
            rows = self._rows
            while len(rows) <= n:
                prev = rows[-1]
                m = len(rows)
                # S(m, j) = j*S(m-1, j) + S(m-1, j-1)
                row = [0] * (m + 1)
                for j in range(1, m):
                    row[j] = j * prev[j] + prev[j - 1]
                row[m] = prev[m - 1]
                rows.append(tuple(row))


_STIRLING = StirlingTable()

_BERNOULLI_EVEN: list[Fraction] = [Fraction(1)]
_BERNOULLI_LOCK = threading.Lock()


def stirling2(n: int, j: int) -> int:
    """Stirling number of the second kind S(n, j), from a shared cached table."""
    return _STIRLING.value(n, j)


def bernoulli(m: int) -> Fraction:
    """Bernoulli number B_m for even m >= 0 (B_1 = -1/2 convention).

    Uses the defining recurrence sum_{i=0}^{m} C(m+1, i) B_i = 0, with the odd
    contributions reduced to the single B_1 term. Odd m is rejected rather
    than silently returning 0 so callers cannot confuse index conventions.
    """
    if m < 0 or m % 2 != 0:
        raise ValueError(f"only even non-negative Bernoulli indices are supported, got {m}")
    half = m // 2
    if half < len(_BERNOULLI_EVEN):
        return _BERNOULLI_EVEN[half]
    with _BERNOULLI_LOCK:
        while len(_BERNOULLI_EVEN) <= half:
            n = 2 * len(_BERNOULLI_EVEN)
            # B_n = -( sum_{j<n/2} C(n+1, 2j) B_{2j} + C(n+1, 1) * (-1/2) ) / (n+1)
            acc = Fraction(-(n + 1), 2)
            for j, b in enumerate(_BERNOULLI_EVEN):
                acc += comb(n + 1, 2 * j) * b
            _BERNOULLI_EVEN.append(-acc / (n + 1))
    return _BERNOULLI_EVEN[half]


def d_constant(k: int) -> Fraction:
    """Normalizing constant d_k = -(-16)^k B_{2k} (4^k - 1) / (8k) for k >= 1.

    Integer-valued on every range exercised here (the tests pin that fact for
    k <= 12); returned as a Fraction so downstream scaling stays exact either
    way.
    """
    if k < 1:
        raise ValueError(f"d_constant needs k >= 1, got {k}")
    return Fraction(-((-16) ** k) * (4**k - 1), 8 * k) * bernoulli(2 * k)


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of n >= 1, by trial division."""
    if n < 1:
        raise ValueError(f"divisors needs n >= 1, got {n}")
    small: list[int] = []
    large: list[int] = []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def sigma(k: int, n: int) -> int:
    """Divisor power sum sigma_k(n) = sum of d^k over divisors d of n."""
    return sum(d**k for d in divisors(n))


def sigma_sharp(k: int, n: int) -> int:
    """Modified divisor sum: d^k over divisors d of n whose codivisor n/d is odd.

    Equivalent characterization used by the tests: equals sigma_k(n) for odd n
    and 2^k * sigma_sharp(k, n/2) for even n.
    """
    return sum(d**k for d in divisors(n) if (n // d) % 2 == 1)


def zeta_even_exact(k: int) -> Fraction:
    """Rational part of the even zeta value: zeta(2k) / pi^{2k}, exactly.

    zeta(2k) = (-1)^{k+1} (2 pi)^{2k} B_{2k} / (2 (2k)!), so the returned value
    is (-1)^{k+1} 2^{2k} B_{2k} / (2 (2k)!).
    """
    if k < 1:
        raise ValueError(f"zeta_even_exact needs k >= 1, got {k}")
    sign = 1 if k % 2 == 1 else -1
    return Fraction(sign * 2 ** (2 * k), 2 * factorial(2 * k)) * bernoulli(2 * k)
