"""Truncated formal power series in q over exact rationals.

A QSeries stores the coefficients of q^0 .. q^N for a fixed truncation order N
and is immutable. Binary operations truncate to the smaller operand order, so
precision never extends silently; everything a series claims to know, it knows
exactly. Coefficients are fractions.Fraction throughout, though the heavy
product constructors (theta_psi, eta_quotient_psi, product_pow) run on plain
int lists internally and convert once at the end.

Multiplication ships two strategies, "schoolbook" (the default and the
baseline) and "karatsuba"; both produce bit-identical coefficients and the
bench subcommand holds them to that.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "QSeries",
    "Scalar",
    "add",
    "sub",
    "scale",
    "mul",
    "MUL_STRATEGIES",
    "inverse",
    "substitute_power",
    "parity_support",
    "theta_psi",
    "eta_quotient_psi",
    "product_pow",
    "PARITY_EVEN",
    "PARITY_ODD",
    "PARITY_MIXED",
    "PARITY_ZERO",
]

Scalar = Union[int, Fraction]

PARITY_EVEN = "even"
PARITY_ODD = "odd"
PARITY_MIXED = "mixed"
PARITY_ZERO = "zero"

_KARATSUBA_CUTOFF = 32


class QSeries:
    """Power series truncated at a fixed order, with exact coefficients.

    The constructor takes the full coefficient list for q^0 .. q^N, so the
    order is always explicit in the data. Use the classmethod constructors
    (zero, one, monomial) when starting from an order instead.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar]):
        cs = tuple(c if isinstance(c, Fraction) else Fraction(c) for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least the q^0 coefficient")
        self._coeffs = cs

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        _check_order(order)
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "QSeries":
        _check_order(order)
        return cls([1] + [0] * order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff: Scalar = 1) -> "QSeries":
        _check_order(order)
        if not 0 <= exponent <= order:
            raise ValueError(f"monomial exponent {exponent} outside 0..{order}")
        cs = [Fraction(0)] * (order + 1)
        cs[exponent] = Fraction(coeff)
        return cls(cs)

    # -- inspection --------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def coefficient(self, i: int) -> Fraction:
        """Coefficient of q^i; asking past the truncation order is an error,
        because the series genuinely does not know that coefficient."""
        if not 0 <= i <= self.order:
            raise IndexError(f"exponent {i} outside truncated range 0..{self.order}")
        return self._coeffs[i]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self._coeffs)

    def first_nonzero_exponent(self) -> int | None:
        for i, c in enumerate(self._coeffs):
            if c != 0:
                return i
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self._coeffs[:8])
        if self.order >= 8:
            shown += ", ..."
        return f"QSeries(order={self.order}, coeffs=[{shown}])"

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return QSeries([self._coeffs[i] + other._coeffs[i] for i in range(n + 1)])

    def __sub__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return QSeries([self._coeffs[i] - other._coeffs[i] for i in range(n + 1)])

    def __neg__(self) -> "QSeries":
        return QSeries([-c for c in self._coeffs])

    def __mul__(self, other: Union["QSeries", Scalar]) -> "QSeries":
        if isinstance(other, QSeries):
            return mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: Scalar) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: Scalar) -> "QSeries":
        c = Fraction(c)
        return QSeries([c * a for a in self._coeffs])

    def __pow__(self, e: int) -> "QSeries":
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"series exponent must be a non-negative int, got {e!r}")
        result = QSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def inverse(self) -> "QSeries":
        """Multiplicative inverse, defined only when the constant term is nonzero."""
        c0 = self._coeffs[0]
        if c0 == 0:
            raise ValueError("series with zero constant term has no inverse")
        n = self.order
        inv = [Fraction(0)] * (n + 1)
        inv[0] = 1 / c0
        for i in range(1, n + 1):
            acc = Fraction(0)
            for j in range(1, i + 1):
                if self._coeffs[j]:
                    acc += self._coeffs[j] * inv[i - j]
            inv[i] = -acc / c0
        return QSeries(inv)

    def substitute_power(self, m: int) -> "QSeries":
        """The series in q^m: coefficient c_i lands at exponent m*i.

        The result keeps this series' truncation order; only source
        coefficients with m*i <= order contribute, which is exactly the
        information the truncation carries.
        """
        if not isinstance(m, int) or m < 1:
            raise ValueError(f"substitution power must be a positive int, got {m!r}")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i in range(n // m + 1):
            out[m * i] = self._coeffs[i]
        return QSeries(out)

    def shift(self, m: int) -> "QSeries":
        """Multiply by q^m (m >= 0), truncating at the same order."""
        if not isinstance(m, int) or m < 0:
            raise ValueError(f"shift must be a non-negative int, got {m!r}")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i in range(n - m + 1):
            out[i + m] = self._coeffs[i]
        return QSeries(out)

    # -- numerics and serialization -----------------------------------------

    def eval_float(self, q: float) -> float:
        """Evaluate the truncated polynomial at a float q (Horner)."""
        acc = 0.0
        for c in reversed(self._coeffs):
            acc = acc * q + float(c)
        return acc

    def to_json_dict(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self._coeffs]}

    @classmethod
    def from_json_dict(cls, d: dict) -> "QSeries":
        coeffs = [Fraction(s) for s in d["coeffs"]]
        if len(coeffs) != d["order"] + 1:
            raise ValueError("coefficient count does not match the declared order")
        return cls(coeffs)

    def digest(self) -> str:
        """SHA-256 over the canonical JSON form; stable across runs."""
        blob = json.dumps(self.to_json_dict(), separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()


# -- module-level operation names (thin wrappers over the methods) -----------


def add(s: QSeries, t: QSeries) -> QSeries:
    return s + t


def sub(s: QSeries, t: QSeries) -> QSeries:
    return s - t


def scale(s: QSeries, c: Scalar) -> QSeries:
    return s.scale(c)


def inverse(s: QSeries) -> QSeries:
    return s.inverse()


def substitute_power(s: QSeries, m: int) -> QSeries:
    return s.substitute_power(m)


# -- multiplication -----------------------------------------------------------


def _mul_schoolbook(a: Sequence[Fraction], b: Sequence[Fraction], n: int) -> list[Fraction]:
    """Truncated convolution out[0..n]; skips zero coefficients of a, which
    makes sparse operands (theta series) cheap."""
    out = [Fraction(0)] * (n + 1)
    for i, ai in enumerate(a):
        if i > n:
            break
        if ai == 0:
            continue
        for j, bj in enumerate(b[: n - i + 1]):
            if bj:
                out[i + j] += ai * bj
    return out


def _full_schoolbook(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] += ai * bj
    return out


def _full_karatsuba(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Full product by split-half recursion, falling back to schoolbook below
    the cutoff. Operand lengths may differ; the split point is half the longer."""
    n = max(len(a), len(b))
    if min(len(a), len(b)) == 0:
        return []
    if n <= _KARATSUBA_CUTOFF:
        return _full_schoolbook(a, b)
    h = n // 2
    a0, a1 = a[:h], a[h:]
    b0, b1 = b[:h], b[h:]
    low = _full_karatsuba(a0, b0) if a0 and b0 else []
    high = _full_karatsuba(a1, b1) if a1 and b1 else []
    asum = _list_add(a0, a1)
    bsum = _list_add(b0, b1)
    mid = _full_karatsuba(asum, bsum) if asum and bsum else []
    mid = _list_sub(_list_sub(mid, low), high)
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, c in enumerate(low):
        out[i] += c
    for i, c in enumerate(mid):
        if c:
            out[i + h] += c
    for i, c in enumerate(high):
        if c:
            out[i + 2 * h] += c
    return out


def _list_add(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return out


def _list_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = list(a) + [Fraction(0)] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return out


def _mul_karatsuba(a: Sequence[Fraction], b: Sequence[Fraction], n: int) -> list[Fraction]:
    full = _full_karatsuba(list(a), list(b))
    full += [Fraction(0)] * (n + 1 - len(full))
    return full[: n + 1]


MUL_STRATEGIES = {
    "schoolbook": _mul_schoolbook,
    "karatsuba": _mul_karatsuba,
}


def mul(s: QSeries, t: QSeries, strategy: str = "schoolbook") -> QSeries:
    """Product truncated to the smaller operand order.

    Both strategies return bit-identical coefficients; "schoolbook" is the
    baseline the benchmark measures "karatsuba" against.
    """
    try:
        impl = MUL_STRATEGIES[strategy]
    except KeyError:
        raise ValueError(f"unknown multiplication strategy {strategy!r}") from None
    n = min(s.order, t.order)
    return QSeries(impl(s.coeffs, t.coeffs, n))


# -- parity ------------------------------------------------------------------


def parity_support(s: QSeries) -> str:
    """Which exponent parities carry nonzero coefficients: "even", "odd",
    "mixed", or "zero". The constant term counts as an even exponent."""
    has_even = any(c != 0 for c in s.coeffs[0::2])
    has_odd = any(c != 0 for c in s.coeffs[1::2])
    if has_even and has_odd:
        return PARITY_MIXED
    if has_even:
        return PARITY_EVEN
    if has_odd:
        return PARITY_ODD
    return PARITY_ZERO


# -- product constructors ------------------------------------------------------
#
# These run on plain int coefficient lists. Multiplying by (1 - q^m) walks the
# list downward; dividing walks upward (geometric-series accumulation). Both
# are O(length) per factor, so a full eta quotient at order N costs O(N^2 / m)
# summed over its factors.


def _apply_one_minus_qm(c: list[int], m: int) -> None:
    for i in range(len(c) - 1, m - 1, -1):
        c[i] -= c[i - m]


def _apply_inv_one_minus_qm(c: list[int], m: int) -> None:
    for i in range(m, len(c)):
        c[i] += c[i - m]


def theta_psi(order: int) -> QSeries:
    """Generating function of triangular numbers: sum of q^{n(n+1)/2}, n >= 0.

    Constant term 1 (the n = 0 summand), matching the product form below.
    """
    _check_order(order)
    cs = [0] * (order + 1)
    n = 0
    while n * (n + 1) // 2 <= order:
        cs[n * (n + 1) // 2] = 1
        n += 1
    return QSeries(cs)


def eta_quotient_psi(order: int) -> QSeries:
    """The same series as theta_psi, built as the infinite product
    prod_{n>=1} (1 - q^{2n}) / (1 - q^{2n-1}), truncated at `order`.

    Factors with exponent beyond the order are 1 + O(q^{order+1}) and are
    skipped; agreement with theta_psi is an empirical check the tests run to
    order 1000.
    """
    _check_order(order)
    c = [0] * (order + 1)
    c[0] = 1
    for n in range(1, order // 2 + 1):
        _apply_one_minus_qm(c, 2 * n)
    for n in range(1, (order + 1) // 2 + 1):
        _apply_inv_one_minus_qm(c, 2 * n - 1)
    return QSeries(c)


def product_pow(
    numerator_step: int,
    denominator_step_offset: tuple[int, int],
    exponent: int,
    order: int,
) -> QSeries:
    """prod_{n>=1} ((1 - q^{a n}) / (1 - q^{b n - c}))^e truncated at `order`,
    where a = numerator_step and (b, c) = denominator_step_offset.

    Covers every quotient shape the identities need, e.g. (2, (2, 1), 4k) for
    the fourth-power theta series and (4, (4, 2), 4k) for its q^2 substitute.
    """
    _check_order(order)
    a = numerator_step
    b, c_off = denominator_step_offset
    e = exponent
    if not (isinstance(a, int) and a >= 1):
        raise ValueError(f"numerator step must be a positive int, got {a!r}")
    if not (isinstance(b, int) and b >= 1 and isinstance(c_off, int) and 0 <= c_off < b):
        raise ValueError(f"denominator step/offset must satisfy 0 <= offset < step, got {denominator_step_offset!r}")
    if not (isinstance(e, int) and e >= 1):
        raise ValueError(f"product exponent must be a positive int, got {e!r}")
    c = [0] * (order + 1)
    c[0] = 1
    for n in range(1, order // a + 1):
        for _ in range(e):
            _apply_one_minus_qm(c, a * n)
    n = 1
    while b * n - c_off <= order:
        for _ in range(e):
            _apply_inv_one_minus_qm(c, b * n - c_off)
        n += 1
    return QSeries(c)


def _check_order(order: int) -> None:
    if not isinstance(order, int) or order < 0:
        raise ValueError(f"truncation order must be a non-negative int, got {order!r}")
