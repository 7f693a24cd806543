"""Integer-coefficient polynomials and the families that drive the identities.

The even family comes from signed Stirling data; the odd family is built from
the even one by a binomial twist. Two independent routes to the even
polynomial are provided (p_even via the alternating tables, q_even_direct via
a direct weighted-power expansion) precisely so they can be played against
each other in tests.

Palindromy and monicity of the families are observed facts that the tests
assert over the computed range; nothing in this module assumes either.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Union

from .exactnum import stirling2

__all__ = [
    "IntPolynomial",
    "CoefficientTables",
    "a_table",
    "b_table",
    "coefficient_tables",
    "p_even",
    "q_even_direct",
    "p_odd",
    "q_odd",
    "odd_cofactor",
]

Number = Union[int, float, Fraction]


class IntPolynomial:
    """Dense integer polynomial; index = degree, trailing zeros stripped.

    The zero polynomial has an empty coefficient tuple and degree -1. Unlike a
    truncated series, a polynomial is a total object, so coefficient() past
    the degree is simply 0.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise ValueError(f"polynomial coefficients must be ints, got {c!r}")
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls([])

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    def coefficient(self, i: int) -> int:
        if i < 0:
            raise IndexError(f"negative exponent {i}")
        return self._coeffs[i] if i <= self.degree else 0

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self._coeffs)})"

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        n = max(len(self._coeffs), len(other._coeffs))
        return IntPolynomial(
            [self.coefficient(i) + other.coefficient(i) for i in range(n)]
        )

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        n = max(len(self._coeffs), len(other._coeffs))
        return IntPolynomial(
            [self.coefficient(i) - other.coefficient(i) for i in range(n)]
        )

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-c for c in self._coeffs])

    def __mul__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        if isinstance(other, int) and not isinstance(other, bool):
            return IntPolynomial([other * c for c in self._coeffs])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return IntPolynomial.zero()
        out = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    if b:
                        out[i + j] += a * b
        return IntPolynomial(out)

    def __rmul__(self, other: int) -> "IntPolynomial":
        if isinstance(other, int) and not isinstance(other, bool):
            return self * other
        return NotImplemented

    def __pow__(self, e: int) -> "IntPolynomial":
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"polynomial exponent must be a non-negative int, got {e!r}")
        result = IntPolynomial([1])
        for _ in range(e):
            result = result * self
        return result

    def evaluate(self, x: Number) -> Number:
        """Horner evaluation; exact for int/Fraction arguments, float for float."""
        acc: Number = 0 if not isinstance(x, float) else 0.0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def stretch(self, m: int) -> "IntPolynomial":
        """p(z) -> p(z^m)."""
        if not isinstance(m, int) or m < 1:
            raise ValueError(f"stretch factor must be a positive int, got {m!r}")
        if self.is_zero():
            return self
        out = [0] * (m * self.degree + 1)
        for i, c in enumerate(self._coeffs):
            out[m * i] = c
        return IntPolynomial(out)

    def shift(self, m: int) -> "IntPolynomial":
        """p(z) -> z^m * p(z)."""
        if not isinstance(m, int) or m < 0:
            raise ValueError(f"shift must be a non-negative int, got {m!r}")
        if self.is_zero():
            return self
        return IntPolynomial([0] * m + list(self._coeffs))

    def is_palindromic(self) -> bool:
        return self._coeffs == self._coeffs[::-1]

    def as_qseries(self, order: int):
        from .series import QSeries

        if self.degree > order:
            raise ValueError(f"degree {self.degree} exceeds requested order {order}")
        cs = list(self._coeffs) + [0] * (order - self.degree)
        return QSeries(cs if cs else [0] * (order + 1))

    def format(self, var: str = "z") -> str:
        """Human form, ascending degree: "1 + 4z + z^2". Zero prints "0"."""
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                head = "" if mag == 1 else str(mag)
                term = f"{head}{var}" if i == 1 else f"{head}{var}^{i}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def to_json_dict(self) -> dict:
        return {"degree": self.degree, "coeffs": [str(c) for c in self._coeffs]}

    @classmethod
    def from_json_dict(cls, d: dict) -> "IntPolynomial":
        coeffs = [int(s) for s in d["coeffs"]]
        p = cls(coeffs)
        if p.degree != d["degree"]:
            raise ValueError("degree does not match the coefficient list")
        return p


# -- the polynomial families ---------------------------------------------------


def a_table(k: int) -> list[int]:
    """Alternating Stirling sums a_k(m) for m = 0 .. 2k-1:
    a_k(m) = sum_j (-1)^j j! S(2k-1, j) C(j, m)."""
    _check_k(k)
    n = 2 * k - 1
    return [
        sum((-1) ** j * factorial(j) * stirling2(n, j) * comb(j, m) for j in range(m, n + 1))
        for m in range(2 * k)
    ]


def b_table(k: int) -> list[int]:
    """Binomial transform b_k(l) for l = 1 .. 2k-1 (list index l-1):
    b_k(l) = sum_m (-1)^m a_k(m) C(2k-m-1, l)."""
    _check_k(k)
    a = a_table(k)
    return [
        sum((-1) ** m * a[m] * comb(2 * k - m - 1, l) for m in range(2 * k))
        for l in range(1, 2 * k)
    ]


def p_even(k: int) -> IntPolynomial:
    """Even-case numerator polynomial of degree 2k-2, via the b-table:
    coefficient of z^{l-1} is (-1)^l b_k(l)."""
    _check_k(k)
    b = b_table(k)
    return IntPolynomial([(-1) ** l * b[l - 1] for l in range(1, 2 * k)])


def q_even_direct(k: int) -> IntPolynomial:
    """Independent route to z * p_even(k): degree 2k-1 polynomial
    sum_j j! S(2k-1, j) z^j (1-z)^{2k-j-1}, built without the a/b tables."""
    _check_k(k)
    n = 2 * k - 1
    one_minus_z = IntPolynomial([1, -1])
    acc = IntPolynomial.zero()
    for j in range(n + 1):
        w = factorial(j) * stirling2(n, j)
        if w:
            acc = acc + (one_minus_z ** (n - j)).shift(j) * w
    return acc


def p_odd(k: int) -> IntPolynomial:
    """Odd-case numerator polynomial of degree 4k-2, for odd k:
    (1+z)^{2k} p_even(k)(z) - 2^{2k-1} z p_even(k)(z^2)."""
    _check_k_odd(k)
    pe = p_even(k)
    binom = IntPolynomial([1, 1]) ** (2 * k)
    return binom * pe - (2 ** (2 * k - 1)) * pe.stretch(2).shift(1)


def q_odd(k: int) -> IntPolynomial:
    """Independent route to z * p_odd(k), built from q_even_direct alone:
    (1+w)^{2k} Q(w) - 2^{2k-1} Q(w^2), where Q = q_even_direct(k)."""
    _check_k_odd(k)
    qe = q_even_direct(k)
    binom = IntPolynomial([1, 1]) ** (2 * k)
    return binom * qe - (2 ** (2 * k - 1)) * qe.stretch(2)


def odd_cofactor(k: int) -> IntPolynomial:
    """The factor S with p_odd(k)(z) = (1 + z^2) S(z^2), returned in the
    squared variable (degree 2k-2).

    The factorization is an observed fact on the computed range, not an
    assumption: this function verifies it (even-exponent support, exact
    division) and raises if it ever stops holding.
    """
    po = p_odd(k)
    if any(c for c in po.coeffs[1::2]):
        raise ValueError(f"odd polynomial for k={k} has odd-exponent terms; no (1+z^2) factorization")
    u_coeffs = list(po.coeffs[0::2])
    quotient = [0] * (len(u_coeffs) - 1)
    rest = u_coeffs
    for i in range(len(quotient) - 1, -1, -1):
        quotient[i] = rest[i + 1]
        rest[i] -= quotient[i]
    if rest[0] != 0:
        raise ValueError(f"odd polynomial for k={k} is not divisible by (1+z^2)")
    return IntPolynomial(quotient)


@dataclass(frozen=True)
class CoefficientTables:
    """The paired integer tables for one k: a indexed by m = 0 .. 2k-1,
    b indexed by l = 1 .. 2k-1 (stored at l-1). Build through
    coefficient_tables(), which cross-checks the two construction routes."""

    k: int
    a: tuple[int, ...]
    b: tuple[int, ...]


def coefficient_tables(k: int) -> CoefficientTables:
    """Bundle a_table(k) and b_table(k) after verifying consistency: the even
    polynomial read off the b-table must match the direct weighted-power route
    that never touches either table."""
    _check_k(k)
    a = tuple(a_table(k))
    b = tuple(b_table(k))
    via_b = IntPolynomial([(-1) ** l * b[l - 1] for l in range(1, 2 * k)])
    if via_b.shift(1) != q_even_direct(k):
        raise ValueError(f"coefficient tables for k={k} disagree across construction routes")
    return CoefficientTables(k=k, a=a, b=b)


def _check_k(k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive int, got {k!r}")


def _check_k_odd(k: int) -> None:
    _check_k(k)
    if k % 2 == 0:
        raise ValueError(f"the odd-case family needs odd k, got {k}")
