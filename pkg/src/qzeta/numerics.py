"""Floating-point limit checks: the q-series identities degrade gracefully to
classical constants as q -> 1-, and this module measures how fast.

Two checks ship:

  * qgamma_limit_check: (1-q)^{2k} times the eta-type quotient
    prod ((1-q^{2n}) / (1-q^{2n-1}))^{4k} tends to pi^{2k} / 4^k;
  * zeta_recovery_check: the truncated Lambert sum, normalized by
    (1-q)^{2k} for even k and (1-q^2)^{2k} for odd k, tends to
    d_k pi^{2k} / 4^k, whose rational part is assembled from the exact
    even zeta values rather than hard-coded.

Products and sums are evaluated adaptively: accumulation stops once the next
factor or term can no longer move the running value at a 1e-16 relative
threshold. Reports carry the raw values, the target, and the relative errors,
and flag whether the errors decrease monotonically along the q grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .exactnum import d_constant, zeta_even_exact
from .qpoly import IntPolynomial, p_even, p_odd

__all__ = [
    "LimitReport",
    "default_q_points",
    "qgamma_limit_check",
    "zeta_recovery_check",
    "lambert_sum_float",
    "psi_quotient_float",
]

_REL_STOP = 1e-16
_MAX_TERMS = 5_000_000


@dataclass
class LimitReport:
    """Evaluation of one limit check along an increasing grid of q values."""

    check: str  # "qgamma" | "zeta_recovery"
    k: int
    q_points: list[float]
    lhs_values: list[float]
    rhs_values: list[float]
    target: float
    relative_errors: list[float]
    converging: bool

    def to_json_dict(self) -> dict:
        return {
            "check": self.check,
            "k": self.k,
            "q_points": self.q_points,
            "lhs_values": self.lhs_values,
            "rhs_values": self.rhs_values,
            "target": self.target,
            "relative_errors": self.relative_errors,
            "converging": self.converging,
        }

    def csv_rows(self) -> list[tuple[float, float, float, float]]:
        return [
            (q, lhs, self.target, err)
            for q, lhs, err in zip(self.q_points, self.lhs_values, self.relative_errors)
        ]

    def format_table(self) -> str:
        lines = [
            f"{self.check}  k={self.k}  target={self.target!r}  "
            f"converging={self.converging}",
            f"  {'q':>14} {'lhs':>22} {'rhs':>22} {'rel_err':>12}",
        ]
        for q, lhs, rhs, err in zip(
            self.q_points, self.lhs_values, self.rhs_values, self.relative_errors
        ):
            lines.append(f"  {q:>14.10f} {lhs:>22.12g} {rhs:>22.12g} {err:>12.3e}")
        return "\n".join(lines)


def default_q_points() -> list[float]:
    """The standard approach grid 1 - 2^{-m}, m = 4 .. 10."""
    return [1.0 - 2.0**-m for m in range(4, 11)]


def psi_quotient_float(q: float, exponent: int) -> float:
    """prod_{n>=1} ((1 - q^{2n}) / (1 - q^{2n-1}))^exponent at float q in [0, 1).

    Adaptive: stops once the next factor differs from 1 by less than the
    relative threshold, which the geometric decay of q^n guarantees happens.
    """
    acc = 1.0
    qq = q * q
    odd_pow = q  # q^{2n-1}
    even_pow = q * q  # q^{2n}
    for _ in range(_MAX_TERMS):
        if odd_pow < _REL_STOP:
            break
        acc *= ((1.0 - even_pow) / (1.0 - odd_pow)) ** exponent
        odd_pow *= qq
        even_pow *= qq
    return acc


def lambert_sum_float(k: int, q: float) -> float:
    """Float value of the Lambert-type left side at q in [0, 1).

    Even k: sum 2^{2k-1} x P(x) / (1-x)^{2k}, x = q^{2n+1}, P = p_even(k).
    Odd k:  sum x P(x) / (1-x^2)^{2k}, x = q^{2n+1}, P = p_odd(k).
    Terms decay geometrically; summation stops at the relative threshold.
    """
    _check_k(k)
    _check_q(q)
    if q == 0.0:
        return 0.0
    even = k % 2 == 0
    poly = p_even(k) if even else p_odd(k)
    prefactor = float(2 ** (2 * k - 1)) if even else 1.0
    acc = 0.0
    x = q
    step = q * q
    for _ in range(_MAX_TERMS):
        denom = (1.0 - x) if even else (1.0 - x * x)
        term = prefactor * x * poly.evaluate(x) / denom ** (2 * k)
        acc += term
        if term < _REL_STOP * acc:
            break
        x *= step
    return acc


def _target_rational(check: str, k: int) -> Fraction:
    """Exact rational part of the limit target (the pi^{2k} factor excluded).

    qgamma: 4^{-k}. zeta_recovery: d_k / 4^k, assembled from the exact even
    zeta value as 2^{2k-1} (2k-1)! (1 - 4^{-k}) zeta(2k) / pi^{2k}.
    """
    if check == "qgamma":
        return Fraction(1, 4**k)
    rat = (
        Fraction(2 ** (2 * k - 1) * factorial(2 * k - 1))
        * (1 - Fraction(1, 4**k))
        * zeta_even_exact(k)
    )
    return rat


def qgamma_limit_check(k: int, q_points: Sequence[float] | None = None) -> LimitReport:
    """Evaluate (1-q)^{2k} times the psi-type quotient to the 4k-th power along
    the q grid and compare against pi^{2k} / 4^k."""
    _check_k(k)
    qs = _check_q_points(q_points)
    target = float(_target_rational("qgamma", k)) * math.pi ** (2 * k)
    lhs = [(1.0 - q) ** (2 * k) * psi_quotient_float(q, 4 * k) for q in qs]
    rel = [abs(v - target) / abs(target) for v in lhs]
    return LimitReport(
        check="qgamma",
        k=k,
        q_points=list(qs),
        lhs_values=lhs,
        rhs_values=[target] * len(qs),
        target=target,
        relative_errors=rel,
        converging=_monotone_decreasing(rel),
    )


def zeta_recovery_check(k: int, q_points: Sequence[float] | None = None) -> LimitReport:
    """Evaluate the normalized Lambert sum and the normalized product side along
    the q grid; both tend to d_k pi^{2k} / 4^k.

    The normalizer is (1-q)^{2k} for even k and (1-q^2)^{2k} for odd k, which
    is what makes the two parities share one target.
    """
    _check_k(k)
    qs = _check_q_points(q_points)
    rat = _target_rational("zeta_recovery", k)
    assert rat == d_constant(k) / 4**k  # the zeta route must match the d_k route
    target = float(rat) * math.pi ** (2 * k)
    dk = float(d_constant(k))
    lhs = []
    rhs = []
    for q in qs:
        if k % 2 == 0:
            mult = (1.0 - q) ** (2 * k)
            prod = dk * q ** (k / 2) * psi_quotient_float(q, 4 * k)
        else:
            mult = (1.0 - q * q) ** (2 * k)
            prod = dk * q**k * psi_quotient_float(q * q, 4 * k)
        lhs.append(mult * lambert_sum_float(k, q))
        rhs.append(mult * prod)
    rel = [abs(v - target) / abs(target) for v in lhs]
    return LimitReport(
        check="zeta_recovery",
        k=k,
        q_points=list(qs),
        lhs_values=lhs,
        rhs_values=rhs,
        target=target,
        relative_errors=rel,
        converging=_monotone_decreasing(rel),
    )


def _monotone_decreasing(errs: Sequence[float]) -> bool:
    return all(b < a for a, b in zip(errs, errs[1:]))


def _check_k(k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive int, got {k!r}")


def _check_q(q: float) -> None:
    if not 0.0 <= q < 1.0:
        raise ValueError(f"q must lie in [0, 1), got {q!r}")


def _check_q_points(q_points: Sequence[float] | None) -> list[float]:
    qs = list(default_q_points() if q_points is None else q_points)
    if not qs:
        raise ValueError("need at least one q point")
    for q in qs:
        _check_q(float(q))
    if any(b <= a for a, b in zip(qs, qs[1:])):
        raise ValueError(f"q points must be strictly increasing, got {qs!r}")
    return [float(q) for q in qs]
