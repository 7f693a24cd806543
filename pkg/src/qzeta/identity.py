"""Both sides of the zeta identities as exact series, and their cross-checks.

For each weight parameter k the engine builds:

  * the Lambert-type left side: for even k
        sum_{n>=0} 2^{2k-1} q^{4n+2} P(q^{4n+2}) / (1 - q^{4n+2})^{2k}
    and for odd k
        sum_{n>=0} q^{2n+1} P(q^{2n+1}) / (1 - q^{4n+2})^{2k}
    with P the matching even/odd polynomial family;
  * the divisor-sum form of the same series (modified divisor sums over
    exponents of one parity), as an independent oracle;
  * the right side: d_k q^k times the eta-type quotient
    prod ((1-q^{4n}) / (1-q^{4n-2}))^{4k}, which is the 4k-th power of the
    triangular-number series in q^2, shifted by q^k.

The difference T = LHS - RHS is the cusp correction: identically zero for
k = 1, 2, the weight-6 eta power for k = 3, and a nonzero single-parity
series with vanishing constant term beyond that. verify_theorem packages all
of the checks into a report the CLI can render.

The left side is assembled from one base series P-over-denominator expanded
once at full order, then scattered across the summand exponents; this keeps
it structurally independent of the divisor-sum oracle it is compared against.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from .exactnum import d_constant, sigma_sharp, stirling2
from .qpoly import IntPolynomial, p_even, p_odd
from .series import QSeries, eta_quotient_psi, parity_support, product_pow

__all__ = [
    "ZetaCase",
    "SeriesCheck",
    "ClosedFormRow",
    "ClosedFormReport",
    "VerificationReport",
    "zeta_case",
    "lambert_lhs_even",
    "lambert_lhs_odd",
    "lambert_lhs",
    "eisenstein_h",
    "rhs_product",
    "extract_cusp_term",
    "weight6_cusp_series",
    "t_count",
    "t_count_closed_form_check",
    "stirling_transform_check",
    "verify_theorem",
]

T_COUNT_MAX_N = 60
T_COUNT_MAX_FOURK = 16


@dataclass(frozen=True)
class ZetaCase:
    """One weight parameter k with its derived data, ready for verification."""

    k: int
    parity: str  # "even" | "odd"
    d_k: Fraction
    poly: IntPolynomial  # p_even(k) for even k, p_odd(k) for odd k
    order: int


@dataclass(frozen=True)
class SeriesCheck:
    """Outcome of one exact comparison, with the first disagreement pinned."""

    name: str
    ok: bool
    failure_exponent: int | None = None
    lhs_coefficient: str | None = None
    rhs_coefficient: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "failure_exponent": self.failure_exponent,
            "lhs_coefficient": self.lhs_coefficient,
            "rhs_coefficient": self.rhs_coefficient,
        }


@dataclass(frozen=True)
class ClosedFormRow:
    n: int
    series_coefficient: int
    closed_form_value: Fraction
    brute_force: int | None
    agree: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "series_coefficient": self.series_coefficient,
            "closed_form_value": str(self.closed_form_value),
            "brute_force": self.brute_force,
            "agree": self.agree,
        }


@dataclass
class ClosedFormReport:
    """Per-n comparison of the psi-power coefficient against its divisor-sum
    closed form, with a brute-force column where enumeration is feasible."""

    k: int
    n_max: int
    ok: bool
    first_failure_n: int | None
    rows: list[ClosedFormRow] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "n_max": self.n_max,
            "ok": self.ok,
            "first_failure_n": self.first_failure_n,
            "rows": [r.to_json_dict() for r in self.rows],
        }


@dataclass
class VerificationReport:
    """Everything verify_theorem learned about one k at one truncation order."""

    k: int
    order: int
    lhs_series_digest: str
    rhs_series_digest: str
    t_series: QSeries
    t_is_zero: bool
    t_parity: str
    first_nonzero_exponent: int | None
    status: str  # "pass" | "fail"
    failure_exponent: int | None
    checks: list[SeriesCheck] = field(default_factory=list)
    closed_form: ClosedFormReport | None = None

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "order": self.order,
            "lhs_series_digest": self.lhs_series_digest,
            "rhs_series_digest": self.rhs_series_digest,
            "t_series": self.t_series.to_json_dict(),
            "t_is_zero": self.t_is_zero,
            "t_parity": self.t_parity,
            "first_nonzero_exponent": self.first_nonzero_exponent,
            "status": self.status,
            "failure_exponent": self.failure_exponent,
            "checks": [c.to_json_dict() for c in self.checks],
            "closed_form": self.closed_form.to_json_dict() if self.closed_form else None,
        }

    def format_table(self) -> str:
        lines = [
            f"verification report  k={self.k}  order={self.order}  status={self.status.upper()}",
            f"  correction series: zero={self.t_is_zero}  parity={self.t_parity}"
            f"  first nonzero exponent={self.first_nonzero_exponent}",
            f"  lhs digest: {self.lhs_series_digest[:16]}...",
            f"  rhs digest: {self.rhs_series_digest[:16]}...",
        ]
        if self.failure_exponent is not None:
            lines.append(f"  first failing exponent: {self.failure_exponent}")
        lines.append(f"  {'check':<38} {'result':<6} detail")
        for c in self.checks:
            detail = ""
            if not c.ok and c.failure_exponent is not None:
                detail = (
                    f"q^{c.failure_exponent}: {c.lhs_coefficient} != {c.rhs_coefficient}"
                )
            lines.append(f"  {c.name:<38} {'ok' if c.ok else 'FAIL':<6} {detail}")
        if self.closed_form is not None:
            cf = self.closed_form
            lines.append(
                f"  {'count closed form (n <= %d)' % cf.n_max:<38} "
                f"{'ok' if cf.ok else 'FAIL':<6} "
                + ("" if cf.ok else f"first failure at n={cf.first_failure_n}")
            )
        return "\n".join(lines)


# -- construction ---------------------------------------------------------------


def zeta_case(k: int, order: int) -> ZetaCase:
    """Bundle the polynomial, constant, and parity for weight parameter k."""
    _check_k_order(k, order)
    if k % 2 == 0:
        poly = p_even(k)
    else:
        poly = p_odd(k)
    return ZetaCase(
        k=k,
        parity="even" if k % 2 == 0 else "odd",
        d_k=d_constant(k),
        poly=poly,
        order=order,
    )


def _scatter(base: list[int], start: int, step: int, order: int) -> list[int]:
    """Accumulate base(q^m) over m = start, start+step, ...; base[0] must be 0."""
    out = [0] * (order + 1)
    for m in range(start, order + 1, step):
        for i in range(1, order // m + 1):
            if base[i]:
                out[m * i] += base[i]
    return out


def _divided_base(numer: IntPolynomial, denom_step: int, power: int, order: int) -> list[int]:
    """Coefficients of numer(x) / (1 - x^{denom_step})^{power} to the given order."""
    base = [0] * (order + 1)
    for i, c in enumerate(numer.coeffs):
        if i > order:
            break
        base[i] = c
    for _ in range(power):
        for i in range(denom_step, order + 1):
            base[i] += base[i - denom_step]
    return base


def lambert_lhs_even(k: int, order: int) -> QSeries:
    """Left side for even k: 2^{2k-1} sum_{n>=0} x P(x) / (1-x)^{2k} at x = q^{4n+2},
    P = p_even(k). Supported on even exponents only."""
    _check_k_order(k, order)
    if k % 2 != 0:
        raise ValueError(f"lambert_lhs_even needs even k, got {k}")
    base = _divided_base(p_even(k).shift(1), 1, 2 * k, order)
    out = _scatter(base, 2, 4, order)
    scale = 2 ** (2 * k - 1)
    return QSeries([scale * c for c in out])


def lambert_lhs_odd(k: int, order: int) -> QSeries:
    """Left side for odd k: sum_{n>=0} w P(w) / (1-w^2)^{2k} at w = q^{2n+1},
    P = p_odd(k). Supported on odd exponents only."""
    _check_k_order(k, order)
    if k % 2 != 1:
        raise ValueError(f"lambert_lhs_odd needs odd k, got {k}")
    base = _divided_base(p_odd(k).shift(1), 2, 2 * k, order)
    out = _scatter(base, 1, 2, order)
    return QSeries(out)


def lambert_lhs(k: int, order: int) -> QSeries:
    """Parity dispatch over the two left-side constructors."""
    return lambert_lhs_even(k, order) if k % 2 == 0 else lambert_lhs_odd(k, order)


def eisenstein_h(k: int, order: int) -> QSeries:
    """Divisor-sum form of the left side: sum of sigma_sharp(2k-1, n) q^n over
    n >= 1 of the same parity as k (even k -> even exponents)."""
    _check_k_order(k, order)
    start = 2 if k % 2 == 0 else 1
    cs = [0] * (order + 1)
    for n in range(start, order + 1, 2):
        cs[n] = sigma_sharp(2 * k - 1, n)
    return QSeries(cs)


def rhs_product(k: int, order: int) -> QSeries:
    """Right side: d_k q^k prod_{n>=1} ((1-q^{4n}) / (1-q^{4n-2}))^{4k}.

    Built as the 4k-th power of the triangular-number series in q^2 (the eta
    quotient route), shifted by q^k and scaled by d_k.
    """
    _check_k_order(k, order)
    psi_sq = eta_quotient_psi(order).substitute_power(2)
    return (psi_sq ** (4 * k)).shift(k).scale(d_constant(k))


def extract_cusp_term(k: int, order: int) -> QSeries:
    """The correction series T = LHS - RHS at truncation order `order`."""
    return lambert_lhs(k, order) - rhs_product(k, order)


def weight6_cusp_series(order: int) -> QSeries:
    """q prod_{n>=1} (1-q^{2n})^{12}: the reference value of the k = 3 correction."""
    if order < 1:
        raise ValueError(f"order must be at least 1, got {order}")
    c = [0] * (order + 1)
    c[0] = 1
    for n in range(1, order // 2 + 1):
        for _ in range(12):
            for i in range(order, 2 * n - 1, -1):
                c[i] -= c[i - 2 * n]
    return QSeries(c).shift(1)


# -- representation counts -------------------------------------------------------


def t_count(fourk: int, n: int) -> int:
    """Number of ordered fourk-tuples of triangular numbers (0 allowed) summing
    to n, by direct enumeration over part multiplicities.

    Capped at fourk <= 16 and n <= 60; beyond that the closed form is the only
    practical route and this brute-force oracle refuses rather than stall.
    """
    if not isinstance(fourk, int) or fourk < 4 or fourk % 4 != 0:
        raise ValueError(f"tuple length must be a positive multiple of 4, got {fourk!r}")
    if fourk > T_COUNT_MAX_FOURK:
        raise ValueError(f"brute-force enumeration capped at {T_COUNT_MAX_FOURK} slots, got {fourk}")
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a non-negative int, got {n!r}")
    if n > T_COUNT_MAX_N:
        raise ValueError(f"brute-force enumeration capped at n <= {T_COUNT_MAX_N}, got {n}")
    tris = []
    j = 1
    while j * (j + 1) // 2 <= n:
        tris.append(j * (j + 1) // 2)
        j += 1
    tris.reverse()

    @lru_cache(maxsize=None)
    def go(idx: int, rem: int, slots: int) -> int:
        if rem == 0:
            return 1  # remaining slots all hold 0
        if idx == len(tris) or slots == 0:
            return 0
        v = tris[idx]
        total = 0
        for c in range(min(slots, rem // v) + 1):
            total += comb(slots, c) * go(idx + 1, rem - c * v, slots - c)
        return total

    result = go(0, n, fourk)
    go.cache_clear()
    return result


def t_count_closed_form_check(
    k: int,
    n_max: int,
    order: int | None = None,
    brute_limit: int = 30,
) -> ClosedFormReport:
    """Compare, for n = 1 .. n_max, the coefficient of q^n in the 4k-th power
    of the triangular-number series against its closed form
    (sigma_sharp(2k-1, 2n+k) - a(2n+k)) / d_k, where a(.) reads off the
    extracted correction series; brute-force counts join the comparison where
    the enumeration cap allows."""
    _check_k_order(k, 1)
    if n_max < 1:
        raise ValueError(f"n_max must be at least 1, got {n_max}")
    needed = 2 * n_max + k
    if order is None:
        order = needed
    if order < needed:
        raise ValueError(f"order {order} too small: closed form at n_max={n_max} reads exponent {needed}")
    psi_pow = product_pow(2, (2, 1), 4 * k, n_max)
    t_series = extract_cusp_term(k, order)
    dk = d_constant(k)
    rows: list[ClosedFormRow] = []
    first_failure = None
    for n in range(1, n_max + 1):
        sc = psi_pow.coefficient(n)
        cf = (sigma_sharp(2 * k - 1, 2 * n + k) - t_series.coefficient(2 * n + k)) / dk
        bf = None
        if 4 * k <= T_COUNT_MAX_FOURK and n <= min(brute_limit, T_COUNT_MAX_N):
            bf = t_count(4 * k, n)
        agree = cf == sc and (bf is None or bf == sc)
        if not agree and first_failure is None:
            first_failure = n
        rows.append(
            ClosedFormRow(
                n=n,
                series_coefficient=int(sc),
                closed_form_value=Fraction(cf),
                brute_force=bf,
                agree=agree,
            )
        )
    return ClosedFormReport(
        k=k, n_max=n_max, ok=first_failure is None, first_failure_n=first_failure, rows=rows
    )


# -- auxiliary identities ----------------------------------------------------------


def stirling_transform_check(l: int, order: int) -> SeriesCheck:
    """Check sum_{n>=1} n^l q^n == sum_{j=0}^{l} j! S(l, j) q^j / (1-q)^{j+1}
    exactly to the given order."""
    if not isinstance(l, int) or l < 1:
        raise ValueError(f"power l must be a positive int, got {l!r}")
    _check_order_only(order)
    direct = QSeries([n**l if n else 0 for n in range(order + 1)])
    acc = [0] * (order + 1)
    fact = 1
    for j in range(l + 1):
        if j:
            fact *= j
        w = fact * stirling2(l, j)
        if w == 0:
            continue
        term = [0] * (order + 1)
        if j <= order:
            term[j] = w
        for _ in range(j + 1):
            for i in range(1, order + 1):
                term[i] += term[i - 1]
        for i in range(order + 1):
            acc[i] += term[i]
    return _compare(f"power_sum_vs_stirling_l{l}", direct, QSeries(acc))


# -- verification ------------------------------------------------------------------


def verify_theorem(k: int, order: int) -> VerificationReport:
    """Run the full identity check for one k: left side against its divisor-sum
    oracle, correction-series classification, the known closed forms for
    k <= 3, parity bookkeeping, and the representation-count closed form.

    Distinct k share no mutable state, so calls may run in parallel.
    """
    _check_k_order(k, order)
    if order < 4 * k:
        raise ValueError(f"order {order} too small for k={k}: need at least {4 * k}")
    checks: list[SeriesCheck] = []

    lhs = lambert_lhs(k, order)
    h = eisenstein_h(k, order)
    checks.append(_compare("lambert_vs_divisor_sums", lhs, h))

    rhs = rhs_product(k, order)
    t = lhs - rhs

    t_parity = parity_support(t)
    expected_parity = "even" if k % 2 == 0 else "odd"
    checks.append(
        SeriesCheck(
            name="correction_parity_support",
            ok=t_parity in (expected_parity, "zero"),
        )
    )
    checks.append(
        SeriesCheck(name="correction_constant_term_zero", ok=t.coefficient(0) == 0)
    )

    if k in (1, 2):
        checks.append(_compare("correction_vanishes", t, QSeries.zero(order)))
    elif k == 3:
        checks.append(_compare("correction_is_weight6_eta_power", t, weight6_cusp_series(order)))

    n_max = max(1, min(10, (order - k) // 2))
    closed_form = t_count_closed_form_check(k, n_max, order=order, brute_limit=6)

    failure_exponent = None
    for c in checks:
        if not c.ok and c.failure_exponent is not None:
            failure_exponent = c.failure_exponent
            break
    status = "pass" if all(c.ok for c in checks) and closed_form.ok else "fail"
    return VerificationReport(
        k=k,
        order=order,
        lhs_series_digest=lhs.digest(),
        rhs_series_digest=rhs.digest(),
        t_series=t,
        t_is_zero=t.is_zero(),
        t_parity=t_parity,
        first_nonzero_exponent=t.first_nonzero_exponent(),
        status=status,
        failure_exponent=failure_exponent,
        checks=checks,
        closed_form=closed_form,
    )


# -- helpers -----------------------------------------------------------------------


def _compare(name: str, lhs: QSeries, rhs: QSeries) -> SeriesCheck:
    n = min(lhs.order, rhs.order)
    for i in range(n + 1):
        if lhs.coefficient(i) != rhs.coefficient(i):
            return SeriesCheck(
                name=name,
                ok=False,
                failure_exponent=i,
                lhs_coefficient=str(lhs.coefficient(i)),
                rhs_coefficient=str(rhs.coefficient(i)),
            )
    return SeriesCheck(name=name, ok=True)


def _check_k_order(k: int, order: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive int, got {k!r}")
    _check_order_only(order)


def _check_order_only(order: int) -> None:
    if not isinstance(order, int) or order < 0:
        raise ValueError(f"truncation order must be a non-negative int, got {order!r}")
