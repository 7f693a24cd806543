"""Polynomial families against golden tables and independent constructions.

The golden integer tables for k = 1..5 are frozen reference data; the two
routes to the even polynomial (table-based and direct expansion) check each
other, and the odd family is pinned through its published factored forms.
"""

from fractions import Fraction
from math import factorial

import pytest

from qzeta.qpoly import (
    CoefficientTables,
    IntPolynomial,
    a_table,
    b_table,
    coefficient_tables,
    odd_cofactor,
    p_even,
    p_odd,
    q_even_direct,
    q_odd,
)
from qzeta.series import QSeries

GOLDEN_A = {
    1: [-1, -1],
    2: [-1, -7, -12, -6],
    3: [-1, -31, -180, -390, -360, -120],
    4: [-1, -127, -1932, -10206, -25200, -31920, -20160, -5040],
    5: [-1, -511, -18660, -204630, -1020600, -2739240, -4233600, -3780000, -1814400, -362880],
}

GOLDEN_B = {
    1: [-1],
    2: [-1, 4, -1],
    3: [-1, 26, -66, 26, -1],
    4: [-1, 120, -1191, 2416, -1191, 120, -1],
    5: [-1, 502, -14608, 88234, -156190, 88234, -14608, 502, -1],
}

GOLDEN_P_EVEN = {
    1: [1],
    2: [1, 4, 1],
    3: [1, 26, 66, 26, 1],
    4: [1, 120, 1191, 2416, 1191, 120, 1],
    5: [1, 502, 14608, 88234, 156190, 88234, 14608, 502, 1],
}

# the odd-family reference values, in their published factored forms
S_8 = IntPolynomial(
    [1, 19672, 1736668, 19971304, 49441990, 19971304, 1736668, 19672, 1]
)
GOLDEN_P_ODD = {
    1: IntPolynomial([1, 0, 1]),
    3: IntPolynomial([1, 0, 1])
    * IntPolynomial([1, 0, 236, 0, 1446, 0, 236, 0, 1]),
    5: IntPolynomial([1, 0, 1]) * S_8.stretch(2),
}
GOLDEN_P_ODD_10_EXPANDED = [1, 0, 237, 0, 1682, 0, 1682, 0, 237, 0, 1]


# -- IntPolynomial basics ------------------------------------------------------


def test_trailing_zeros_are_stripped():
    p = IntPolynomial([1, 2, 0, 0])
    assert p.degree == 1
    assert p.coeffs == (1, 2)
    assert IntPolynomial([0, 0]).is_zero()
    assert IntPolynomial([]).degree == -1


def test_coefficients_must_be_ints():
    with pytest.raises(ValueError):
        IntPolynomial([1, 2.5])
    with pytest.raises(ValueError):
        IntPolynomial([Fraction(1, 2)])
    with pytest.raises(ValueError):
        IntPolynomial([True])


def test_coefficient_past_degree_is_zero():
    p = IntPolynomial([3, 1])
    assert p.coefficient(5) == 0
    with pytest.raises(IndexError):
        p.coefficient(-1)


def test_arithmetic_small_cases():
    p = IntPolynomial([1, 1])
    q = IntPolynomial([1, -1])
    assert (p * q).coeffs == (1, 0, -1)
    assert (p + q).coeffs == (2,)
    assert (p - q).coeffs == (0, 2)
    assert (p**3).coeffs == (1, 3, 3, 1)
    assert (2 * p).coeffs == (2, 2)
    assert (-p).coeffs == (-1, -1)
    assert (p * IntPolynomial.zero()).is_zero()


def test_evaluate_exact_and_float():
    p = IntPolynomial([1, 4, 1])
    assert p.evaluate(1) == 6
    assert p.evaluate(Fraction(1, 2)) == Fraction(13, 4)
    assert p.evaluate(0.5) == 3.25
    assert IntPolynomial.zero().evaluate(7) == 0


def test_stretch_and_shift():
    p = IntPolynomial([1, 2, 3])
    assert p.stretch(2).coeffs == (1, 0, 2, 0, 3)
    assert p.shift(2).coeffs == (0, 0, 1, 2, 3)
    assert p.stretch(1) == p
    with pytest.raises(ValueError):
        p.stretch(0)


def test_format_renders_ascending():
    assert IntPolynomial([1, 4, 1]).format("z") == "1 + 4z + z^2"
    assert IntPolynomial([1, 0, 1]).format("z") == "1 + z^2"
    assert IntPolynomial([0, 1]).format("z") == "z"
    assert IntPolynomial([-1, -2]).format("z") == "-1 - 2z"
    assert IntPolynomial.zero().format() == "0"


def test_as_qseries_pads_to_order():
    s = IntPolynomial([1, 4, 1]).as_qseries(5)
    assert isinstance(s, QSeries)
    assert s.coeffs == (1, 4, 1, 0, 0, 0)
    with pytest.raises(ValueError):
        IntPolynomial([1, 4, 1]).as_qseries(1)


def test_json_round_trip():
    p = IntPolynomial([1, -120, 1191])
    d = p.to_json_dict()
    assert d == {"degree": 2, "coeffs": ["1", "-120", "1191"]}
    assert IntPolynomial.from_json_dict(d) == p
    with pytest.raises(ValueError):
        IntPolynomial.from_json_dict({"degree": 5, "coeffs": ["1"]})


# -- golden tables ----------------------------------------------------------------


def test_a_tables_match_golden():
    for k, expected in GOLDEN_A.items():
        assert a_table(k) == expected, k


def test_b_tables_match_golden():
    for k, expected in GOLDEN_B.items():
        assert b_table(k) == expected, k


def test_p_even_matches_golden():
    for k, expected in GOLDEN_P_EVEN.items():
        assert list(p_even(k).coeffs) == expected, k


def test_p_odd_matches_golden_factored_forms():
    for k, expected in GOLDEN_P_ODD.items():
        assert p_odd(k) == expected, k
    assert list(p_odd(3).coeffs) == GOLDEN_P_ODD_10_EXPANDED


def test_odd_cofactor_recovers_published_factors():
    assert odd_cofactor(1) == IntPolynomial([1])
    assert odd_cofactor(3) == IntPolynomial([1, 236, 1446, 236, 1])
    assert odd_cofactor(5) == S_8


def test_odd_cofactor_factorization_holds_on_computed_range():
    one_plus_z2 = IntPolynomial([1, 0, 1])
    for k in (1, 3, 5, 7, 9, 11):
        s = odd_cofactor(k)
        assert one_plus_z2 * s.stretch(2) == p_odd(k), k
        assert s.is_palindromic(), k
        assert s.degree == 2 * k - 2, k


# -- structural properties -----------------------------------------------------------


def test_degrees():
    for k in range(1, 9):
        assert p_even(k).degree == 2 * k - 2, k
        assert q_even_direct(k).degree == 2 * k - 1, k
    for k in (1, 3, 5, 7):
        assert p_odd(k).degree == 4 * k - 2, k
        assert q_odd(k).degree == 4 * k - 1, k


def test_even_cross_construction_to_k_twelve():
    # table route times z == direct expansion route
    for k in range(1, 13):
        assert p_even(k).shift(1) == q_even_direct(k), k


def test_odd_cross_construction():
    for k in (1, 3, 5, 7, 9, 11):
        assert q_odd(k) == p_odd(k).shift(1), k


def test_values_at_one_are_factorials():
    for k in range(1, 13):
        assert p_even(k).evaluate(1) == factorial(2 * k - 1), k
    for k in (1, 3, 5, 7, 9, 11):
        assert p_odd(k).evaluate(1) == 2 ** (2 * k - 1) * factorial(2 * k - 1), k


def test_families_are_palindromic_and_monic_on_computed_range():
    # observed facts, asserted over the range we compute; nothing assumes them
    for k in range(1, 13):
        pe = p_even(k)
        assert pe.is_palindromic(), k
        assert pe.coefficient(pe.degree) == 1, k
        assert pe.coefficient(0) == 1, k
    for k in (1, 3, 5, 7, 9, 11):
        po = p_odd(k)
        assert po.is_palindromic(), k
        assert po.coefficient(po.degree) == 1, k


def test_generating_function_check():
    # z p_even(k)(z) / (1-z)^{2k} == sum_j j^{2k-1} z^j, checked to order 60
    order = 60
    for k in range(1, 7):
        numer = q_even_direct(k).as_qseries(order)
        denom_inv = (QSeries([1, -1] + [0] * (order - 1)) ** (2 * k)).inverse()
        lhs = numer * denom_inv
        rhs = QSeries([j ** (2 * k - 1) if j else 0 for j in range(order + 1)])
        assert lhs == rhs, k


def test_odd_family_rejects_even_k():
    with pytest.raises(ValueError):
        p_odd(2)
    with pytest.raises(ValueError):
        q_odd(4)
    with pytest.raises(ValueError):
        p_even(0)


def test_coefficient_tables_bundle():
    for k in range(1, 9):
        tables = coefficient_tables(k)
        assert isinstance(tables, CoefficientTables)
        assert tables.k == k
        assert tables.a == tuple(a_table(k))
        assert tables.b == tuple(b_table(k))
        assert len(tables.a) == 2 * k
        assert len(tables.b) == 2 * k - 1
    with pytest.raises(ValueError):
        coefficient_tables(0)
    # the bundle is a frozen value object
    with pytest.raises(Exception):
        coefficient_tables(2).k = 3
