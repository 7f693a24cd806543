"""Exact q-series engine for the even zeta values.

The package builds the polynomial families attached to each weight parameter
k, assembles both sides of the corresponding q-identities as exactly
truncated rational power series, extracts and classifies the cusp-type
correction term, ties the coefficients to triangular-number representation
counts, and checks the classical constants re-emerge numerically as q -> 1-.

Layering (no cycles): exactnum -> series -> qpoly -> identity -> numerics,
with cli and plots on top.
"""

from .exactnum import (
    bernoulli,
    d_constant,
    sigma,
    sigma_sharp,
    stirling2,
    zeta_even_exact,
)
from .identity import (
    ClosedFormReport,
    SeriesCheck,
    VerificationReport,
    ZetaCase,
    eisenstein_h,
    extract_cusp_term,
    lambert_lhs,
    lambert_lhs_even,
    lambert_lhs_odd,
    rhs_product,
    stirling_transform_check,
    t_count,
    t_count_closed_form_check,
    verify_theorem,
    weight6_cusp_series,
    zeta_case,
)
from .numerics import (
    LimitReport,
    default_q_points,
    qgamma_limit_check,
    zeta_recovery_check,
)
from .qpoly import (
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
from .series import (
    QSeries,
    eta_quotient_psi,
    inverse,
    mul,
    parity_support,
    product_pow,
    substitute_power,
    theta_psi,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # exactnum
    "stirling2",
    "bernoulli",
    "d_constant",
    "sigma",
    "sigma_sharp",
    "zeta_even_exact",
    # series
    "QSeries",
    "mul",
    "inverse",
    "substitute_power",
    "parity_support",
    "theta_psi",
    "eta_quotient_psi",
    "product_pow",
    # qpoly
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
    # identity
    "ZetaCase",
    "SeriesCheck",
    "ClosedFormReport",
    "VerificationReport",
    "zeta_case",
    "lambert_lhs",
    "lambert_lhs_even",
    "lambert_lhs_odd",
    "eisenstein_h",
    "rhs_product",
    "extract_cusp_term",
    "weight6_cusp_series",
    "t_count",
    "t_count_closed_form_check",
    "stirling_transform_check",
    "verify_theorem",
    # numerics
    "LimitReport",
    "default_q_points",
    "qgamma_limit_check",
    "zeta_recovery_check",
]
