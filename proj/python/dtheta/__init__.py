"""Numerical checks of Dedekind-zeta theta relations."""

from ._dtheta import (
    DomainError,
    Error,
    Field,
    InverseReport,
    NumericError,
    ParseError,
    ThetaReport,
    UnsupportedError,
    ValidationError,
    big_xi,
    check_inverse_theta,
    check_theta,
    dedekind_zeta,
    dgv_check,
    field,
    hlr_check,
    ideal_coeffs,
    load_zeros,
    moebius_coeffs,
    phi_residual,
    riemann_zeta,
    scan_zeros,
    w_theta,
    z_shifted,
    z_tilde,
)

__all__ = [name for name in dir() if not name.startswith("_")]
