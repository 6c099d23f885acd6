"""Exact and Monte Carlo evaluation of signed Selberg-type matrix integrals,
Grassmannian angle densities and invariant Crofton pairings."""

from croftint._core import (  # noqa: F401
    D_eval,
    D_mc,
    angle_density,
    centroaffine_pairing,
    complement_spectrum,
    constantine_pole_orders,
    ellipsoid_projection_volume,
    f_closed,
    f_oracle,
    f_recursive,
    gamma_pole_order,
    haar_spectrum,
    mu_c_vanishing,
    projection_mc,
    q2_basis_certificate,
    residue_identity_check,
    selberg_I,
    selberg_I_eval,
    u_eval,
    u_residue,
    universal_pairing,
)

__all__ = [
    "D_eval",
    "D_mc",
    "angle_density",
    "centroaffine_pairing",
    "complement_spectrum",
    "constantine_pole_orders",
    "ellipsoid_projection_volume",
    "f_closed",
    "f_oracle",
    "f_recursive",
    "gamma_pole_order",
    "haar_spectrum",
    "mu_c_vanishing",
    "projection_mc",
    "q2_basis_certificate",
    "residue_identity_check",
    "selberg_I",
    "selberg_I_eval",
    "u_eval",
    "u_residue",
    "universal_pairing",
]
