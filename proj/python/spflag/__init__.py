"""Symplectic FFLV polytopes, degree cones, Pluecker ideals and PBW tableaux."""

from ._spflag import (
    Error,
    UsageError,
    c_cone,
    chart_polynomial,
    degenerate_chart,
    generators,
    hilbert_count,
    initial_ideal,
    interior_point,
    k_cone,
    lattice_points,
    membership,
    rho,
    tableaux,
    tropical_point,
    verify,
    weyl_dim,
)

__all__ = [
    "Error",
    "UsageError",
    "c_cone",
    "chart_polynomial",
    "degenerate_chart",
    "generators",
    "hilbert_count",
    "initial_ideal",
    "interior_point",
    "k_cone",
    "lattice_points",
    "membership",
    "rho",
    "tableaux",
    "tropical_point",
    "verify",
    "weyl_dim",
]
