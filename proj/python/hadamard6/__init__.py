"""Order-6 complex Hadamard matrices from the three-parameter block-reducible family.

The heavy lifting happens in the compiled extension; this package re-exports
its public surface.
"""

from ._core import (
    EquivalenceReport,
    HadamardReport,
    Tolerance,
    __version__,
    are_equivalent,
    build_degenerate,
    build_halfpi_limit,
    build_matrix,
    build_theta0_limit,
    build_theta0_z3_anchor,
    classify_regime,
    commutation_defect,
    curve_a,
    curve_b,
    d6_member,
    dephase,
    dephased_has_minus_one,
    fingerprint,
    fourier,
    fourier_transposed,
    h2_reducible,
    is_hadamard,
    k6_subfamily_member,
    read_matrix,
    solve_z_quad,
    theta0_z2_squared,
    write_matrix,
)

__all__ = [
    "EquivalenceReport",
    "HadamardReport",
    "Tolerance",
    "__version__",
    "are_equivalent",
    "build_degenerate",
    "build_halfpi_limit",
    "build_matrix",
    "build_theta0_limit",
    "build_theta0_z3_anchor",
    "classify_regime",
    "commutation_defect",
    "curve_a",
    "curve_b",
    "d6_member",
    "dephase",
    "dephased_has_minus_one",
    "fingerprint",
    "fourier",
    "fourier_transposed",
    "h2_reducible",
    "is_hadamard",
    "k6_subfamily_member",
    "read_matrix",
    "solve_z_quad",
    "theta0_z2_squared",
    "write_matrix",
]
