"""Biharmonic curves and submanifolds in spheres and CP^n."""

from ._core import (
    DomainError,
    Error,
    StructuralError,
    classify_helix_cp2,
    clifford_minus4_solve,
    clifford_tension_bitension,
    curve_position,
    curve_residuals,
    frenet,
    hopf_vector_field,
    hypersurface_predicates,
    j_apply,
    run_cli,
    solve_order4_helix,
    sphere_bundle_analyze,
    sphere_bundle_minus4_roots,
    torus_extrinsic_oracle,
    zhang_residual,
    zhang_solve_two_block,
)

__all__ = [
    "DomainError",
    "Error",
    "StructuralError",
    "classify_helix_cp2",
    "clifford_minus4_solve",
    "clifford_tension_bitension",
    "curve_position",
    "curve_residuals",
    "frenet",
    "hopf_vector_field",
    "hypersurface_predicates",
    "j_apply",
    "run_cli",
    "solve_order4_helix",
    "sphere_bundle_analyze",
    "sphere_bundle_minus4_roots",
    "torus_extrinsic_oracle",
    "zhang_residual",
    "zhang_solve_two_block",
]
