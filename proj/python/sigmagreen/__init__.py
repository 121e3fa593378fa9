"""Cone calculus, conformal Schouten tensors and radial Green's functions."""

from ._sigmagreen import (
    Cone,
    DefiningFunction,
    __version__,
    bishop_gromov_ratio,
    bubble_kappa,
    bvn_decompose,
    continuation,
    convergence_study,
    divergence_residual,
    eigen_wrt,
    exact_family_value,
    inf_convolution,
    mass_constant,
    midpoint_hull_check,
    mu_plus,
    newton_tensor,
    radial_chi,
    radial_eigenvalues,
    sigma,
    sigma_all,
    solve_regularized,
    space_form_volume,
    verify_degenerate,
    verify_supersolution,
)

__all__ = [
    "Cone",
    "DefiningFunction",
    "__version__",
    "bishop_gromov_ratio",
    "bubble_kappa",
    "bvn_decompose",
    "continuation",
    "convergence_study",
    "divergence_residual",
    "eigen_wrt",
    "exact_family_value",
    "inf_convolution",
    "mass_constant",
    "midpoint_hull_check",
    "mu_plus",
    "newton_tensor",
    "radial_chi",
    "radial_eigenvalues",
    "sigma",
    "sigma_all",
    "solve_regularized",
    "space_form_volume",
    "verify_degenerate",
    "verify_supersolution",
]
