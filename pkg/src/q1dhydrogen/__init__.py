"""Bound states and information functionals of the half-line (Q1D) and
full-line (1D) hydrogen atoms, with quadrature-based transform oracles
that decide which closed-form momentum function belongs to which state.
"""

from .information import (
    BBM_BOUND,
    FISHER_BOUND,
    BbmVerdict,
    EntropyRow,
    FisherPair,
    bbm_check,
    density_norm,
    entropy_table,
    fisher_information,
    fisher_pair,
    orthonormality_check,
    shannon_entropy,
)
from .quadrature import (
    IntegrationRequest,
    NonConvergence,
    QuadratureResult,
    integrate,
    integrate_finite,
    integrate_momentum_compact,
    map_half_line,
)
from .specfun import chebyshev_u, hyp1f1_terminating, laguerre
from .transforms import (
    CorrespondenceReport,
    adjudicate,
    cosine_transform,
    default_grid,
    fullline_ft_by_parity,
    halfline_ft,
    parseval_check,
    sine_transform,
)
from .wavefun import (
    DensitySpec,
    energy,
    gamma_lorentz,
    gamma_q1d,
    nodes_psi,
    phi_1d,
    phi_lorentz,
    phi_lorentz_imag,
    phi_q1d_cheb,
    psi_1d,
    psi_q1d,
    rho_1d,
    rho_q1d,
)

__version__ = "0.1.0"

__all__ = [
    "BBM_BOUND",
    "FISHER_BOUND",
    "BbmVerdict",
    "CorrespondenceReport",
    "DensitySpec",
    "EntropyRow",
    "FisherPair",
    "IntegrationRequest",
    "NonConvergence",
    "QuadratureResult",
    "adjudicate",
    "bbm_check",
    "chebyshev_u",
    "cosine_transform",
    "default_grid",
    "density_norm",
    "energy",
    "entropy_table",
    "fisher_information",
    "fisher_pair",
    "fullline_ft_by_parity",
    "gamma_lorentz",
    "gamma_q1d",
    "halfline_ft",
    "hyp1f1_terminating",
    "integrate",
    "integrate_finite",
    "integrate_momentum_compact",
    "laguerre",
    "map_half_line",
    "nodes_psi",
    "orthonormality_check",
    "parseval_check",
    "phi_1d",
    "phi_lorentz",
    "phi_lorentz_imag",
    "phi_q1d_cheb",
    "psi_1d",
    "psi_q1d",
    "rho_1d",
    "rho_q1d",
    "shannon_entropy",
    "sine_transform",
]
