"""Shannon entropies, entropy-sum inequality checks, Fisher information
and orthonormality overlaps for the bound-state densities.

The position/momentum entropy sum of conjugate one-dimensional densities
obeys the Bialynicki-Birula--Mycielski (BBM) bound

    S_rho + S_gamma >= 1 + ln(pi),

and the corresponding Fisher quantities obey the product bound
I_rho * I_gamma >= 4.  This module computes every ingredient by
quadrature: entropies as -int d ln d (with d ln d -> 0 where the density
underflows), Fisher information as int (d')^2 / d with the analytic
derivative carried by each ``DensitySpec``.  Both integrands are
singular at density nodes -- logarithmically for the entropy, removably
for Fisher -- so the node lists are passed to the engine as split
points and never sampled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .quadrature import (
    DEFAULT_MAX_EVALUATIONS,
    IntegrationRequest,
    NonConvergence,
    integrate,
    integrate_momentum_compact,
)
from .wavefun import DensitySpec, gamma_lorentz, gamma_q1d, phi_lorentz, phi_q1d_cheb, psi_q1d, rho_q1d

__all__ = [
    "BBM_BOUND",
    "FISHER_BOUND",
    "EntropyRow",
    "BbmVerdict",
    "FisherPair",
    "density_norm",
    "shannon_entropy",
    "entropy_table",
    "bbm_check",
    "fisher_information",
    "fisher_pair",
    "orthonormality_check",
]

BBM_BOUND = 1.0 + math.log(math.pi)
FISHER_BOUND = 4.0

# below this the density is treated as exactly zero: t*ln(t) -> 0
_DENSITY_FLOOR = 1e-300


@dataclass(frozen=True)
class EntropyRow:
    """Entropies of one state: position, both momentum choices, and sums.

    ``s_gamma_o`` uses the full-line Lorentzian-squared momentum density,
    ``s_gamma_s`` the half-line trigonometric one; the sums are exact
    float sums of the stored columns.
    """

    n: int
    s_rho: float
    s_gamma_o: float
    s_gamma_s: float
    sum_o: float
    sum_s: float


@dataclass(frozen=True)
class BbmVerdict:
    entropy_sum: float
    bound: float
    satisfied: bool


@dataclass(frozen=True)
class FisherPair:
    i_rho: float
    i_gamma: float
    product: float


def _neg_x_log_x(values: np.ndarray) -> np.ndarray:
    out = np.zeros_like(values)
    mask = values > _DENSITY_FLOOR
    out[mask] = -values[mask] * np.log(values[mask])
    return out


def _compact_momentum(d: DensitySpec, pointwise, abs_tol: float, max_evaluations: int):
    """Integrate ``pointwise(p)`` over [0, inf) via u = arctan(scale*p)."""
    a = d.arctan_scale

    def in_u(u):
        u = np.asarray(u, dtype=float)
        p = np.tan(u) / a
        sec2 = 1.0 / np.cos(u) ** 2
        return pointwise(p) * sec2 / a

    return integrate_momentum_compact(int(round(a)), in_u, abs_tol=abs_tol,
                                      max_evaluations=max_evaluations)


def density_norm(d: DensitySpec, abs_tol: float = 1e-9,
                 max_evaluations: int = DEFAULT_MAX_EVALUATIONS) -> float:
    """Integral of the density over its domain; 1 for a normalized one."""

    def integrand(x):
        return np.asarray(d.evaluate(np.asarray(x, dtype=float)), dtype=float)

    if d.domain == "half-line" and d.arctan_scale is not None:
        res = _compact_momentum(d, integrand, abs_tol, max_evaluations)
    else:
        res = integrate(IntegrationRequest(integrand, d.domain, scale=d.scale,
                                           abs_tol=abs_tol, singular_points=d.nodes,
                                           max_evaluations=max_evaluations))
    return res.value


def shannon_entropy(d: DensitySpec, abs_tol: float = 1e-6,
                    max_evaluations: int = DEFAULT_MAX_EVALUATIONS) -> float:
    """Differential entropy -int d ln d over the density's domain, in nats."""

    def integrand(x):
        x = np.asarray(x, dtype=float)
        return _neg_x_log_x(np.asarray(d.evaluate(x), dtype=float))

    if d.domain == "half-line" and d.arctan_scale is not None:
        res = _compact_momentum(d, integrand, abs_tol, max_evaluations)
    else:
        res = integrate(IntegrationRequest(integrand, d.domain, scale=d.scale,
                                           abs_tol=abs_tol, singular_points=d.nodes,
                                           max_evaluations=max_evaluations))
    return res.value


def fisher_information(d: DensitySpec, abs_tol: float = 1e-8,
                       max_evaluations: int = DEFAULT_MAX_EVALUATIONS) -> float:
    """Fisher information int (d')^2 / d of a density.

    Requires the analytic derivative on the ``DensitySpec``.  At a node
    both d and d' vanish quadratically/linearly, so the ratio extends
    continuously; splitting the domain at the nodes keeps the quadrature
    away from the 0/0 point, and a genuinely divergent integral shows up
    as NonConvergence rather than a number.
    """
    if d.derivative is None:
        raise ValueError(f"density {d.label} carries no analytic derivative")

    def integrand(x):
        x = np.asarray(x, dtype=float)
        val = np.asarray(d.evaluate(x), dtype=float)
        der = np.asarray(d.derivative(x), dtype=float)
        out = np.zeros_like(val)
        mask = val > _DENSITY_FLOOR
        out[mask] = der[mask] ** 2 / val[mask]
        return out

    if d.domain == "half-line" and d.arctan_scale is not None:
        res = _compact_momentum(d, integrand, abs_tol, max_evaluations)
    else:
        res = integrate(IntegrationRequest(integrand, d.domain, scale=d.scale,
                                           abs_tol=abs_tol, singular_points=d.nodes,
                                           max_evaluations=max_evaluations))
    return res.value


def entropy_table(n_max: int, abs_tol: float = 1e-6) -> list:
    """Entropy rows for n = 1..n_max; each cell is an independent integral.

    Raises NonConvergence naming the offending (n, column) cell if any
    single integral fails to converge.
    """
    if not isinstance(n_max, (int, np.integer)) or not 1 <= n_max <= 32:
        raise ValueError(f"n_max must be an integer in [1, 32], got {n_max!r}")
    rows = []
    for n in range(1, int(n_max) + 1):
        cells = {}
        for column, density in (("s_rho", rho_q1d(n)),
                                ("s_gamma_o", gamma_lorentz(n)),
                                ("s_gamma_s", gamma_q1d(n))):
            try:
                cells[column] = shannon_entropy(density, abs_tol=abs_tol)
            except NonConvergence as exc:
                raise NonConvergence(f"cell n={n} column={column}: {exc}") from exc
        rows.append(EntropyRow(n=n, s_rho=cells["s_rho"], s_gamma_o=cells["s_gamma_o"],
                               s_gamma_s=cells["s_gamma_s"],
                               sum_o=cells["s_rho"] + cells["s_gamma_o"],
                               sum_s=cells["s_rho"] + cells["s_gamma_s"]))
    return rows


def bbm_check(s_rho: float, s_gamma: float) -> BbmVerdict:
    """Compare an entropy sum against the BBM bound 1 + ln(pi)."""
    total = s_rho + s_gamma
    return BbmVerdict(entropy_sum=total, bound=BBM_BOUND, satisfied=total >= BBM_BOUND)


def fisher_pair(n: int, gamma_choice: str = "q1d", abs_tol: float = 1e-8) -> FisherPair:
    """Position Fisher information paired with one momentum choice.

    ``gamma_choice`` selects the momentum density: "lorentz" for the
    full-line Lorentzian-squared one, "q1d" for the half-line
    trigonometric one.  The product is reported for comparison against
    the conjugate-pair bound of 4.
    """
    if gamma_choice == "lorentz":
        gamma = gamma_lorentz(n)
    elif gamma_choice == "q1d":
        gamma = gamma_q1d(n)
    else:
        raise ValueError(f"gamma_choice must be 'lorentz' or 'q1d', got {gamma_choice!r}")
    i_rho = fisher_information(rho_q1d(n), abs_tol=abs_tol)
    i_gamma = fisher_information(gamma, abs_tol=abs_tol)
    return FisherPair(i_rho=i_rho, i_gamma=i_gamma, product=i_rho * i_gamma)


def orthonormality_check(n: int, n_prime: int, family: str = "q1d_position",
                         abs_tol: float = 1e-8) -> float:
    """Overlap integral of two states of one family; delta_{nn'} when exact.

    Families: "q1d_position" (half-line position states),
    "lorentz_momentum" (complex full-line momentum functions, conjugated
    overlap; the imaginary part vanishes by parity of the phases),
    "q1d_momentum" (half-line momentum functions).
    """
    if family == "q1d_position":
        def integrand(x):
            return psi_q1d(n, x) * psi_q1d(n_prime, x)
        scale = float(max(n, n_prime) ** 2)
        res = integrate(IntegrationRequest(integrand, "half-line", scale=scale,
                                           abs_tol=abs_tol))
        return res.value
    if family == "lorentz_momentum":
        def integrand(p):
            return np.real(np.conj(phi_lorentz(n, p)) * phi_lorentz(n_prime, p))
        res = integrate(IntegrationRequest(integrand, "full-line",
                                           scale=1.0 / min(n, n_prime), abs_tol=abs_tol))
        return res.value
    if family == "q1d_momentum":
        def integrand(p):
            return phi_q1d_cheb(n, p) * phi_q1d_cheb(n_prime, p)
        res = integrate(IntegrationRequest(integrand, "half-line",
                                           scale=1.0 / min(n, n_prime), abs_tol=abs_tol))
        return res.value
    raise ValueError(f"unknown family {family!r}")
