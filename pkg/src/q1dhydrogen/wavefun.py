"""Closed-form bound states of the half-line (Q1D) and full-line (1D)
hydrogen atoms, the candidate momentum-space wave functions, and the four
probability densities built from them.

Conventions (Hartree atomic units, hbar = m = e = 1):

* ``psi_q1d``    -- position wave function on x >= 0, vanishing at the
  origin, with n-1 further zeros on the half line.  Two algebraically
  equivalent forms are provided (terminating hypergeometric sum and
  generalized Laguerre polynomial).
* ``psi_1d``     -- degenerate even/odd bound states on the full line.
* ``phi_q1d_cheb``     -- half-line momentum function carrying a
  Chebyshev-U factor; real, with n-1 positive zeros.
* ``phi_lorentz``      -- complex full-line momentum function whose
  squared modulus is the Lorentzian-squared density ``gamma_lorentz``.
  Evaluated in polar form: modulus sqrt(2n/pi)/(1+n^2 p^2), phase
  -2n*arctan(n p), overall sign (-1)^(n+1).  Cartesian powers of
  (1 - i n p) would lose phase accuracy at large n*p.
* ``phi_lorentz_imag`` -- its imaginary part, an elementary function.
* ``phi_1d``     -- full-line momentum function with a switchable phase
  exponent (see the docstring; the transform oracles in
  ``q1dhydrogen.transforms`` decide between the two readings).

Densities are packaged as ``DensitySpec`` values that carry the natural
length scale, the list of interior nodes (needed to pre-split entropy
and Fisher quadratures), and an analytic derivative where downstream
code needs one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Literal, Optional

import numpy as np
from scipy.optimize import brentq

from .specfun import chebyshev_u, hyp1f1_terminating, laguerre

__all__ = [
    "MAX_N",
    "DensitySpec",
    "energy",
    "psi_q1d",
    "psi_1d",
    "phi_q1d_cheb",
    "phi_lorentz",
    "phi_lorentz_imag",
    "phi_1d",
    "rho_q1d",
    "gamma_lorentz",
    "rho_1d",
    "gamma_q1d",
    "nodes_psi",
]

# Laguerre degree is n-1; keep one past the validated polynomial ceiling.
MAX_N = 33

Parity = Literal["even", "odd"]


def _check_n(n) -> int:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"principal quantum number must be an integer >= 1, got {n!r}")
    return int(n)


@dataclass(frozen=True)
class DensitySpec:
    """A normalized probability density with its quadrature metadata.

    Attributes:
        label: short identifier used in reports and CLI output.
        domain: "half-line" for [0, inf) or "full-line".
        scale: natural extent of the density (map parameter for the
            rational half-line substitution).
        nodes: interior zeros, ordered; entropy and Fisher integrands
            have integrable singularities exactly there.
        evaluate: vectorized density evaluator, nonnegative on domain.
        derivative: analytic d'(x), present for every built-in family.
        arctan_scale: when set (momentum densities), the substitution
            u = arctan(arctan_scale * p) compactifies the domain.
    """

    label: str
    domain: str
    scale: float
    nodes: tuple
    evaluate: Callable
    derivative: Optional[Callable] = None
    arctan_scale: Optional[float] = None


def energy(n: int) -> float:
    """Bound-state energy -1/(2 n^2) in hartree."""
    n = _check_n(n)
    return -0.5 / (n * n)


def psi_q1d(n: int, x, form: str = "hypergeometric"):
    """Half-line position wave function, normalized on [0, inf).

    Two equivalent closed forms:

        hypergeometric: (2x/sqrt(n^3)) e^(-x/n) 1F1(1-n; 2; 2x/n)
        laguerre:       (2x/sqrt(n^5)) e^(-x/n) L_{n-1}^(1)(2x/n)

    Args:
        n: principal quantum number (integer >= 1).
        x: position(s), must be >= 0.
        form: "hypergeometric" or "laguerre".

    Raises:
        ValueError: if any x < 0, or the form name is unknown.
    """
    n = _check_n(n)
    x = np.asarray(x, dtype=float)
    if np.any(x < 0.0):
        raise ValueError("psi_q1d is defined on the half line x >= 0")
    if form == "hypergeometric":
        poly = hyp1f1_terminating(1 - n, 2, 2.0 * x / n)
        pref = 2.0 * x / math.sqrt(n**3)
    elif form == "laguerre":
        poly = laguerre(n - 1, 1, 2.0 * x / n)
        pref = 2.0 * x / math.sqrt(n**5)
    else:
        raise ValueError(f"unknown form {form!r}; expected 'hypergeometric' or 'laguerre'")
    out = pref * np.exp(-x / n) * poly
    return out[()]


def _dpsi_q1d(n: int, x):
    """d/dx of the half-line wave function (Laguerre form)."""
    x = np.asarray(x, dtype=float)
    z = 2.0 * x / n
    lag = laguerre(n - 1, 1, z)
    # d/dz L_{m}^{(1)}(z) = -L_{m-1}^{(2)}(z)
    dlag = -laguerre(n - 2, 2, z) if n >= 2 else np.zeros_like(x)
    pref = 2.0 / math.sqrt(n**5)
    out = pref * np.exp(-x / n) * ((1.0 - x / n) * lag + x * (2.0 / n) * dlag)
    return out[()]


def psi_1d(n: int, parity: Parity, x):
    """Full-line bound state of given parity, normalized on (-inf, inf).

    even: sqrt(2/n^5) e^(-|x|/n) |x| L_{n-1}^(1)(2|x|/n)
    odd:  the same with x in place of |x| as prefactor.
    """
    n = _check_n(n)
    if parity not in ("even", "odd"):
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    x = np.asarray(x, dtype=float)
    ax = np.abs(x)
    pref = ax if parity == "even" else x
    out = math.sqrt(2.0 / n**5) * np.exp(-ax / n) * pref * laguerre(n - 1, 1, 2.0 * ax / n)
    return out[()]


def phi_q1d_cheb(n: int, p):
    """Half-line momentum wave function in Chebyshev form.

        2^(5/2) n^(3/2) / sqrt(pi) * p (1 + n^2 p^2)^-2
            * U_{n-1}((1 - n^2 p^2)/(1 + n^2 p^2))

    Real-valued, defined for p >= 0, with n-1 zeros in (0, inf).
    """
    n = _check_n(n)
    p = np.asarray(p, dtype=float)
    if np.any(p < 0.0):
        raise ValueError("phi_q1d_cheb is a half-line momentum representation; p must be >= 0")
    q2 = (n * p) ** 2
    arg = (1.0 - q2) / (1.0 + q2)
    pref = 2.0**2.5 * n**1.5 / math.sqrt(math.pi)
    out = pref * p / (1.0 + q2) ** 2 * chebyshev_u(n - 1, arg)
    return out[()]


def phi_lorentz(n: int, p):
    """Complex full-line momentum function, polar evaluation.

        (-1)^(n+1) sqrt(2n/pi) (1 - inp)^(n-1) / (1 + inp)^(n+1)
      = (-1)^(n+1) sqrt(2n/pi) exp(-2in*arctan(np)) / (1 + n^2 p^2)
    """
    n = _check_n(n)
    p = np.asarray(p, dtype=float)
    theta = np.arctan(n * p)
    modulus = math.sqrt(2.0 * n / math.pi) / (1.0 + (n * p) ** 2)
    sign = -1.0 if n % 2 == 0 else 1.0
    out = sign * modulus * np.exp(-2.0j * n * theta)
    return out[()]


def phi_lorentz_imag(n: int, p):
    """Imaginary part of ``phi_lorentz``:

        (-1)^n sqrt(2n/pi) sin(2n*arctan(np)) / (1 + n^2 p^2)
    """
    n = _check_n(n)
    p = np.asarray(p, dtype=float)
    theta = np.arctan(n * p)
    sign = 1.0 if n % 2 == 0 else -1.0
    out = sign * math.sqrt(2.0 * n / math.pi) * np.sin(2.0 * n * theta) / (1.0 + (n * p) ** 2)
    return out[()]


def phi_1d(n: int, p, branch: str = "+", n_scaled_phase: bool = True):
    """Full-line momentum function of the 1D atom, phase exponent switchable.

        sqrt(2n/pi) exp(+/- i * c * arctan(np)) / (1 + n^2 p^2)

    with c = 2n when ``n_scaled_phase`` (the reading consistent with
    ``phi_lorentz``; the default) or c = 2 for the literal plain-phase
    reading.  The two coincide at n = 1; the transform oracles
    discriminate for n >= 2.
    """
    n = _check_n(n)
    if branch not in ("+", "-"):
        raise ValueError(f"branch must be '+' or '-', got {branch!r}")
    p = np.asarray(p, dtype=float)
    c = 2.0 * n if n_scaled_phase else 2.0
    sign = 1.0 if branch == "+" else -1.0
    out = math.sqrt(2.0 * n / math.pi) * np.exp(sign * 1.0j * c * np.arctan(n * p)) / (1.0 + (n * p) ** 2)
    return out[()]


@lru_cache(maxsize=None)
def nodes_psi(n: int) -> tuple:
    """The n-1 strictly positive zeros of the half-line wave function.

    Bracketed by a sign scan of the Laguerre factor and refined with
    Brent's method to better than 1e-12.
    """
    n = _check_n(n)
    if n == 1:
        return ()
    m = n - 1

    def poly(x):
        return laguerre(m, 1, 2.0 * x / n)

    upper = 0.5 * n * (4.0 * m + 4.0) + 1.0  # contains every zero of the factor
    grid = np.linspace(0.0, upper, 64 * (m + 1))
    vals = poly(grid)
    roots = []
    for a, b, fa, fb in zip(grid[:-1], grid[1:], vals[:-1], vals[1:]):
        if fa == 0.0:
            continue
        if fa * fb < 0.0:
            roots.append(brentq(poly, a, b, xtol=1e-13, rtol=8.9e-16))
    if len(roots) != m:
        raise RuntimeError(f"expected {m} zeros for n={n}, bracketing found {len(roots)}")
    return tuple(roots)


def rho_q1d(n: int) -> DensitySpec:
    """Half-line position density psi_q1d^2, with n-1 interior nodes."""
    n = _check_n(n)
    roots = nodes_psi(n)

    def evaluate(x):
        val = psi_q1d(n, x, form="laguerre")
        return val * val

    def derivative(x):
        return 2.0 * psi_q1d(n, x, form="laguerre") * _dpsi_q1d(n, x)

    return DensitySpec(label=f"rho_q1d(n={n})", domain="half-line", scale=float(n * n),
                       nodes=roots, evaluate=evaluate, derivative=derivative)


def gamma_lorentz(n: int) -> DensitySpec:
    """Full-line momentum density (2n/pi)(1 + n^2 p^2)^-2; nodeless."""
    n = _check_n(n)

    def evaluate(p):
        p = np.asarray(p, dtype=float)
        out = (2.0 * n / math.pi) / (1.0 + (n * p) ** 2) ** 2
        return out[()]

    def derivative(p):
        p = np.asarray(p, dtype=float)
        out = -(8.0 * n**3 / math.pi) * p / (1.0 + (n * p) ** 2) ** 3
        return out[()]

    return DensitySpec(label=f"gamma_lorentz(n={n})", domain="full-line", scale=1.0 / n,
                       nodes=(), evaluate=evaluate, derivative=derivative,
                       arctan_scale=float(n))


def rho_1d(n: int) -> DensitySpec:
    """Full-line position density of the 1D atom (same for both parities).

    Equals half the half-line density continued evenly, so it vanishes
    at x = 0 and at the 2(n-1) reflected node positions.
    """
    n = _check_n(n)
    roots = nodes_psi(n)
    all_nodes = tuple(-r for r in reversed(roots)) + (0.0,) + roots

    def evaluate(x):
        x = np.asarray(x, dtype=float)
        ax = np.abs(x)
        val = psi_q1d(n, ax, form="laguerre")
        out = 0.5 * val * val
        return out[()]

    def derivative(x):
        x = np.asarray(x, dtype=float)
        ax = np.abs(x)
        out = np.sign(x) * psi_q1d(n, ax, form="laguerre") * _dpsi_q1d(n, ax)
        return out[()]

    return DensitySpec(label=f"rho_1d(n={n})", domain="full-line", scale=float(n * n),
                       nodes=all_nodes, evaluate=evaluate, derivative=derivative)


def gamma_q1d(n: int) -> DensitySpec:
    """Half-line momentum density (8n/pi) sin^2(2n*arctan(np)) (1+n^2p^2)^-2.

    Its n-1 interior nodes are the closed-form zeros of the sine factor,
    p_k = tan(k*pi/(2n))/n.
    """
    n = _check_n(n)
    node_list = tuple(math.tan(k * math.pi / (2.0 * n)) / n for k in range(1, n))
    amp2 = 8.0 * n / math.pi

    def evaluate(p):
        p = np.asarray(p, dtype=float)
        theta = np.arctan(n * p)
        out = amp2 * np.sin(2.0 * n * theta) ** 2 / (1.0 + (n * p) ** 2) ** 2
        return out[()]

    def derivative(p):
        p = np.asarray(p, dtype=float)
        theta = np.arctan(n * p)
        r = 1.0 / (1.0 + (n * p) ** 2)
        s = np.sin(2.0 * n * theta)
        out = 4.0 * n * n * amp2 * s * r**3 * (np.cos(2.0 * n * theta) - p * s)
        return out[()]

    return DensitySpec(label=f"gamma_q1d(n={n})", domain="half-line", scale=1.0 / n,
                       nodes=node_list, evaluate=evaluate, derivative=derivative,
                       arctan_scale=float(n))
