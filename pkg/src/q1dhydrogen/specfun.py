"""Polynomial special functions underlying the closed-form bound states.

Three families are needed: generalized Laguerre polynomials L_m^(a),
Chebyshev polynomials of the second kind U_m, and terminating confluent
hypergeometric sums 1F1(-m; b; z).  Runtime evaluation goes through
three-term recurrences (or a running-term sum for the Kummer series),
which are stable for the moderate degrees this library uses; explicit
monomial expansions exist only in the test suite as oracles.

All evaluators accept a scalar or an ndarray for the argument and are
pure functions, safe for concurrent use.
"""

from __future__ import annotations

import numpy as np

__all__ = ["MAX_DEGREE", "laguerre", "chebyshev_u", "hyp1f1_terminating"]

# Degrees above this are untested territory; recurrences are validated up
# to here against exact-rational series evaluation.
MAX_DEGREE = 32


def _as_degree(m) -> int:
    if not isinstance(m, (int, np.integer)):
        raise ValueError(f"polynomial degree must be an integer, got {m!r}")
    if m < 0:
        raise ValueError(f"polynomial degree must be nonnegative, got {m}")
    return int(m)


def laguerre(m, alpha, x):
    """Generalized Laguerre polynomial L_m^(alpha)(x).

    Evaluated with the three-term recurrence

        (k+1) L_{k+1} = (2k + 1 + alpha - x) L_k - (k + alpha) L_{k-1},

    starting from L_0 = 1, L_1 = 1 + alpha - x.

    Args:
        m: degree, nonnegative integer.
        alpha: superscript parameter, nonnegative integer.
        x: evaluation point(s), any real value.

    Returns:
        L_m^(alpha)(x), same shape as ``x``.
    """
    m = _as_degree(m)
    if not isinstance(alpha, (int, np.integer)) or alpha < 0:
        raise ValueError(f"alpha must be a nonnegative integer, got {alpha!r}")
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if m == 0:
        return prev[()]
    curr = 1.0 + alpha - x
    for k in range(1, m):
        prev, curr = curr, ((2.0 * k + 1.0 + alpha - x) * curr - (k + alpha) * prev) / (k + 1.0)
    return curr[()]


def chebyshev_u(m, t):
    """Chebyshev polynomial of the second kind U_m(t).

    For |t| <= 1 this agrees with sin((m+1)*theta)/sin(theta) at
    t = cos(theta); outside [-1, 1] it is the polynomial continuation.
    Evaluated with U_0 = 1, U_1 = 2t, U_{k+1} = 2t U_k - U_{k-1}.
    """
    m = _as_degree(m)
    t = np.asarray(t, dtype=float)
    prev = np.ones_like(t)
    if m == 0:
        return prev[()]
    curr = 2.0 * t
    for _ in range(1, m):
        prev, curr = curr, 2.0 * t * curr - prev
    return curr[()]


def hyp1f1_terminating(a, b, z):
    """Terminating confluent hypergeometric function 1F1(a; b; z), a <= 0.

    With a = -m the Kummer series breaks off after m + 1 terms,

        1F1(-m; b; z) = sum_{k=0}^{m} (-m)_k z^k / ((b)_k k!),

    a degree-m polynomial in z.  Rather than summing those alternating
    monomial terms (which cancel catastrophically for moderate z), the
    value is built with the contiguous recurrence in the first
    parameter,

        (b+k) M(-k-1) = (2k + b - z) M(-k) - k M(-k+1),

    starting from M(0) = 1, M(-1) = 1 - z/b.  Only the polynomial cases
    are supported; a positive ``a`` (an infinite series) is rejected.

    Args:
        a: nonpositive integer.
        b: positive integer.
        z: evaluation point(s).
    """
    if not isinstance(a, (int, np.integer)) or a > 0:
        raise ValueError(f"series does not terminate: 'a' must be a nonpositive integer, got {a!r}")
    if not isinstance(b, (int, np.integer)) or b < 1:
        raise ValueError(f"'b' must be a positive integer, got {b!r}")
    m = -int(a)
    z = np.asarray(z, dtype=float)
    prev = np.ones_like(z)
    if m == 0:
        return prev[()]
    curr = 1.0 - z / b
    for k in range(1, m):
        prev, curr = curr, ((2.0 * k + b - z) * curr - k * prev) / (b + k)
    return curr[()]
