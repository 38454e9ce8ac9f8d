import math

import numpy as np
import pytest

from q1dhydrogen.information import (
    BBM_BOUND,
    bbm_check,
    entropy_table,
    fisher_information,
    fisher_pair,
    orthonormality_check,
    shannon_entropy,
)
from q1dhydrogen.wavefun import DensitySpec, gamma_lorentz, gamma_q1d, rho_1d, rho_q1d

import oracles


def test_entropy_closed_form_anchors():
    assert shannon_entropy(rho_q1d(1), abs_tol=1e-9) == pytest.approx(
        oracles.ENTROPY_RHO_N1, abs=1e-7)
    assert shannon_entropy(gamma_lorentz(1), abs_tol=1e-9) == pytest.approx(
        oracles.ENTROPY_GAMMA_LORENTZ_N1, abs=1e-8)
    assert shannon_entropy(gamma_q1d(1), abs_tol=1e-9) == pytest.approx(
        oracles.ENTROPY_GAMMA_Q1D_N1, abs=1e-8)


def test_lorentz_entropy_column_closed_form():
    """The Lorentzian density scales as n*g(np), so the whole column is
    the n = 1 value minus ln n."""
    for n in range(1, 11):
        got = shannon_entropy(gamma_lorentz(n), abs_tol=1e-8)
        assert got == pytest.approx(oracles.entropy_gamma_lorentz(n), abs=1e-6)


@pytest.mark.parametrize("n", [2, 5, 10])
def test_trig_entropy_against_mpmath(n):
    got = shannon_entropy(gamma_q1d(n), abs_tol=1e-7)
    assert got == pytest.approx(oracles.entropy_gamma_q1d_mp(n), abs=1e-6)


@pytest.mark.parametrize("n", [2, 6])
def test_position_entropy_against_mpmath(n):
    from q1dhydrogen.wavefun import nodes_psi
    got = shannon_entropy(rho_q1d(n), abs_tol=1e-7)
    assert got == pytest.approx(oracles.entropy_rho_q1d_mp(n, nodes_psi(n)), abs=1e-6)


def _bump_density(center: float) -> DensitySpec:
    def evaluate(x):
        u = np.asarray(x, dtype=float) - center
        return np.where(np.abs(u) < 1.0, 0.75 * (1.0 - u * u), 0.0)

    return DensitySpec(label=f"bump@{center}", domain="full-line", scale=abs(center) + 2.0,
                       nodes=(center - 1.0, center + 1.0), evaluate=evaluate)


@pytest.mark.parametrize("shift", [7.0, 37.5, -12.25])
def test_entropy_translation_invariance(shift):
    base = shannon_entropy(_bump_density(0.0), abs_tol=1e-12)
    moved = shannon_entropy(_bump_density(shift), abs_tol=1e-12)
    assert moved == pytest.approx(base, abs=1e-10)


def test_fisher_anchors():
    assert fisher_information(rho_q1d(1)) == pytest.approx(oracles.FISHER_RHO_N1, abs=1e-8)
    assert fisher_information(rho_q1d(2)) == pytest.approx(oracles.FISHER_RHO_N2, abs=1e-8)
    for n in (1, 2, 3):
        assert fisher_information(gamma_lorentz(n)) == pytest.approx(
            oracles.FISHER_GAMMA_LORENTZ[n], abs=1e-7)
    assert fisher_information(gamma_q1d(1)) == pytest.approx(
        oracles.FISHER_GAMMA_Q1D_N1, abs=1e-6)
    assert fisher_information(gamma_q1d(2)) == pytest.approx(
        oracles.FISHER_GAMMA_Q1D_N2, abs=1e-5)
    # the full-line position density has the same Fisher information as
    # the half-line one (identical local structure, half the weight twice)
    assert fisher_information(rho_1d(1)) == pytest.approx(4.0, abs=1e-8)


def _scaled(d: DensitySpec, lam: float) -> DensitySpec:
    return DensitySpec(
        label=f"{d.label}/lambda={lam}", domain=d.domain, scale=d.scale / lam,
        nodes=tuple(x / lam for x in d.nodes),
        evaluate=lambda x: lam * d.evaluate(lam * np.asarray(x, dtype=float)),
        derivative=lambda x: lam * lam * d.derivative(lam * np.asarray(x, dtype=float)),
    )


@pytest.mark.parametrize("lam", [0.5, 2.0])
def test_fisher_scaling_covariance(lam):
    base = fisher_information(rho_q1d(1))
    scaled = fisher_information(_scaled(rho_q1d(1), lam))
    assert scaled == pytest.approx(lam * lam * base, abs=1e-8)


@pytest.mark.parametrize("lam", [0.5, 2.0])
def test_entropy_scaling(lam):
    # complementary sanity: S[lambda d(lambda x)] = S[d] - ln(lambda)
    base = shannon_entropy(rho_q1d(1), abs_tol=1e-9)
    scaled = shannon_entropy(_scaled(rho_q1d(1), lam), abs_tol=1e-9)
    assert scaled == pytest.approx(base - math.log(lam), abs=1e-7)


def test_fisher_requires_analytic_derivative():
    bare = DensitySpec(label="no-derivative", domain="half-line", scale=1.0, nodes=(),
                       evaluate=lambda x: np.exp(-np.asarray(x, dtype=float)))
    with pytest.raises(ValueError):
        fisher_information(bare)


def test_fisher_pair():
    pair = fisher_pair(1, gamma_choice="lorentz")
    assert pair.i_rho == pytest.approx(4.0, abs=1e-7)
    assert pair.i_gamma == pytest.approx(2.0, abs=1e-7)
    assert pair.product == pair.i_rho * pair.i_gamma
    pair = fisher_pair(1, gamma_choice="q1d")
    assert pair.i_gamma == pytest.approx(12.0, abs=1e-6)
    assert pair.product >= 4.0
    pair2 = fisher_pair(2, gamma_choice="q1d")
    assert pair2.i_rho > 0.0 and pair2.i_gamma > 0.0 and np.isfinite(pair2.product)
    with pytest.raises(ValueError):
        fisher_pair(1, gamma_choice="other")


def test_bbm_check():
    verdict = bbm_check(1.1544, 0.5575)
    assert not verdict.satisfied
    assert verdict.bound == pytest.approx(2.1447, abs=1e-4)
    assert bbm_check(1.1544, 1.2242).satisfied
    # equality saturates the bound
    boundary = bbm_check(BBM_BOUND / 2.0, BBM_BOUND / 2.0)
    assert boundary.satisfied
    assert boundary.entropy_sum == pytest.approx(boundary.bound, abs=1e-15)


def test_orthonormality():
    for family in ("q1d_position", "lorentz_momentum", "q1d_momentum"):
        for k in (1, 2, 3):
            assert orthonormality_check(k, k, family) == pytest.approx(1.0, abs=1e-8), family
        for a, b in ((1, 2), (1, 3), (2, 3)):
            assert orthonormality_check(a, b, family) == pytest.approx(0.0, abs=1e-8), family
    with pytest.raises(ValueError):
        orthonormality_check(1, 2, "unknown_family")


def test_entropy_table_structure():
    rows = entropy_table(3, abs_tol=1e-6)
    assert [row.n for row in rows] == [1, 2, 3]
    for row in rows:
        # exact float identities by construction
        assert row.sum_o == row.s_rho + row.s_gamma_o
        assert row.sum_s == row.s_rho + row.s_gamma_s
    # position entropy grows strictly with n
    ten = entropy_table(10, abs_tol=1e-6)
    s_rho = [row.s_rho for row in ten]
    assert all(a < b for a, b in zip(s_rho, s_rho[1:]))
    with pytest.raises(ValueError):
        entropy_table(0)
    with pytest.raises(ValueError):
        entropy_table(33)
