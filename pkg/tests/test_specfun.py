import numpy as np
import pytest
import hypothesis as hyp
import hypothesis.strategies as st

from q1dhydrogen.specfun import MAX_DEGREE, chebyshev_u, hyp1f1_terminating, laguerre

from oracles import chebyshev_u_series, kummer_series, laguerre_series


def test_laguerre_low_degrees():
    assert laguerre(0, 1, 7.3) == 1.0
    assert laguerre(1, 1, 1.0) == 1.0          # 2 - x at x = 1
    # series oracle: L_2^(1)(x) = x^2/2 - 3x + 3
    assert laguerre(2, 1, 3.0) == pytest.approx(4.5 - 9.0 + 3.0, abs=1e-14)


def test_chebyshev_low_degrees():
    assert chebyshev_u(0, 0.9) == 1.0
    assert chebyshev_u(1, 0.25) == 0.5
    # trig oracle at theta = pi/3: sin(pi)/sin(pi/3) = 0
    assert chebyshev_u(2, 0.5) == pytest.approx(0.0, abs=1e-15)


def test_terminating_kummer_values():
    assert hyp1f1_terminating(0, 2, 5.5) == 1.0
    assert hyp1f1_terminating(-1, 2, 2.0) == pytest.approx(0.0, abs=1e-15)
    assert hyp1f1_terminating(-2, 2, 2.0) == pytest.approx(-1.0 / 3.0, abs=1e-14)


def test_kummer_rejects_non_terminating():
    with pytest.raises(ValueError):
        hyp1f1_terminating(1, 2, 0.5)
    with pytest.raises(ValueError):
        hyp1f1_terminating(-1, 0, 0.5)


def test_degree_validation():
    for bad in (-1, 2.5):
        with pytest.raises(ValueError):
            laguerre(bad, 1, 0.0)
        with pytest.raises(ValueError):
            chebyshev_u(bad, 0.0)


def test_kummer_laguerre_link():
    """(m+1) * 1F1(-m; 2; x) = L_m^(1)(x), the bridge between the two
    closed forms of the half-line wave function."""
    xs = np.linspace(0.0, 40.0, 50)
    for m in range(13):
        lhs = (m + 1) * hyp1f1_terminating(-m, 2, xs)
        rhs = laguerre(m, 1, xs)
        rel = np.abs(lhs - rhs) / np.maximum(1.0, np.abs(rhs))
        assert np.max(rel) <= 1e-12


def test_chebyshev_trig_identity_grid():
    thetas = np.linspace(0.0, np.pi, 102)[1:-1]
    for m in range(13):
        lhs = chebyshev_u(m, np.cos(thetas)) * np.sin(thetas)
        assert np.max(np.abs(lhs - np.sin((m + 1) * thetas))) <= 1e-12


def test_recurrences_match_exact_series():
    """Recurrence evaluation against exact rational monomial sums."""
    xs = np.linspace(-50.0, 50.0, 41)
    for m in range(13):
        for x in xs:
            exact = float(laguerre_series(m, 1, float(x)))
            got = laguerre(m, 1, float(x))
            assert abs(got - exact) <= 1e-10 * max(1.0, abs(exact))
            exact = float(kummer_series(m, 2, float(x)))
            got = hyp1f1_terminating(-m, 2, float(x))
            assert abs(got - exact) <= 1e-10 * max(1.0, abs(exact))
    ts = np.linspace(-1.5, 1.5, 31)
    for m in range(13):
        for t in ts:
            exact = float(chebyshev_u_series(m, float(t)))
            got = chebyshev_u(m, float(t))
            assert abs(got - exact) <= 1e-10 * max(1.0, abs(exact))


def test_high_degree_supported():
    x = np.linspace(0.0, 20.0, 7)
    for m in (20, MAX_DEGREE):
        vals = laguerre(m, 1, x)
        assert np.all(np.isfinite(vals))
        exact = float(laguerre_series(m, 1, 20.0))
        assert laguerre(m, 1, 20.0) == pytest.approx(exact, rel=1e-10, abs=1e-10)


@hyp.given(m=st.integers(min_value=0, max_value=12),
           theta=st.floats(min_value=0.01, max_value=np.pi - 0.01))
@hyp.settings(max_examples=80, deadline=None)
def test_chebyshev_trig_identity_property(m, theta):
    lhs = chebyshev_u(m, np.cos(theta)) * np.sin(theta)
    assert lhs == pytest.approx(np.sin((m + 1) * theta), abs=1e-12)


@hyp.given(m=st.integers(min_value=0, max_value=12),
           x=st.floats(min_value=0.0, max_value=40.0))
@hyp.settings(max_examples=80, deadline=None)
def test_kummer_laguerre_link_property(m, x):
    lhs = (m + 1) * hyp1f1_terminating(-m, 2, x)
    rhs = laguerre(m, 1, x)
    assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))
