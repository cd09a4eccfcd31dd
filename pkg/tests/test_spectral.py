import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from isienergy.spectral import (
    CharPolyCoeffs,
    EigenConvergenceError,
    Spectrum,
    char_poly_coeffs,
    determinant,
    eigenvalues_symmetric,
    log_abs_determinant,
    spectra_equal,
)


def test_small_matrices():
    assert eigenvalues_symmetric([[0.0, 1.0], [1.0, 0.0]]).values == pytest.approx((1.0, -1.0), abs=1e-14)
    assert eigenvalues_symmetric([[0.0] * 3] * 3).values == (0.0, 0.0, 0.0)
    assert len(eigenvalues_symmetric(np.zeros((0, 0)))) == 0
    assert eigenvalues_symmetric([[2.5]]).values == (2.5,)


@pytest.mark.parametrize("bad", [[[0, 1], [2, 0]], [[1, 2, 3]], [[0.0, math.nan], [math.nan, 0.0]]])
def test_rejects_bad_input(bad):
    with pytest.raises(ValueError):
        eigenvalues_symmetric(bad)


def test_convergence_error():
    rng = np.random.default_rng(0)
    a = rng.normal(size=(12, 12))
    with pytest.raises(EigenConvergenceError) as info:
        eigenvalues_symmetric(a + a.T, max_sweeps=1)
    assert info.value.sweeps == 1


symmetric = st.integers(1, 14).flatmap(
    lambda n: arrays(np.float64, (n, n), elements=st.floats(-10, 10, allow_nan=False, width=32))
).map(lambda a: (a + a.T) / 2)


@settings(max_examples=60, deadline=None)
@given(symmetric)
def test_matches_numpy(a):
    ours = eigenvalues_symmetric(a).as_array()
    ref = np.sort(np.linalg.eigvalsh(a))[::-1]
    scale = max(1.0, np.abs(ref).max(initial=0.0))
    assert np.allclose(ours, ref, atol=1e-10 * scale)


def test_larger_random_matrix():
    rng = np.random.default_rng(7)
    a = rng.normal(size=(61, 61))
    a = a + a.T
    assert np.allclose(eigenvalues_symmetric(a).as_array(), np.linalg.eigvalsh(a)[::-1], atol=1e-10)


def test_char_poly_examples():
    k2 = char_poly_coeffs(Spectrum((0.5, -0.5)))
    assert k2.coeffs == pytest.approx((1.0, 0.0, -0.25))
    p4 = char_poly_coeffs(Spectrum((4 / 3, 1 / 3, -1 / 3, -4 / 3)))
    assert p4.coeffs == pytest.approx((1, 0, -17 / 9, 0, 16 / 81), abs=1e-14)
    assert char_poly_coeffs(Spectrum(())).coeffs == (1.0,)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.floats(-5, 5, allow_nan=False), min_size=1, max_size=10))
def test_char_poly_matches_numpy_and_newton(vals):
    spec = Spectrum(tuple(vals))
    cp = char_poly_coeffs(spec)
    assert np.allclose(cp.coeffs, np.poly(vals), atol=1e-9 * 6 ** len(vals))
    p = cp.power_sums(2)
    assert p[0] == pytest.approx(sum(vals), abs=1e-8 * 6 ** len(vals))
    assert p[1] == pytest.approx(sum(v * v for v in vals), abs=1e-8 * 6 ** len(vals))


def test_char_poly_call_and_derivative():
    cp = CharPolyCoeffs((1.0, 0.0, -4.0))
    assert cp(2.0) == 0.0
    assert cp(1j) == -5
    assert cp.derivative() == (2.0, 0.0)


def test_spectrum_grouping_and_comparison():
    s = Spectrum((1.0, 1.0 + 5e-9, -1.0, 0.0))
    assert s.values[0] > s.values[1]
    assert [k for _, k in s.grouped()] == [2, 1, 1]
    assert spectra_equal(s, Spectrum((1.0, 1.0, 0.0, -1.0)), 1e-8)
    assert not spectra_equal(s, Spectrum((1.0, 0.0, -1.0)), 1e-8)
    assert s.with_zeros(2).values[-3:] == (0.0, 0.0, -1.0)
    assert s.scaled(2.0).values[-1] == -2.0


def test_determinants():
    s = Spectrum((2.0, -1.0, 0.5))
    assert determinant(s) == pytest.approx(-1.0)
    assert log_abs_determinant(s) == pytest.approx(0.0)
    assert log_abs_determinant(Spectrum((1.0, 0.0))) == -math.inf
    big = Spectrum((1.5,) * 40)
    assert determinant(big) == pytest.approx(1.5**40, rel=1e-12)
