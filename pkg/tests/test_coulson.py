import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.integrate import quad

from isienergy.coulson import (
    FORMS,
    QuadratureConfig,
    QuadratureError,
    corollary_integrand,
    coulson_energy,
    coulson_energy_corollary_form,
    coulson_energy_logform,
    derivative_integrand,
    energy_by_form,
    eval_char_poly_imag,
    log_integrand,
)
from isienergy.graph import complete, cycle, empty, path, petersen, star
from isienergy.isi import isi_energy, isi_spectrum
from isienergy.quadrature import integrate_gk
from isienergy.spectral import char_poly_coeffs


def _coeffs(g):
    return char_poly_coeffs(isi_spectrum(g)).coeffs


def test_imag_axis_values():
    v = eval_char_poly_imag((1.0, 0.0, -0.25), 1.0)
    assert (v.real_part, v.imag_part) == (-1.25, 0.0)
    p4 = eval_char_poly_imag(_coeffs(path(4)), 1.0)
    assert p4.real_part == pytest.approx(250 / 81) and p4.imag_part == pytest.approx(0.0, abs=1e-14)
    assert p4.modulus_squared == pytest.approx((250 / 81) ** 2)
    # odd part present
    v = eval_char_poly_imag((1.0, -3.0, 2.0), 2.0)
    assert complex(v.real_part, v.imag_part) == pytest.approx((2j) ** 2 - 3 * 2j + 2)


def test_k2_derivative_integrand():
    lam = np.array([0.0, 0.5, 2.0])
    assert derivative_integrand((1.0, 0.0, -0.25), lam) == pytest.approx(0.5 / (lam**2 + 0.25))


@pytest.mark.parametrize("g", [path(4), cycle(7), complete(6), star(5), petersen()])
def test_integrands_match_eigenvalue_forms(g):
    vals = isi_spectrum(g).values
    b = _coeffs(g)
    lam = np.concatenate([np.geomspace(1e-8, 1e4, 60), [0.3, 1.0, 1.0000001]])
    # derivative: sum t^2 / (l^2 + t^2)
    ref_d = np.sum(np.asarray(vals)[:, None] ** 2 / (lam**2 + np.asarray(vals)[:, None] ** 2), axis=0)
    assert np.allclose(derivative_integrand(b, lam), ref_d, rtol=1e-9, atol=1e-12)
    # log: l^-2 sum log(1 + t^2 l^2)
    ref_l = np.sum(np.log1p((np.asarray(vals)[:, None] * lam) ** 2), axis=0) / lam**2
    assert np.allclose(log_integrand(b, lam), ref_l, rtol=1e-8, atol=1e-12)
    assert np.allclose(corollary_integrand(b, lam), ref_l / 2, rtol=1e-8, atol=1e-12)


@pytest.mark.parametrize("fn", [derivative_integrand, log_integrand, corollary_integrand])
@settings(max_examples=25, deadline=None)
@given(lam=st.floats(1e-6, 1e3))
def test_integrands_are_even(fn, lam):
    b = _coeffs(cycle(5))
    assert fn(b, lam)[0] == pytest.approx(fn(b, -lam)[0], rel=1e-12, abs=1e-12)


@pytest.mark.parametrize("g", [complete(2), path(4), cycle(6), complete(5), star(6), petersen()])
@pytest.mark.parametrize("form", sorted(FORMS))
def test_forms_agree_with_spectrum(g, form):
    assert energy_by_form(_coeffs(g), form) == pytest.approx(isi_energy(g), abs=1e-5)


@pytest.mark.parametrize("g", [path(4), cycle(12), complete(8), complete(30)])
def test_truncated_rule(g):
    cfg = QuadratureConfig(rule="truncated", cutoff=50.0, target_tol=1e-9)
    e = isi_energy(g)
    assert coulson_energy(_coeffs(g), cfg) == pytest.approx(e, abs=1e-6)
    assert coulson_energy_logform(_coeffs(g), cfg) == pytest.approx(e, abs=1e-6)
    assert coulson_energy_corollary_form(_coeffs(g), cfg) == pytest.approx(e, abs=1e-6)


def test_scipy_oracle_on_log_form():
    b = _coeffs(cycle(7))
    ref, _ = quad(lambda x: log_integrand(b, x)[0], 0, np.inf, limit=200)
    assert ref / math.pi == pytest.approx(isi_energy(cycle(7)), abs=1e-8)


def test_empty_graph_is_zero():
    for form in FORMS:
        assert energy_by_form(_coeffs(empty(3)), form) == 0.0


def test_config_validation():
    with pytest.raises(ValueError):
        QuadratureConfig(cutoff=-1.0)
    with pytest.raises(ValueError):
        QuadratureConfig(panels=4)
    with pytest.raises(ValueError):
        QuadratureConfig(rule="simpson")
    with pytest.raises(ValueError):
        energy_by_form((1.0,), "contour")


def test_gauss_kronrod():
    val, err = integrate_gk(np.sin, 0.0, math.pi, 1e-12)
    assert val == pytest.approx(2.0, abs=1e-12) and err < 1e-10
    val, _ = integrate_gk(lambda x: np.sqrt(x), 0.0, 1.0, 1e-10)
    assert val == pytest.approx(2 / 3, abs=1e-9)
    with pytest.raises(QuadratureError):
        integrate_gk(lambda x: 1 / (x - 0.5), 0.0, 1.0, 1e-12, max_intervals=50)


@pytest.mark.parametrize("rule", ["tan", "truncated"])
def test_tiny_eigenvalue_is_resolved(rule):
    # smallest nonzero eigenvalue is about 2.6e-5
    from isienergy.graphio import parse_graph6

    g = parse_graph6("FBX|w")
    cfg = QuadratureConfig(rule=rule)
    for form in FORMS:
        assert energy_by_form(_coeffs(g), form, cfg) == pytest.approx(isi_energy(g), abs=1e-6)
