import csv
import io
import math

import pytest

from isienergy.bounds import (
    Check,
    connected_eigenvalue_bounds,
    degree_bounds,
    det_energy_bounds,
    eigenvalue_bounds,
    mcclelland_bounds,
    run_all_bounds,
    theta_power,
    trace_bound,
)
from isienergy.graph import complete, complete_bipartite, cycle, disjoint_union, empty, path, star
from isienergy.isi import isi_spectrum


def test_check_tolerance():
    assert Check("x", 1.0 + 1e-10, upper=1.0).holds
    assert not Check("x", 1.0 + 1e-6, upper=1.0).holds
    assert Check("x", 5.0, upper=1.0, applicable=False).holds
    assert Check("x", 2.0, lower=1.0, upper=3.0).slack == 1.0


def test_trace_bound_examples():
    c = trace_bound(path(3))
    assert c.value == pytest.approx(16 / 9) and c.upper == 6 and c.holds and not c.equality
    assert trace_bound(cycle(5)).value == pytest.approx(10.0)
    assert trace_bound(cycle(5)).upper == 80
    k = trace_bound(complete(5))
    assert k.equality and k.holds


def test_theta_power():
    assert theta_power(isi_spectrum(complete(3))) == pytest.approx(2 ** (2 / 3))
    assert theta_power(isi_spectrum(star(4))) == 0.0


def test_mcclelland_examples():
    c = mcclelland_bounds(complete(3))
    assert c.value == pytest.approx(4.0)
    assert c.lower == pytest.approx(math.sqrt(6 + 6 * 2 ** (2 / 3)))
    assert c.upper == pytest.approx(math.sqrt(12 + 3 * 2 ** (2 / 3)))
    assert round(c.lower, 3) == 3.940 and round(c.upper, 3) == 4.094
    k2 = mcclelland_bounds(complete(2))
    assert k2.lower == pytest.approx(1.0) and k2.upper == pytest.approx(1.0) and k2.holds


def test_degree_bounds_examples():
    c = degree_bounds(path(3))
    assert c.lower == pytest.approx(1.0)
    assert c.upper == pytest.approx(math.sqrt(8))
    assert c.value == pytest.approx(4 * math.sqrt(2) / 3)
    assert not degree_bounds(empty(3)).applicable


def test_connected_p3_bounds():
    checks = {c.name: c for c in connected_eigenvalue_bounds(path(3))}
    mid = checks["connected_tau_2"]
    assert mid.lower == pytest.approx(-1.0) and mid.upper == pytest.approx(1.0)
    assert mid.value == pytest.approx(0.0, abs=1e-12)


def test_stated_det_lower_bound_fails_on_k3():
    checks = {c.name: c for c in det_energy_bounds(complete(3))}
    assert checks["det_lower_sqrt"].holds
    stated = checks["det_lower_as_stated"]
    assert not stated.holds and not stated.expected_to_hold
    assert stated.lower == pytest.approx(3 * 2 ** (2 / 3))


def test_exhaustive_suite(connected_corpus):
    for g in connected_corpus:
        rep = run_all_bounds(g)
        assert rep.all_hold, [c.name for c in rep.failures()]


def test_eigenvalue_bounds_on_disconnected():
    for g in (disjoint_union(complete(3), complete(3)), disjoint_union(path(4), empty(2)), complete_bipartite(2, 5)):
        assert all(c.holds for c in eigenvalue_bounds(g))


def test_report_serialization():
    rep = run_all_bounds(cycle(5), "C5")
    d = rep.to_dict()
    assert d["graph"] == "C5" and len(d["checks"]) == len(rep.checks)
    rows = list(csv.DictReader(io.StringIO(rep.to_csv())))
    assert len(rows) == len(rep.checks)
    assert rows[0]["name"] == "trace_vs_complete" and float(rows[0]["value"]) == 10.0
    assert rep.by_name("mcclelland").holds
    with pytest.raises(KeyError):
        rep.by_name("nope")
