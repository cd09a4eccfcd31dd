import pytest

from isienergy.graph import GraphError, circulant, complete, complete_bipartite, cycle, petersen, prism
from isienergy.equienergetic import (
    build_L2_pair,
    build_Lm_pair,
    line_graph_energy_formula,
    pad_with_isolated,
    seed_pair,
    verify_pair,
)
from isienergy.isi import isi_spectrum
from isienergy.spectral import spectra_equal


def test_seed_pair_and_formula():
    g1, g2 = seed_pair()
    assert g1.regularity() == g2.regularity() == 3 and g1.n == g2.n == 6
    assert line_graph_energy_formula(6, 3) == 108.0
    assert line_graph_energy_formula(6, 3, times=3) == 720.0
    with pytest.raises(GraphError):
        line_graph_energy_formula(6, 3, times=1)


def test_l2_pair():
    pair = build_L2_pair(*seed_pair())
    assert pair.g1.n == 18
    assert pair.energy1 == pytest.approx(108, abs=1e-6)
    assert pair.energy2 == pytest.approx(108, abs=1e-6)
    assert not pair.cospectral and pair.verified
    assert pair.classification == "equienergetic-noncospectral"
    assert pair.to_dict()["formula_energy"] == 108.0


def test_padding():
    pair = pad_with_isolated(build_L2_pair(*seed_pair()), 5)
    assert pair.g1.n == 23 and pair.verified
    assert pair.energy1 == pytest.approx(108, abs=1e-6)
    assert "padding" in pair.construction
    with pytest.raises(GraphError):
        pad_with_isolated(pair, 0)


def test_l3_pair():
    pair = build_Lm_pair(*seed_pair(), times=3)
    assert pair.g1.n == 54 and pair.g1.regularity() == 10
    assert pair.energy1 == pytest.approx(720, abs=1e-6) and pair.verified


def test_other_regular_pairs():
    # two non-cospectral 4-regular graphs on 8 vertices
    g1, g2 = circulant(8, [1, 2]), circulant(8, [1, 3])
    pair = build_L2_pair(g1, g2)
    assert pair.verified
    assert pair.energy1 == pytest.approx(line_graph_energy_formula(8, 4), abs=1e-6)


def test_rejections():
    with pytest.raises(GraphError, match="regular"):
        build_L2_pair(complete_bipartite(2, 3), prism(3))
    with pytest.raises(GraphError, match="degree"):
        build_L2_pair(cycle(6), cycle(6))
    with pytest.raises(GraphError, match="orders"):
        build_L2_pair(complete(4), prism(3))
    with pytest.raises(GraphError, match="cospectral"):
        build_L2_pair(prism(3), prism(3))
    with pytest.raises(GraphError, match="cap"):
        build_Lm_pair(petersen(), circulant(10, [1, 5]), times=5, size_cap=1000)


def test_verify_pair_classification():
    assert verify_pair(prism(3), prism(3)).classification == "cospectral"
    assert verify_pair(cycle(6), complete(6)).classification == "neither"
    with pytest.raises(GraphError):
        verify_pair(cycle(5), cycle(6))
    assert spectra_equal(isi_spectrum(cycle(6)), isi_spectrum(cycle(6)), 1e-8)
