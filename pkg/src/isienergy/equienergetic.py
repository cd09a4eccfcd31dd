"""Pairs of same-order graphs with equal ISI energy but different ISI spectra."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    DEFAULT_SIZE_CAP,
    Graph,
    GraphError,
    complete_bipartite,
    disjoint_union,
    empty,
    iterated_line_graph,
    prism,
)
from .graphio import write_graph6
from .isi import adjacency_spectrum, energy_of, isi_spectrum
from .spectral import Spectrum, spectra_equal

__all__ = [
    "EquienergeticPair",
    "seed_pair",
    "line_graph_energy_formula",
    "build_L2_pair",
    "build_Lm_pair",
    "pad_with_isolated",
    "verify_pair",
    "COSPECTRAL_TOL",
    "ENERGY_TOL",
]

COSPECTRAL_TOL = 1e-8
ENERGY_TOL = 1e-6


@dataclass(frozen=True)
class EquienergeticPair:
    g1: Graph
    g2: Graph
    energy1: float
    energy2: float
    spectrum1: Spectrum
    spectrum2: Spectrum
    cospectral: bool
    construction: str
    tol: float = ENERGY_TOL
    formula_energy: float | None = None

    @property
    def equienergetic(self) -> bool:
        return abs(self.energy1 - self.energy2) <= self.tol

    @property
    def classification(self) -> str:
        if self.cospectral:
            return "cospectral"
        if self.equienergetic:
            return "equienergetic-noncospectral"
        return "neither"

    @property
    def verified(self) -> bool:
        return self.classification == "equienergetic-noncospectral"

    def to_dict(self) -> dict:
        return {
            "construction": self.construction,
            "classification": self.classification,
            "n": self.g1.n,
            "g1": write_graph6(self.g1),
            "g2": write_graph6(self.g2),
            "energy1": self.energy1,
            "energy2": self.energy2,
            "formula_energy": self.formula_energy,
            "cospectral": self.cospectral,
            "spectrum1": list(self.spectrum1.values),
            "spectrum2": list(self.spectrum2.values),
        }


def seed_pair() -> tuple[Graph, Graph]:
    """K_{3,3} and the triangular prism: 3-regular, 6 vertices, not cospectral."""
    return complete_bipartite(3, 3), prism(3)


def line_graph_energy_formula(n: int, k: int, times: int = 2) -> float:
    """ISI energy of the ``times``-th line graph of a k-regular n-vertex graph (``times >= 2``).

    Iterating ``(n, k) -> (nk/2, 2k-2)`` reduces every case to the
    second-iterate formula ``2nk(2k-3)(k-2)``.
    """
    if times < 2:
        raise GraphError("formula covers the second line graph and beyond")
    for _ in range(times - 2):
        n, k = n * k // 2, 2 * k - 2
    return float(2 * n * k * (2 * k - 3) * (k - 2))


def verify_pair(g1: Graph, g2: Graph, tol: float = ENERGY_TOL, construction: str = "external") -> EquienergeticPair:
    if g1.n != g2.n:
        raise GraphError(f"graphs have different orders ({g1.n} vs {g2.n})")
    s1, s2 = isi_spectrum(g1), isi_spectrum(g2)
    return EquienergeticPair(
        g1, g2, energy_of(s1), energy_of(s2), s1, s2,
        cospectral=spectra_equal(s1, s2, COSPECTRAL_TOL),
        construction=construction,
        tol=tol,
    )


def _check_regular_inputs(g1: Graph, g2: Graph) -> tuple[int, int]:
    k1, k2 = g1.regularity(), g2.regularity()
    if k1 is None or k2 is None:
        raise GraphError("both inputs must be regular")
    if g1.n != g2.n:
        raise GraphError(f"inputs have different orders ({g1.n} vs {g2.n})")
    if k1 != k2:
        raise GraphError(f"inputs have different degrees ({k1} vs {k2})")
    if k1 < 3:
        raise GraphError(f"degree {k1} < 3: the second line graph has zero energy")
    if spectra_equal(adjacency_spectrum(g1), adjacency_spectrum(g2), COSPECTRAL_TOL):
        raise GraphError("inputs are cospectral (adjacency spectra agree)")
    return g1.n, k1


def build_Lm_pair(g1: Graph, g2: Graph, times: int, size_cap: int = DEFAULT_SIZE_CAP) -> EquienergeticPair:
    """Iterated line graphs of two non-cospectral k-regular graphs of the same order.

    The eigensolver energies must agree with the closed form to
    ``ENERGY_TOL``; otherwise :class:`ArithmeticError` is raised.
    """
    if times < 2:
        raise GraphError("need at least two line-graph iterations")
    n, k = _check_regular_inputs(g1, g2)
    h1 = iterated_line_graph(g1, times, size_cap)
    h2 = iterated_line_graph(g2, times, size_cap)
    pair = verify_pair(h1, h2, construction="L2-of-regular" if times == 2 else f"L{times}-of-regular")
    formula = line_graph_energy_formula(n, k, times)
    for e in (pair.energy1, pair.energy2):
        if abs(e - formula) > ENERGY_TOL * max(1.0, formula):
            raise ArithmeticError(f"eigensolver energy {e!r} disagrees with closed form {formula!r}")
    return EquienergeticPair(**{**pair.__dict__, "formula_energy": formula})


def build_L2_pair(g1: Graph, g2: Graph, size_cap: int = DEFAULT_SIZE_CAP) -> EquienergeticPair:
    return build_Lm_pair(g1, g2, 2, size_cap)


def pad_with_isolated(pair: EquienergeticPair, r: int) -> EquienergeticPair:
    """Add ``r`` isolated vertices to both graphs of a pair."""
    if r < 1:
        raise GraphError("r must be positive")
    pad = empty(r)
    h1, h2 = disjoint_union(pair.g1, pad), disjoint_union(pair.g2, pad)
    out = verify_pair(h1, h2, pair.tol, construction=f"{pair.construction}+isolated-padding")
    return EquienergeticPair(**{**out.__dict__, "formula_energy": pair.formula_energy})
