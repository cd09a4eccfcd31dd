"""ISI matrices, spectra and energies, plus closed forms for standard families."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .graph import Graph, GraphError
from .spectral import Spectrum, determinant, eigenvalues_symmetric

__all__ = [
    "NoClosedForm",
    "IsiSummary",
    "TraceReport",
    "EvenEnergyReport",
    "DiameterLemmaReport",
    "edge_weight",
    "isi_matrix",
    "isi_spectrum",
    "adjacency_spectrum",
    "isi_energy",
    "adjacency_energy",
    "energy_of",
    "isi_index",
    "q_value",
    "summarize",
    "cycle_energy_formula",
    "closed_form_energy",
    "complement_bipartite_energy",
    "component_energy_sum",
    "check_trace_identities",
    "even_energy_decomposition",
    "detect_complete_bipartite_union_shape",
    "check_diameter_lemma",
    "ZERO_TOL",
]

ZERO_TOL = 1e-7


class NoClosedForm(LookupError):
    pass


def edge_weight(di: int, dj: int) -> float:
    return di * dj / (di + dj)


def isi_matrix(g: Graph) -> np.ndarray:
    """``S[i, j] = d_i d_j / (d_i + d_j)`` on edges, zero elsewhere (diagonal included)."""
    s = np.zeros((g.n, g.n))
    d = g.degrees
    for u, v in g.edges:
        w = edge_weight(d[u], d[v])
        s[u, v] = w
        s[v, u] = w
    return s


@lru_cache(maxsize=4096)
def isi_spectrum(g: Graph) -> Spectrum:
    return eigenvalues_symmetric(isi_matrix(g))


@lru_cache(maxsize=4096)
def adjacency_spectrum(g: Graph) -> Spectrum:
    return eigenvalues_symmetric(g.adjacency_matrix())


def energy_of(spectrum: Spectrum) -> float:
    return float(np.sum(np.abs(spectrum.as_array())))


def isi_energy(g: Graph) -> float:
    return energy_of(isi_spectrum(g))


def adjacency_energy(g: Graph) -> float:
    return energy_of(adjacency_spectrum(g))


def isi_index(g: Graph) -> float:
    d = g.degrees
    return math.fsum(edge_weight(d[u], d[v]) for u, v in g.edges)


def q_value(g: Graph) -> float:
    """Twice the sum of squared edge weights, taken from the degrees alone."""
    d = g.degrees
    return 2.0 * math.fsum(edge_weight(d[u], d[v]) ** 2 for u, v in g.edges)


@dataclass(frozen=True)
class IsiSummary:
    n: int
    m: int
    q: float
    theta: float
    isi_index: float
    energy: float
    spectrum: Spectrum

    def to_dict(self) -> dict:
        groups = self.spectrum.grouped()
        return {
            "n": self.n,
            "m": self.m,
            "q": self.q,
            "theta": self.theta,
            "isi_index": self.isi_index,
            "energy": self.energy,
            "spectrum": [v for v, _ in groups],
            "multiplicities": [k for _, k in groups],
        }


def summarize(g: Graph) -> IsiSummary:
    spec = isi_spectrum(g)
    return IsiSummary(
        n=g.n,
        m=g.m,
        q=q_value(g),
        theta=determinant(spec),
        isi_index=isi_index(g),
        energy=energy_of(spec),
        spectrum=spec,
    )


# -- closed forms -----------------------------------------------------------


def cycle_energy_formula(n: int) -> float:
    """Adjacency energy of C_n by residue class of n."""
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    if n % 4 == 0:
        return 4.0 / math.tan(math.pi / n)
    if n % 4 == 2:
        return 4.0 / math.sin(math.pi / n)
    return 2.0 / math.sin(math.pi / (2 * n))


def closed_form_energy(family: str | Graph, *params: int) -> float:
    """Closed-form ISI energy for a family tag, or ``(k/2) E(G)`` for a k-regular graph.

    Raises :class:`NoClosedForm` for anything else.
    """
    if isinstance(family, Graph):
        k = family.regularity()
        if k is None:
            raise NoClosedForm("graph is not regular and carries no family tag")
        return k / 2 * adjacency_energy(family)
    if family == "cycle":
        (n,) = params
        return cycle_energy_formula(n)
    if family == "complete":
        (n,) = params
        return float((n - 1) ** 2)
    if family == "complete-bipartite":
        m, n = params
        return 2 * (m * n) ** 1.5 / (m + n)
    if family == "star":
        (n,) = params
        if n < 2:
            raise GraphError("star needs n >= 2")
        return 2 * (n - 1) ** 1.5 / n
    if family == "empty":
        return 0.0
    if family == "path" and params and params[0] <= 2:
        return 0.0 if params[0] == 1 else 1.0
    raise NoClosedForm(f"no closed form for family {family!r}")


def complement_bipartite_energy(m: int, n: int) -> float:
    """ISI energy of the complement of K_{m,n}, i.e. of K_m plus K_n."""
    if m < 1 or n < 1:
        raise GraphError("m, n must be >= 1")
    return float(m * m + n * n - 2 * (m + n - 1))


def component_energy_sum(g: Graph) -> float:
    return math.fsum(isi_energy(g.subgraph(c)) for c in g.components())


# -- identity checks --------------------------------------------------------


@dataclass(frozen=True)
class TraceReport:
    eigen_sum: float
    eigen_square_sum: float
    q: float
    tol: float

    @property
    def sum_residual(self) -> float:
        return abs(self.eigen_sum)

    @property
    def square_residual(self) -> float:
        return abs(self.eigen_square_sum - self.q)

    @property
    def ok(self) -> bool:
        return self.sum_residual <= self.tol and self.square_residual <= self.tol


def check_trace_identities(g: Graph, tol: float = 1e-8) -> TraceReport:
    """Eigenvalue sum vs zero and squared sum vs the degree-based ``Q``."""
    vals = isi_spectrum(g).as_array()
    return TraceReport(
        eigen_sum=float(np.sum(vals)),
        eigen_square_sum=float(np.sum(vals**2)),
        q=q_value(g),
        tol=tol,
    )


@dataclass(frozen=True)
class EvenEnergyReport:
    energy: float
    positive_sum: float
    residual: float
    identity_holds: bool
    nearest_integer: int | None
    is_integer: bool
    integer_is_even: bool | None


def even_energy_decomposition(
    g: Graph, tol: float = ZERO_TOL, integer_tol: float = 1e-6
) -> tuple[float, EvenEnergyReport]:
    """Split the energy as twice the sum of positive eigenvalues.

    Also reports whether the energy is an integer (within ``integer_tol``)
    and, if it is, whether that integer is even.
    """
    if g.m == 0:
        raise GraphError("graph has no edges")
    vals = isi_spectrum(g).as_array()
    energy = float(np.sum(np.abs(vals)))
    pos = float(np.sum(vals[vals > tol]))
    residual = abs(energy - 2 * pos)
    nearest = round(energy)
    is_int = abs(energy - nearest) <= integer_tol
    report = EvenEnergyReport(
        energy=energy,
        positive_sum=pos,
        residual=residual,
        identity_holds=residual <= tol * g.n,
        nearest_integer=nearest if is_int else None,
        is_integer=is_int,
        integer_is_even=(nearest % 2 == 0) if is_int else None,
    )
    return pos, report


def detect_complete_bipartite_union_shape(spectrum: Spectrum, tol: float = ZERO_TOL) -> bool:
    """True iff there are at least two non-zero eigenvalues, all of one absolute value."""
    mags = np.abs(spectrum.as_array())
    nonzero = mags[mags > tol]
    if nonzero.size < 2:
        return False
    return bool(nonzero.max() - nonzero.min() <= tol)


@dataclass(frozen=True)
class DiameterLemmaReport:
    diameter: float
    tau1: float
    tau2: float
    applicable: bool
    holds: bool


def check_diameter_lemma(g: Graph, tol: float = 1e-9) -> DiameterLemmaReport:
    """For connected graphs of diameter >= 3 the top two eigenvalues satisfy ``t1 > t2 > 0``.

    For P_4 the second eigenvalue is 1/3.
    """
    if g.n < 2 or not g.is_connected():
        raise GraphError("lemma needs a connected graph with n >= 2")
    vals = isi_spectrum(g).values
    diam = g.diameter()
    holds = vals[0] - vals[1] > tol and vals[1] > tol
    return DiameterLemmaReport(diam, vals[0], vals[1], diam >= 3, holds)
