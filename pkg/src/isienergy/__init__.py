"""Inverse sum indeg (ISI) matrices, spectra and energies of simple graphs."""

from .bounds import BoundReport, run_all_bounds
from .coulson import QuadratureConfig, energy_by_form
from .graph import (
    Graph,
    GraphError,
    build_family,
    complement,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty,
    iterated_line_graph,
    line_graph,
    path,
    petersen,
    prism,
    star,
)
from .graphio import parse_edge_list, parse_graph6, write_edge_list, write_graph6
from .isi import (
    IsiSummary,
    adjacency_energy,
    closed_form_energy,
    isi_energy,
    isi_index,
    isi_matrix,
    isi_spectrum,
    q_value,
    summarize,
)
from .spectral import Spectrum, char_poly_coeffs, eigenvalues_symmetric, spectra_equal

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "run_all_bounds",
    "QuadratureConfig",
    "energy_by_form",
    "Graph",
    "GraphError",
    "build_family",
    "complement",
    "complete",
    "complete_bipartite",
    "cycle",
    "disjoint_union",
    "empty",
    "iterated_line_graph",
    "line_graph",
    "path",
    "petersen",
    "prism",
    "star",
    "parse_edge_list",
    "parse_graph6",
    "write_edge_list",
    "write_graph6",
    "IsiSummary",
    "adjacency_energy",
    "closed_form_energy",
    "isi_energy",
    "isi_index",
    "isi_matrix",
    "isi_spectrum",
    "q_value",
    "summarize",
    "Spectrum",
    "char_poly_coeffs",
    "eigenvalues_symmetric",
    "spectra_equal",
    "__version__",
]
