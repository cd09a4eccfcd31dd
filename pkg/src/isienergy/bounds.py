"""Inequality checks on ISI eigenvalues and ISI energy.

Every check is evaluated and recorded; nothing here raises on a violated
hypothesis. A comparison ``a <= b`` passes when ``a <= b + 1e-9 * max(1, |b|)``.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import asdict, dataclass, field

from .graph import Graph
from .isi import energy_of, isi_spectrum, q_value
from .spectral import Spectrum, log_abs_determinant

__all__ = [
    "Check",
    "BoundReport",
    "theta_power",
    "trace_bound",
    "eigenvalue_bounds",
    "connected_eigenvalue_bounds",
    "det_energy_bounds",
    "mcclelland_bounds",
    "degree_bounds",
    "run_all_bounds",
    "REL_TOL",
]

REL_TOL = 1e-9
DET_ZERO_TOL = 1e-12


def _le(a: float, b: float, tol: float = REL_TOL) -> bool:
    return a <= b + tol * max(1.0, abs(b))


@dataclass
class Check:
    name: str
    value: float
    lower: float | None = None
    upper: float | None = None
    hypothesis_ok: bool = True
    applicable: bool = True
    expected_to_hold: bool = True
    note: str = ""
    equality: bool | None = None
    holds: bool = field(init=False)
    slack: float = field(init=False)

    def __post_init__(self):
        ok = True
        gaps = []
        if self.lower is not None:
            ok &= _le(self.lower, self.value)
            gaps.append(self.value - self.lower)
        if self.upper is not None:
            ok &= _le(self.value, self.upper)
            gaps.append(self.upper - self.value)
        self.holds = bool(ok) if self.applicable else True
        self.slack = min(gaps) if gaps else math.inf

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class BoundReport:
    graph: str
    checks: list[Check]

    @property
    def all_hold(self) -> bool:
        """Every applicable check that is expected to hold does hold."""
        return all(c.holds for c in self.checks if c.applicable and c.expected_to_hold)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.applicable and not c.holds]

    def by_name(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {"graph": self.graph, "checks": [c.to_dict() for c in self.checks]}

    def to_csv(self, float_format: str = ".17g") -> str:
        buf = io.StringIO()
        cols = ["graph", "name", "lower", "value", "upper", "holds", "slack", "hypothesis_ok", "applicable"]
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(cols)
        for c in self.checks:
            row = [self.graph, c.name]
            for x in (c.lower, c.value, c.upper):
                row.append("" if x is None else format(x, float_format))
            row += [c.holds, format(c.slack, float_format), c.hypothesis_ok, c.applicable]
            writer.writerow(row)
        return buf.getvalue()


def theta_power(spectrum: Spectrum) -> float:
    """``|det S|^(2/n)`` via the log domain; exactly zero for a singular matrix."""
    n = len(spectrum)
    logdet = log_abs_determinant(spectrum, DET_ZERO_TOL)
    if logdet == -math.inf:
        return 0.0
    return math.exp(2.0 / n * logdet)


def trace_bound(g: Graph) -> Check:
    """``Q <= n (n-1)^3 / 4``, with equality exactly for K_n."""
    n = g.n
    q = q_value(g)
    upper = n * (n - 1) ** 3 / 4
    is_complete = g.m == n * (n - 1) // 2
    return Check(
        "trace_vs_complete",
        q,
        upper=upper,
        hypothesis_ok=g.is_connected(),
        equality=is_complete and abs(q - upper) <= REL_TOL * max(1.0, upper),
    )


def eigenvalue_bounds(g: Graph) -> list[Check]:
    n = g.n
    if n < 2:
        return []
    q = q_value(g)
    tau = isi_spectrum(g).values
    outer = math.sqrt(q / (n * (n - 1)))
    wide = math.sqrt((n - 1) * q / n)
    checks = [
        Check("tau_1", tau[0], lower=outer, upper=wide),
        Check("tau_n", tau[-1], lower=-wide, upper=-outer),
    ]
    for k in range(2, n):
        checks.append(
            Check(
                f"tau_{k}",
                tau[k - 1],
                lower=-math.sqrt((k - 1) * q / (n * (n - k + 1))),
                upper=math.sqrt((n - k) * q / (k * n)),
            )
        )
    return checks


def connected_eigenvalue_bounds(g: Graph) -> list[Check]:
    """Eigenvalue bounds with ``Q`` replaced by its complete-graph maximum."""
    n = g.n
    if n < 2:
        return []
    connected = g.is_connected()
    q = q_value(g)
    tau = isi_spectrum(g).values
    top = float((n - 1) ** 2)
    outer = math.sqrt(q / (n * (n - 1)))
    cube = (n - 1) ** 3
    checks = [
        Check("connected_tau_1", tau[0], lower=outer, upper=top, hypothesis_ok=connected),
        Check("connected_tau_n", tau[-1], lower=-top, upper=-outer, hypothesis_ok=connected),
    ]
    for k in range(2, n):
        checks.append(
            Check(
                f"connected_tau_{k}",
                tau[k - 1],
                lower=-math.sqrt((k - 1) * cube / (4 * (n - k + 1))),
                upper=math.sqrt((n - k) * cube / (4 * k)),
                hypothesis_ok=connected,
            )
        )
    return checks


def det_energy_bounds(g: Graph) -> list[Check]:
    """Energy against ``sqrt(nQ)`` above and determinant terms below.

    The lower bound ``n |det|^(2/n)`` is reported alongside the weaker
    ``sqrt(n |det|^(2/n))``. Only the latter follows from the mean
    inequalities; the former already fails for K_3 (4 < 3 * 2^(2/3)).
    """
    n = g.n
    if n < 2:
        return []
    spec = isi_spectrum(g)
    energy = energy_of(spec)
    q = q_value(g)
    tp = theta_power(spec)
    return [
        Check("det_upper_sqrt_nQ", energy, upper=math.sqrt(n * q)),
        Check("det_lower_sqrt", energy, lower=math.sqrt(n * tp)),
        Check(
            "det_lower_as_stated",
            energy,
            lower=n * tp,
            expected_to_hold=False,
            note="stated form n|det|^(2/n) <= E; not implied by its derivation, fails on K3",
        ),
    ]


def mcclelland_bounds(g: Graph) -> Check:
    n = g.n
    spec = isi_spectrum(g)
    q = q_value(g)
    tp = theta_power(spec)
    return Check(
        "mcclelland",
        energy_of(spec),
        lower=math.sqrt(q + n * (n - 1) * tp),
        upper=math.sqrt((n - 1) * q + n * tp),
        applicable=n >= 2,
    )


def degree_bounds(g: Graph) -> Check:
    n, m = g.n, g.m
    spec = isi_spectrum(g)
    energy = energy_of(spec)
    if n < 2 or m == 0:
        return Check("degree", energy, applicable=False, note="needs n >= 2 and at least one edge")
    lo_deg, hi_deg = min(g.degrees), max(g.degrees)
    tp = theta_power(spec)
    return Check(
        "degree",
        energy,
        lower=math.sqrt(m * lo_deg**2 / 2 + n * (n - 1) * tp),
        upper=math.sqrt(m * (n - 1) * hi_deg**2 / 2 + n * tp),
    )


def run_all_bounds(g: Graph, graph_id: str = "") -> BoundReport:
    checks = [trace_bound(g)]
    checks += eigenvalue_bounds(g)
    checks += connected_eigenvalue_bounds(g)
    checks += det_energy_bounds(g)
    checks.append(mcclelland_bounds(g))
    checks.append(degree_bounds(g))
    return BoundReport(graph_id, checks)
