"""Dense symmetric eigenvalues, characteristic polynomials and spectrum comparison."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

__all__ = [
    "EigenConvergenceError",
    "Spectrum",
    "CharPolyCoeffs",
    "eigenvalues_symmetric",
    "char_poly_coeffs",
    "spectra_equal",
    "determinant",
    "log_abs_determinant",
    "DEFAULT_TOL",
    "DEFAULT_GROUPING_TOL",
]

DEFAULT_TOL = 1e-12
DEFAULT_GROUPING_TOL = 1e-8
MAX_SWEEPS = 100


class EigenConvergenceError(ArithmeticError):
    def __init__(self, sweeps: int, off_norm: float):
        super().__init__(f"Jacobi iteration did not converge in {sweeps} sweeps (off-norm {off_norm:.3e})")
        self.sweeps = sweeps
        self.off_norm = off_norm


@dataclass(frozen=True)
class Spectrum:
    """Real eigenvalues sorted non-increasing."""

    values: tuple[float, ...]
    grouping_tol: float = DEFAULT_GROUPING_TOL

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(sorted((float(v) for v in self.values), reverse=True)))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def as_array(self) -> np.ndarray:
        return np.array(self.values)

    def grouped(self) -> list[tuple[float, int]]:
        """Distinct eigenvalues with multiplicities, merging neighbours closer than ``grouping_tol``.

        Each group is reported by the mean of its members.
        """
        groups: list[list[float]] = []
        for v in self.values:
            if groups and groups[-1][-1] - v <= self.grouping_tol:
                groups[-1].append(v)
            else:
                groups.append([v])
        return [(sum(g) / len(g), len(g)) for g in groups]

    def scaled(self, factor: float) -> "Spectrum":
        return Spectrum(tuple(factor * v for v in self.values), self.grouping_tol)

    def with_zeros(self, count: int) -> "Spectrum":
        return Spectrum(self.values + (0.0,) * count, self.grouping_tol)


@dataclass(frozen=True)
class CharPolyCoeffs:
    """Monic coefficients ``[1, b1, ..., bn]`` of ``x^n + b1 x^(n-1) + ... + bn``."""

    coeffs: tuple[float, ...] = field(default=(1.0,))

    @property
    def n(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> float:
        return self.coeffs[i]

    def __call__(self, x):
        """Evaluate at real or complex ``x`` (Horner)."""
        acc = 0.0
        for b in self.coeffs:
            acc = acc * x + b
        return acc

    def derivative(self) -> tuple[float, ...]:
        """Coefficients of the derivative, highest power first."""
        n = self.n
        return tuple((n - i) * b for i, b in enumerate(self.coeffs[:-1]))

    def power_sums(self, upto: int) -> list[float]:
        """Newton power sums ``p_1..p_upto`` of the roots."""
        b = list(self.coeffs) + [0.0] * max(0, upto - self.n)
        p: list[float] = []
        for k in range(1, upto + 1):
            s = -k * b[k]
            for j in range(1, k):
                s -= b[j] * p[k - j - 1]
            p.append(s)
        return p


def _round_robin(size: int) -> list[tuple[np.ndarray, np.ndarray]]:
    # size is even; each round is a perfect matching, all rounds cover every pair once
    players = list(range(size))
    rounds = []
    for _ in range(size - 1):
        half = size // 2
        ps = np.array(players[:half])
        qs = np.array(players[::-1][:half])
        rounds.append((np.minimum(ps, qs), np.maximum(ps, qs)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def eigenvalues_symmetric(
    matrix,
    tol: float = DEFAULT_TOL,
    max_sweeps: int = MAX_SWEEPS,
    grouping_tol: float = DEFAULT_GROUPING_TOL,
) -> Spectrum:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Rotations are scheduled in round-robin order so that every round applies
    ``n // 2`` disjoint rotations at once. Iteration stops when the
    off-diagonal Frobenius norm drops below ``tol`` times the Frobenius norm
    of the input.

    Raises
    ------
    ValueError
        If the matrix is not square, not symmetric, or has non-finite entries.
    EigenConvergenceError
        If ``max_sweeps`` sweeps do not reach the tolerance.
    """
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    if tol <= 0:
        raise ValueError("tol must be positive")
    n = a.shape[0]
    norm = np.linalg.norm(a)
    if n <= 1 or norm == 0.0:
        return Spectrum(tuple(np.diag(a)), grouping_tol)

    size = n + (n % 2)
    if size != n:
        a = np.pad(a, ((0, 1), (0, 1)))
    rounds = _round_robin(size)
    off_mask = ~np.eye(size, dtype=bool)
    threshold = tol * norm

    for sweep in range(max_sweeps):
        off = math.sqrt(float(np.sum(a[off_mask] ** 2)))
        if off < threshold:
            break
        for p, q in rounds:
            apq = a[p, q]
            active = apq != 0.0
            if not active.any():
                continue
            p, q, apq = p[active], q[active], apq[active]
            theta = (a[q, q] - a[p, p]) / (2.0 * apq)
            t = np.sign(theta) / (np.abs(theta) + np.hypot(theta, 1.0))
            t[theta == 0.0] = 1.0
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            rp, rq = a[p, :].copy(), a[q, :].copy()
            a[p, :] = c[:, None] * rp - s[:, None] * rq
            a[q, :] = s[:, None] * rp + c[:, None] * rq
            cp, cq = a[:, p].copy(), a[:, q].copy()
            a[:, p] = cp * c - cq * s
            a[:, q] = cp * s + cq * c
            a[p, q] = 0.0
            a[q, p] = 0.0
    else:
        off = math.sqrt(float(np.sum(a[off_mask] ** 2)))
        if off >= threshold:
            raise EigenConvergenceError(max_sweeps, off)

    return Spectrum(tuple(np.diag(a)[:n]), grouping_tol)


def char_poly_coeffs(spectrum: Spectrum | Sequence[float]) -> CharPolyCoeffs:
    """Expand ``prod (x - tau_j)`` one linear factor at a time."""
    c = np.array([1.0])
    for tau in spectrum:
        nxt = np.append(c, 0.0)
        nxt[1:] -= tau * c
        c = nxt
    return CharPolyCoeffs(tuple(float(v) for v in c))


def spectra_equal(a: Spectrum, b: Spectrum, tol: float = DEFAULT_GROUPING_TOL) -> bool:
    if tol <= 0:
        raise ValueError("tol must be positive")
    if len(a) != len(b):
        return False
    return bool(np.all(np.abs(a.as_array() - b.as_array()) <= tol))


def log_abs_determinant(spectrum: Spectrum, zero_tol: float = 1e-12) -> float:
    """``log|det|`` as a sum of logs; ``-inf`` when any eigenvalue is below ``zero_tol``."""
    vals = np.abs(spectrum.as_array())
    if vals.size == 0:
        return 0.0
    if np.any(vals < zero_tol):
        return -math.inf
    return float(np.sum(np.log(vals)))


def determinant(spectrum: Spectrum, zero_tol: float = 1e-12) -> float:
    """Product of eigenvalues, via the log domain once ``n > 30``."""
    vals = spectrum.as_array()
    if vals.size <= 30:
        return float(np.prod(vals))
    logdet = log_abs_determinant(spectrum, zero_tol)
    if logdet == -math.inf:
        return 0.0
    sign = -1.0 if np.sum(vals < 0) % 2 else 1.0
    return sign * math.exp(logdet)
