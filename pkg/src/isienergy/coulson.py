"""Coulson-type integral formulas for ISI energy, evaluated numerically.

All three formulas take the characteristic-polynomial coefficients
``[1, b1, ..., bn]`` and integrate an even function of a real variable,
so only ``[0, inf)`` is integrated and the result doubled.

derivative
    ``(1/pi) int (n - x P'(x) / P(x)) dl`` at ``x = i l``.
log
    ``(1/2pi) int l^-2 log(Ev(l)^2 + Od(l)^2) dl`` where ``Ev``/``Od``
    collect the even/odd-indexed coefficients with alternating signs.
corollary
    ``(1/pi) int l^-2 log|l^n P(i/l)| dl``. The argument of the logarithm
    is complex in general; its modulus is used, which makes this form
    agree with ``log``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .quadrature import QuadratureError, integrate_gk
from .spectral import CharPolyCoeffs

__all__ = [
    "QuadratureConfig",
    "QuadratureError",
    "ImagAxisPolyValue",
    "FORMS",
    "eval_char_poly_imag",
    "derivative_integrand",
    "log_integrand",
    "corollary_integrand",
    "coulson_energy",
    "coulson_energy_logform",
    "coulson_energy_corollary_form",
    "energy_by_form",
]

RULES = ("tan", "truncated")
SERIES_CUTOFF = 1e-6
# eigenvalues far below the spectral scale make the derivative integrand a
# narrow spike at zero; decade breakpoints down to this depth resolve them
GRADING_DECADES = 12


@dataclass(frozen=True)
class QuadratureConfig:
    """Quadrature settings.

    ``rule="tan"`` maps ``l = s tan(t)`` onto ``t in [0, pi/2)`` and needs no
    cutoff. ``rule="truncated"`` integrates ``[0, cutoff]`` and adds an
    asymptotic tail; ``cutoff=None`` means ``1e3 * max(1, sqrt(Q))``.
    """

    cutoff: float | None = None
    panels: int = 16
    target_tol: float = 1e-6
    rule: str = "tan"
    max_intervals: int = 4000

    def __post_init__(self):
        if self.cutoff is not None and self.cutoff <= 0:
            raise ValueError("cutoff must be positive")
        if self.panels < 16:
            raise ValueError("panels must be >= 16")
        if self.target_tol <= 0:
            raise ValueError("target_tol must be positive")
        if self.rule not in RULES:
            raise ValueError(f"rule must be one of {RULES}")


@dataclass(frozen=True)
class ImagAxisPolyValue:
    real_part: np.ndarray | float
    imag_part: np.ndarray | float

    @property
    def modulus_squared(self):
        return self.real_part**2 + self.imag_part**2


def _coeffs(c) -> np.ndarray:
    arr = np.asarray(c.coeffs if isinstance(c, CharPolyCoeffs) else c, dtype=float)
    if arr.ndim != 1 or arr.size == 0 or arr[0] != 1.0:
        raise ValueError("expected monic coefficients [1, b1, ..., bn]")
    return arr


def _horner(coeffs_high_first, x):
    acc = np.zeros_like(x)
    for c in coeffs_high_first:
        acc = acc * x + c
    return acc


def _even_odd(b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Coefficients of Ev and Od as polynomials in l^2, constant term first."""
    n = b.size - 1
    ev = np.array([(-1) ** j * b[2 * j] for j in range(n // 2 + 1)])
    od = np.array([(-1) ** j * b[2 * j + 1] for j in range((n - 1) // 2 + 1)])
    return ev, od


def eval_char_poly_imag(coeffs, lam) -> ImagAxisPolyValue:
    """Real and imaginary parts of ``P(i l)`` via an even/odd split in ``l^2``."""
    b = _coeffs(coeffs)
    n = b.size - 1
    lam = np.asarray(lam, dtype=float)
    y = lam * lam
    # P(i l) = sum_k b_k (i l)^(n-k); n-k even feeds the real part
    re_c = [(-1) ** ((n - k) // 2) * b[k] for k in range(n + 1) if (n - k) % 2 == 0]
    im_c = [(-1) ** ((n - k - 1) // 2) * b[k] for k in range(n + 1) if (n - k) % 2 == 1]
    re = _horner(re_c, y)
    im = lam * _horner(im_c, y) if im_c else np.zeros_like(lam)
    if re.ndim == 0:
        return ImagAxisPolyValue(float(re), float(im))
    return ImagAxisPolyValue(re, im)


def _scaled_log_abs(coeffs_high_first, z: np.ndarray) -> np.ndarray:
    """``log|p(z)|`` by Horner with per-step renormalisation; never overflows."""
    v = np.zeros(z.shape, dtype=np.result_type(z, complex))
    logscale = np.zeros(z.shape)
    for c in coeffs_high_first:
        v = v * z
        if c != 0:
            logc = math.log(abs(c))
            top = np.maximum(logscale, logc)
            v = v * np.exp(logscale - top) + c * np.exp(-top)
            logscale = top
        mag = np.abs(v)
        nz = mag > 0
        logscale = np.where(nz, logscale + np.log(np.where(nz, mag, 1.0)), logscale)
        v = np.where(nz, v / np.where(nz, mag, 1.0), v)
    with np.errstate(divide="ignore"):
        return logscale + np.log(np.abs(v))


def _log1p_ratio(u: np.ndarray) -> np.ndarray:
    """``log1p(u) / u`` with the removable point at ``u = 0``."""
    safe = np.where(u == 0, 1.0, u)
    return np.where(np.abs(u) < 1e-12, 1.0 - u / 2, np.log1p(safe) / safe)


def derivative_integrand(coeffs, lam) -> np.ndarray:
    """``n - Re(x P'(x) / P(x))`` at ``x = i l``, with ``P'`` from exact coefficients."""
    b = _coeffs(coeffs)
    n = b.size - 1
    lam = np.atleast_1d(np.asarray(lam, dtype=float))
    out = np.empty_like(lam)
    small = np.abs(lam) <= 1.0
    if np.any(small):
        x = 1j * lam[small]
        dp = [(n - k) * b[k] for k in range(n)]
        out[small] = n - (x * _horner(dp, x) / _horner(b, x)).real
    if np.any(~small):
        # with y = 1/x: n - x P'/P = sum k b_k y^k / sum b_k y^k
        y = 1.0 / (1j * lam[~small])
        k = np.arange(n + 1)
        out[~small] = (_horner((k * b)[::-1], y) / _horner(b[::-1], y)).real
    return out


def log_integrand(coeffs, lam) -> np.ndarray:
    """``l^-2 log(Ev^2 + Od^2)`` with the removable singularity at zero handled."""
    b = _coeffs(coeffs)
    ev, od = _even_odd(b)
    lam = np.atleast_1d(np.asarray(lam, dtype=float))
    out = np.empty_like(lam)
    small = np.abs(lam) <= 1.0
    if np.any(small):
        x = lam[small]
        y = x * x
        # (Ev - 1) / l^2 and Od / l keep every term at its natural scale
        ev_m1 = _horner(ev[:0:-1], y) if ev.size > 1 else np.zeros_like(y)
        od_l = _horner(od[::-1], y) if od.size else np.zeros_like(y)
        ev_full = 1.0 + y * ev_m1
        u_over = ev_m1 * (ev_full + 1.0) + od_l * od_l
        u = y * u_over
        tiny = np.abs(x) < SERIES_CUTOFF
        out[small] = np.where(tiny, u_over, u_over * _log1p_ratio(u))
    if np.any(~small):
        x = lam[~small]
        y = x * x
        log_ev = _scaled_log_abs(ev[::-1], y)
        log_od = _scaled_log_abs(od[::-1], y) + np.log(np.abs(x)) if od.size else np.full_like(y, -np.inf)
        top = np.maximum(log_ev, log_od)
        log_r = 2 * top + np.log(np.exp(2 * (log_ev - top)) + np.exp(2 * (log_od - top)))
        out[~small] = log_r / y
    return out


def corollary_integrand(coeffs, lam) -> np.ndarray:
    """``l^-2 log|l^n P(i/l)|`` using complex arithmetic throughout."""
    b = _coeffs(coeffs)
    n = b.size - 1
    lam = np.atleast_1d(np.asarray(lam, dtype=float))
    out = np.empty_like(lam)
    # l^n P(i/l) = sum_k b_k i^(n-k) l^k = i^n (1 + d),  d = sum_{k>=1} b_k (-i)^k l^k
    rot = np.array([(-1j) ** k for k in range(n + 1)])
    c = b * rot
    small = np.abs(lam) <= 1.0
    if np.any(small):
        x = lam[small]
        dl = _horner(c[:0:-1], x.astype(complex)) if n else np.zeros_like(x, dtype=complex)
        # Re(d)/l^2 is free of the vanishing k=1 real term
        re_c = c.real
        re_over = _horner(re_c[:1:-1], x) if n >= 2 else np.zeros_like(x)
        u_over = 2 * re_over + np.abs(dl) ** 2
        u = x * x * u_over
        tiny = np.abs(x) < SERIES_CUTOFF
        out[small] = 0.5 * np.where(tiny, u_over, u_over * _log1p_ratio(u))
    if np.any(~small):
        x = lam[~small]
        out[~small] = _scaled_log_abs(c[::-1], x.astype(complex)) / (x * x)
    return out


def _rms_scale(b: np.ndarray) -> tuple[float, float]:
    p1 = -b[1] if b.size > 1 else 0.0
    p2 = p1 * p1 - 2 * b[2] if b.size > 2 else p1 * p1
    n = b.size - 1
    return max(p2, 0.0), math.sqrt(max(p2, 0.0) / max(n, 1))


def _half_line(f, b: np.ndarray, cfg: QuadratureConfig, tol: float, tail) -> float:
    q, s = _rms_scale(b)
    if q == 0.0:
        return 0.0
    near_zero = s * 10.0 ** -np.arange(1, GRADING_DECADES + 1)
    if cfg.rule == "tan":
        def g(t):
            return f(b, s * np.tan(t)) * s / np.cos(t) ** 2

        value, _ = integrate_gk(
            g, 0.0, math.pi / 2, tol, cfg.panels, cfg.max_intervals, np.arctan(near_zero / s)
        )
        return value
    cutoff = cfg.cutoff if cfg.cutoff is not None else 1e3 * max(1.0, math.sqrt(q))
    value, _ = integrate_gk(lambda x: f(b, x), 0.0, cutoff, tol, cfg.panels, cfg.max_intervals, near_zero)
    return value + tail(b, cutoff, q)


def _derivative_tail(b: np.ndarray, cutoff: float, q: float) -> float:
    # u = 1/l turns int_L^inf f(l) dl into int_0^(1/L) f(1/u) / u^2 du, a bounded integrand
    def g(u):
        return derivative_integrand(b, 1.0 / u) / (u * u)

    value, _ = integrate_gk(g, 0.0, 1.0 / cutoff, 1e-12 * max(1.0, q))
    return value


def _log_tail(b: np.ndarray, cutoff: float, q: float) -> float:
    # by parts: int_L^inf l^-2 log R = log R(L) / L + 2 int_0^(1/L) f(u) du,
    # f being the derivative-form integrand
    head = cutoff * log_integrand(b, np.array([cutoff]))[0]
    inner, _ = integrate_gk(lambda u: derivative_integrand(b, u), 0.0, 1.0 / cutoff, 1e-12)
    return head + 2 * inner


def coulson_energy(coeffs, cfg: QuadratureConfig | None = None) -> float:
    cfg = cfg or QuadratureConfig()
    b = _coeffs(coeffs)
    # E = (2/pi) int_0^inf
    half = _half_line(derivative_integrand, b, cfg, cfg.target_tol * math.pi / 2, _derivative_tail)
    return 2 * half / math.pi


def coulson_energy_logform(coeffs, cfg: QuadratureConfig | None = None) -> float:
    cfg = cfg or QuadratureConfig()
    b = _coeffs(coeffs)
    # E = (1/2pi) * 2 int_0^inf
    half = _half_line(log_integrand, b, cfg, cfg.target_tol * math.pi, _log_tail)
    return half / math.pi


def coulson_energy_corollary_form(coeffs, cfg: QuadratureConfig | None = None) -> float:
    cfg = cfg or QuadratureConfig()
    b = _coeffs(coeffs)
    # the tail of log|.| is half that of log|.|^2
    half = _half_line(
        corollary_integrand, b, cfg, cfg.target_tol * math.pi / 2,
        lambda bb, L, q: _log_tail(bb, L, q) / 2,
    )
    return 2 * half / math.pi


FORMS = {
    "derivative": coulson_energy,
    "log": coulson_energy_logform,
    "corollary": coulson_energy_corollary_form,
}


def energy_by_form(coeffs, form: str = "derivative", cfg: QuadratureConfig | None = None) -> float:
    try:
        fn = FORMS[form]
    except KeyError:
        raise ValueError(f"unknown form {form!r}; expected one of {sorted(FORMS)}") from None
    return fn(coeffs, cfg)
