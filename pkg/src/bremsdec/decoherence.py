"""Decoherence function, coherence length and decoherence factors.

A moving superposition component radiates; the resulting loss of
interference contrast is measured by a non-positive exponent built from
the noise kernel and the Fourier transform of the relative velocity
between the two density-matrix arguments.

Production code uses the closed-form asymptotics (preparation-time
cutoff, sinh-log thermal factor); direct frequency-space quadrature is
retained as an oracle for moderate cutoff-time products.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .constants import PhysicalConfig
from .numerics import QuadratureSpec, integrate_adaptive

EULER_GAMMA = 0.5772156649015329

_BETA_OMEGA_INFINITE = 50.0   # above this, extend thermal integral to inf
_MAX_CUTOFF_TIME = 1.2e6      # quadrature oracle limit on Omega * t_f
_RESONANCE_PHASE = 1e-3


# --- relative paths --------------------------------------------------

def _vec3(x) -> np.ndarray:
    v = np.asarray(x, dtype=float).reshape(-1)
    if v.size == 1:
        v = np.array([float(v[0]), 0.0, 0.0])
    if v.shape != (3,):
        raise ValueError(f"expected scalar or 3-vector, got shape {v.shape}")
    return v


@dataclass(frozen=True)
class FreeLinearPath:
    """Straight-line relative path from q_i to q_f over [0, t_f] (meters)."""

    q_i: np.ndarray
    q_f: np.ndarray
    t_f: float

    def __post_init__(self):
        object.__setattr__(self, "q_i", _vec3(self.q_i))
        object.__setattr__(self, "q_f", _vec3(self.q_f))
        if self.t_f <= 0:
            raise ValueError("t_f must be positive")


@dataclass(frozen=True)
class HarmonicQuarterPeriodPath:
    """Relative path of colliding packets in a harmonic trap.

    The separation starts at 2a and closes after a quarter period,
    q(t) = 2 a cos(omega_0 t) along x, with t_f = pi / (2 omega_0).
    """

    a: float                 # half the initial separation, meters
    omega_0: float           # trap frequency, rad/s
    t_f: float = field(default=0.0)

    def __post_init__(self):
        if self.omega_0 <= 0:
            raise ValueError("omega_0 must be positive")
        if self.t_f == 0.0:
            object.__setattr__(self, "t_f", math.pi / (2.0 * self.omega_0))
        if self.t_f <= 0:
            raise ValueError("t_f must be positive")


@dataclass(frozen=True)
class SampledPath:
    """Piecewise-linear relative path through sampled points (meters)."""

    times: np.ndarray
    q: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.times, dtype=float)
        q = np.asarray(self.q, dtype=float)
        if q.ndim == 1:
            q = np.column_stack([q, np.zeros_like(q), np.zeros_like(q)])
        if t.ndim != 1 or q.shape != (t.size, 3):
            raise ValueError("need times (n,) and q (n, 3)")
        if t[0] != 0.0 or (np.diff(t) <= 0).any():
            raise ValueError("times must strictly increase from 0")
        object.__setattr__(self, "times", t)
        object.__setattr__(self, "q", q)

    @property
    def t_f(self) -> float:
        return float(self.times[-1])


RelativePath = FreeLinearPath | HarmonicQuarterPeriodPath | SampledPath


# --- results ---------------------------------------------------------

@dataclass(frozen=True)
class DecoherenceResult:
    """Vacuum/thermal split of the decoherence exponent and derived scales."""

    gamma_vac: float
    gamma_th: float
    gamma_total: float
    coherence_length_L: float      # meters
    decoherence_factor_D: float
    method: str

    def to_dict(self) -> dict:
        return {
            "gamma_vac": self.gamma_vac,
            "gamma_th": self.gamma_th,
            "gamma_total": self.gamma_total,
            "coherence_length_m": self.coherence_length_L,
            "decoherence_factor_D": self.decoherence_factor_D,
            "method": self.method,
        }


# --- velocity Fourier transform --------------------------------------

def _expiw_minus_one_over_x(x, t_f):
    """(e^{i x t_f} - 1) / x, stable through x = 0 (array x)."""
    x = np.asarray(x, dtype=float)
    u = x * t_f
    small = np.abs(u) < _RESONANCE_PHASE
    xs = np.where(small, 1.0, x)
    phase = np.where(small, 1.0, u)
    closed = (np.cos(phase) - 1.0 + 1j * np.sin(phase)) / xs
    series = t_f * (1j - u / 2.0 - 1j * u**2 / 6.0 + u**3 / 24.0)
    return np.where(small, series, closed)


def velocity_fourier(path: RelativePath, omega, cfg: PhysicalConfig | None = None):
    """Fourier transform of the relative velocity, Q(omega).

    Returns a complex 3-vector (or (3, n) array for array omega) in the
    same length units as the path (meters).  omega = 0 reproduces the
    net displacement q_f - q_i analytically.
    """
    omega_arr = np.atleast_1d(np.asarray(omega, dtype=float))
    if (omega_arr < 0).any():
        raise ValueError("omega must be non-negative")
    scalar = np.ndim(omega) == 0

    if isinstance(path, FreeLinearPath):
        w = (path.q_f - path.q_i) / path.t_f
        # (e^{i w t_f} - 1)/(i w) = -i * (e^{i w t_f} - 1)/w
        kernel = -1j * _expiw_minus_one_over_x(omega_arr, path.t_f)
        q = w[:, None] * kernel[None, :]
    elif isinstance(path, HarmonicQuarterPeriodPath):
        w0, tf, a = path.omega_0, path.t_f, path.a
        plus = _expiw_minus_one_over_x(omega_arr + w0, tf)
        minus = _expiw_minus_one_over_x(omega_arr - w0, tf)
        qx = a * w0 * (plus - minus)
        q = np.vstack([qx, np.zeros_like(qx), np.zeros_like(qx)])
    elif isinstance(path, SampledPath):
        t = path.times
        dq = np.diff(path.q, axis=0)              # (nseg, 3)
        dt = np.diff(t)
        v = dq / dt[:, None]
        # exact transform of the piecewise-constant velocity
        wt = omega_arr[None, :] * t[:, None]       # (n, nomega)
        e = np.cos(wt) + 1j * np.sin(wt)
        seg = np.empty((dt.size, omega_arr.size), dtype=complex)
        small = omega_arr < 1e-300
        nz = ~small
        if nz.any():
            seg[:, nz] = (e[1:, nz] - e[:-1, nz]) / (1j * omega_arr[None, nz])
        if small.any():
            seg[:, small] = dt[:, None]
        q = np.einsum("sk,so->ko", v, seg)
    else:
        raise TypeError(f"unsupported path type {type(path).__name__}")

    if scalar:
        return q[:, 0]
    return q


def _abs_q_squared(path: RelativePath, omega: np.ndarray) -> np.ndarray:
    """|Q(omega)|^2 summed over components, in m^2."""
    if isinstance(path, FreeLinearPath):
        # closed form avoids the complex round trip
        dq2 = float(((path.q_f - path.q_i) ** 2).sum())
        u = omega * path.t_f
        small = np.abs(u) < _RESONANCE_PHASE
        us = np.where(small, 1.0, u)
        shape = np.where(small, 1.0 - u**2 / 12.0, 2.0 * (1.0 - np.cos(us)) / us**2)
        return dq2 * shape
    q = velocity_fourier(path, omega)
    return (np.abs(q) ** 2).sum(axis=0)


# --- quadrature route ------------------------------------------------

def _thermal_occupation(x):
    small = np.abs(x) < 1e-4
    xs = np.where(small, 1.0, x)
    closed = 2.0 / np.expm1(xs)
    series = 2.0 / np.where(small, x, 1.0) - 1.0 + x / 6.0
    return np.where(small, series, closed)


def gamma_vacuum_numeric(path: RelativePath, cfg: PhysicalConfig,
                         spec: QuadratureSpec | None = None) -> float:
    """Vacuum part of the decoherence exponent by frequency quadrature.

    Oracle-grade: refuses cutoff-time products beyond ~1e6 where direct
    oscillatory quadrature stops being sensible.
    """
    omega_c = cfg.uv_cutoff_omega
    t_f = path.t_f
    if omega_c * t_f > _MAX_CUTOFF_TIME:
        raise ValueError(
            f"Omega * t_f = {omega_c * t_f:.3g} too large for quadrature; "
            "use the asymptotic closed form")
    if spec is None:
        spec = QuadratureSpec(oscillation_period_hint=2.0 * math.pi / t_f)
    pref = cfg.squared_charge / (3.0 * math.pi**2)
    c2 = cfg.speed_of_light**2

    def integrand(w):
        return pref * w * _abs_q_squared(path, w) / c2

    val, _ = integrate_adaptive(integrand, 0.0, omega_c, spec)
    return -0.25 * val


def gamma_thermal_numeric(path: RelativePath, cfg: PhysicalConfig,
                          spec: QuadratureSpec | None = None) -> float:
    """Thermal part of the decoherence exponent by frequency quadrature.

    The integrand carries the exponentially decaying thermal occupation,
    so the upper limit is extended to the full cutoff only when the
    cutoff is thermally relevant; for k_B T << m c^2 the window
    truncates at beta*omega ~ 50.
    """
    beta = cfg.beta
    if math.isinf(beta):
        return 0.0
    omega_c = cfg.uv_cutoff_omega
    t_f = path.t_f
    if beta * omega_c > _BETA_OMEGA_INFINITE:
        cap = _BETA_OMEGA_INFINITE / beta
    else:
        warnings.warn("k_B T is not small against the rest energy; "
                      "thermal quadrature accuracy is reduced",
                      stacklevel=2)
        cap = omega_c
    cap = min(cap, omega_c)
    if spec is None:
        spec = QuadratureSpec(
            oscillation_period_hint=2.0 * math.pi / t_f
            if cap * t_f > 2.0 * math.pi else None)
    pref = cfg.squared_charge / (3.0 * math.pi**2)
    c2 = cfg.speed_of_light**2

    def integrand(w):
        return (pref * w * _thermal_occupation(beta * w)
                * _abs_q_squared(path, w) / c2)

    val, _ = integrate_adaptive(integrand, 0.0, cap, spec)
    return -0.25 * val


def gamma_numeric(path: RelativePath, cfg: PhysicalConfig,
                  spec: QuadratureSpec | None = None) -> float:
    """Total decoherence exponent by quadrature (vacuum + thermal)."""
    return (gamma_vacuum_numeric(path, cfg, spec)
            + gamma_thermal_numeric(path, cfg, spec))


# --- closed-form asymptotics -----------------------------------------

def log_sinh_ratio(x) -> float:
    """ln(sinh(x)/x), numerically stable from tiny to huge x."""
    x = float(x)
    if x == 0.0:
        return 0.0
    if x < 1e-4:
        return x * x / 6.0
    if x < 20.0:
        return math.log(math.sinh(x) / x)
    return x - math.log(2.0 * x) + math.log1p(-math.exp(-2.0 * x))


def _log_factors(t_f: float, cfg: PhysicalConfig,
                 include_log_offset: bool) -> tuple[float, float]:
    if t_f <= cfg.preparation_time_tau_p:
        raise ValueError(
            "t_f must exceed the preparation time for the asymptotic form")
    log_vac = math.log(t_f / cfg.preparation_time_tau_p)
    if include_log_offset:
        log_vac += EULER_GAMMA
    tau_b = cfg.thermal_correlation_time
    log_th = 0.0 if math.isinf(tau_b) else log_sinh_ratio(t_f / tau_b)
    return log_vac, log_th


def coherence_length(t_f: float, cfg: PhysicalConfig) -> float:
    """Time-dependent coherence length in meters.

    Grows essentially linearly with c t_f at zero temperature and is
    reduced by the thermal sinh-log factor at T > 0.
    """
    log_vac, log_th = _log_factors(t_f, cfg, include_log_offset=False)
    alpha = cfg.fine_structure_alpha
    l2 = (3.0 * math.pi / (4.0 * alpha)) / (log_vac + log_th)
    return math.sqrt(l2) * cfg.speed_of_light * t_f


def gamma_free_asymptotic(q_i, q_f, t_f: float, cfg: PhysicalConfig,
                          include_log_offset: bool = False) -> DecoherenceResult:
    """Closed-form decoherence exponent for the straight-line path.

    The UV cutoff is replaced by the physical preparation-time scale,
    Omega t_f -> t_f / tau_p.  ``include_log_offset`` adds the Euler
    constant from the exact cosine-integral asymptote, which the
    leading-log form drops; quadrature comparisons want it.
    """
    q_i = _vec3(q_i)
    q_f = _vec3(q_f)
    if t_f < 10.0 * cfg.preparation_time_tau_p:
        warnings.warn("t_f is not large against the preparation time; "
                      "asymptotics are marginal", stacklevel=2)
    log_vac, log_th = _log_factors(t_f, cfg, include_log_offset)
    dq2 = float(((q_f - q_i) ** 2).sum())
    scale = dq2 / (cfg.speed_of_light * t_f) ** 2
    pref = 2.0 * cfg.fine_structure_alpha / (3.0 * math.pi)
    gamma_vac = -pref * log_vac * scale
    gamma_th = -pref * log_th * scale
    total = gamma_vac + gamma_th
    length = coherence_length(t_f, cfg)
    return DecoherenceResult(
        gamma_vac=gamma_vac,
        gamma_th=gamma_th,
        gamma_total=total,
        coherence_length_L=length,
        decoherence_factor_D=math.exp(total),
        method="asymptotic",
    )


def decoherence_factor(separation: float, coherence_length_L: float) -> float:
    """Interference-contrast factor exp(-separation^2 / 2 L^2)."""
    if coherence_length_L <= 0:
        raise ValueError("coherence length must be positive")
    if separation < 0:
        raise ValueError("separation must be non-negative")
    return math.exp(-separation**2 / (2.0 * coherence_length_L**2))


def vacuum_factor_from_velocity(v: float, t_f: float,
                                cfg: PhysicalConfig) -> float:
    """Vacuum decoherence factor for packets colliding at speed v (m/s)."""
    if not 0.0 <= v < cfg.speed_of_light:
        raise ValueError("require 0 <= v < c")
    log_vac, _ = _log_factors(t_f, cfg, include_log_offset=False)
    alpha = cfg.fine_structure_alpha
    exponent = -(8.0 * alpha / (3.0 * math.pi)) * log_vac \
        * (v / cfg.speed_of_light) ** 2
    return math.exp(exponent)


def n_particle_gamma(gamma_single: float, n: int) -> float:
    """Exact quadratic particle-number scaling of the exponent."""
    if n < 1 or int(n) != n:
        raise ValueError("n must be a positive integer")
    if gamma_single > 0:
        raise ValueError("gamma must be non-positive")
    return float(n) ** 2 * gamma_single


def nparticle_velocity_bound(n: float, d_target: float, distance: float,
                             cfg: PhysicalConfig) -> tuple[float, float]:
    """Max speed keeping an N-particle superposition at contrast D.

    The traversal covers ``distance`` meters, so the evolution time is
    distance / v; the weak log dependence makes the fixed point converge
    in a handful of iterations.  Returns (v_max m/s, traversal time s).
    """
    if not 0.0 < d_target < 1.0:
        raise ValueError("d_target must lie in (0, 1)")
    if n < 1 or distance <= 0:
        raise ValueError("need n >= 1 and positive distance")
    alpha = cfg.fine_structure_alpha
    c = cfg.speed_of_light
    target = -math.log(d_target)
    v = 1e-10
    for _ in range(100):
        t_f = distance / v
        log_vac = math.log(t_f / cfg.preparation_time_tau_p)
        v_new = c * math.sqrt(
            target / ((8.0 * alpha / (3.0 * math.pi)) * log_vac * n**2))
        if abs(v_new - v) < 1e-12 * v_new:
            v = v_new
            break
        v = v_new
    return v, distance / v


# --- harmonic potential ----------------------------------------------

@dataclass(frozen=True)
class HarmonicDecoherenceResult:
    """Decoherence of packets colliding after a quarter period in a trap."""

    gamma: float
    t_f: float
    mean_square_velocity_ratio: float   # <(v/c)^2> over the quarter period
    d_vac_asymptotic: float
    method: str = "quadrature"


def gamma_harmonic(a: float, omega_0: float, cfg: PhysicalConfig,
                   spec: QuadratureSpec | None = None) -> HarmonicDecoherenceResult:
    """Decoherence exponent for the trapped-electron collision.

    Evaluates the two-resonance frequency integral by regularized
    quadrature (removable singularity at the trap frequency handled by
    a series branch) and attaches the vacuum asymptotic factor built
    from the time-averaged squared velocity, which equals half the peak
    value over the quarter period.
    """
    if omega_0 <= 0:
        raise ValueError("omega_0 must be positive")
    if omega_0 * cfg.radiation_time >= 0.1:
        warnings.warn("omega_0 * tau_0 is not small; weak-damping "
                      "treatment is unreliable", stacklevel=2)
    path = HarmonicQuarterPeriodPath(a=a, omega_0=omega_0)
    t_f = path.t_f
    if a == 0.0:
        gamma = 0.0
    else:
        gamma = (gamma_vacuum_numeric(path, cfg, spec)
                 + gamma_thermal_numeric(path, cfg, spec))
    # <v^2> of q'(t) = -2 a omega_0 sin(omega_0 t) over [0, pi/2 omega_0]
    v2_mean = 2.0 * (a * omega_0) ** 2
    v2_ratio = v2_mean / cfg.speed_of_light**2
    log_vac, _ = _log_factors(t_f, cfg, include_log_offset=False)
    d_vac = math.exp(-(8.0 * cfg.fine_structure_alpha / (3.0 * math.pi))
                     * log_vac * v2_ratio)
    return HarmonicDecoherenceResult(
        gamma=gamma,
        t_f=t_f,
        mean_square_velocity_ratio=v2_ratio,
        d_vac_asymptotic=d_vac,
    )


# --- high-temperature master-equation comparison ---------------------

def caldeira_leggett_length(t_f: float, temperature_K: float,
                            gamma_relax: float, mass_kg: float,
                            hbar: float = None, k_b: float = None) -> float:
    """Coherence length of the high-temperature master equation (meters).

    L^2 = thermal_wavelength^2 / (2 gamma t_f): it shrinks with time,
    opposite to the radiative coherence length which grows as c t_f.
    """
    from .constants import BOLTZMANN_K, PLANCK_HBAR
    hbar = PLANCK_HBAR if hbar is None else hbar
    k_b = BOLTZMANN_K if k_b is None else k_b
    if min(t_f, temperature_K, gamma_relax, mass_kg) <= 0:
        raise ValueError("all arguments must be positive")
    lam_th = hbar / math.sqrt(2.0 * mass_kg * k_b * temperature_K)
    return lam_th / math.sqrt(2.0 * gamma_relax * t_f)
