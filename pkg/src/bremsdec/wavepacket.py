"""Gaussian wave packets under the free propagator with decoherence.

The reduced density matrix of a free particle evolves with the bare
Schroedinger propagator times exp(Gamma); for Gaussian states every
integral closes.  The closed forms (spreading, two-packet interference
at collision) are primary; a direct numerical evaluation of the double
phase-space integral serves as their oracle.

The closed-form API works in SI units at the boundary.  The numeric
oracle and the propagator kernel are expressed in natural units
(hbar = c = 1, lengths in light-seconds, mass in 1/s) because they are
exercised with toy-scaled parameters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .constants import PhysicalConfig
from .decoherence import coherence_length


def _vec3(x) -> np.ndarray:
    v = np.asarray(x, dtype=float).reshape(-1)
    if v.size == 1:
        v = np.array([float(v[0]), 0.0, 0.0])
    if v.shape != (3,):
        raise ValueError(f"expected scalar or 3-vector, got shape {v.shape}")
    return v


@dataclass(frozen=True)
class GaussianPacket:
    """Minimal-uncertainty Gaussian state.

    ``center`` in meters, ``sigma0`` in meters, ``wavevector`` in 1/m
    (the packet drifts with velocity -wavevector/m, matching the phase
    convention exp[-i k (x - a)]).
    """

    center: np.ndarray
    sigma0: float
    wavevector: np.ndarray = field(default_factory=lambda: np.zeros(3))
    amplitude: complex = 1.0 + 0.0j

    def __post_init__(self):
        object.__setattr__(self, "center", _vec3(self.center))
        object.__setattr__(self, "wavevector", _vec3(self.wavevector))
        if self.sigma0 <= 0:
            raise ValueError("sigma0 must be positive")


@dataclass(frozen=True)
class SuperpositionState:
    """One or two Gaussian packets with complex amplitudes."""

    packets: tuple
    normalized: bool = False

    def __post_init__(self):
        if not 1 <= len(self.packets) <= 2:
            raise ValueError("superposition supports 1 or 2 packets")
        widths = {p.sigma0 for p in self.packets}
        if len(widths) != 1:
            raise ValueError("packets must share a common width")


@dataclass(frozen=True)
class InterferenceReport:
    """Contrast and fringe data of the two-packet collision."""

    envelope_width_sigma_tf: float    # m
    envelope_center_b: np.ndarray     # m
    fringe_wavevector: float          # 1/m
    epsilon: float
    decoherence_factor_D: float
    visibility: float
    collision_time_t_f: float         # s
    coherence_length_m: float

    def to_dict(self) -> dict:
        return {
            "envelope_width_sigma_tf_m": self.envelope_width_sigma_tf,
            "envelope_center_b_m": list(self.envelope_center_b),
            "fringe_wavevector_per_m": self.fringe_wavevector,
            "epsilon": self.epsilon,
            "decoherence_factor_D": self.decoherence_factor_D,
            "visibility": self.visibility,
            "collision_time_t_f_s": self.collision_time_t_f,
            "coherence_length_m": self.coherence_length_m,
        }


# --- propagator and closed-form evolution ----------------------------

def free_propagator_kernel(delta_r, delta_q, t_f: float, m_R: float) -> complex:
    """Density-matrix propagator weight (natural units).

    G = (m_R / 2 pi t_f)^3 exp[i (m_R / t_f) delta_r . delta_q]; it is
    translation invariant, depending only on the coordinate differences.
    """
    if t_f <= 0:
        raise ValueError("t_f must be positive")
    dr = _vec3(delta_r)
    dq = _vec3(delta_q)
    phase = (m_R / t_f) * float(dr @ dq)
    return (m_R / (2.0 * math.pi * t_f)) ** 3 * complex(math.cos(phase),
                                                        math.sin(phase))


def evolved_width(sigma0: float, t_f: float, coherence_length_L: float,
                  m_R: float) -> float:
    """Evolved packet width in natural units (or any coherent unit set).

    sigma(t)^2 = sigma0^2 + t^2/(4 m^2 sigma0^2) + t^2/(m^2 L^2); a
    finite coherence length only ever widens the packet.
    """
    spread = sigma0**2 + t_f**2 / (4.0 * m_R**2 * sigma0**2)
    if math.isfinite(coherence_length_L):
        if coherence_length_L <= 0:
            raise ValueError("coherence length must be positive")
        spread += t_f**2 / (m_R**2 * coherence_length_L**2)
    return math.sqrt(spread)


def evolve_gaussian(packet: GaussianPacket, t_f: float,
                    coherence_length_L: float,
                    cfg: PhysicalConfig) -> tuple[np.ndarray, float]:
    """Center and width of the evolved packet (SI in, SI out).

    Pass ``math.inf`` as the coherence length for the bare Schroedinger
    evolution.
    """
    if t_f <= 0:
        raise ValueError("t_f must be positive")
    c = cfg.speed_of_light
    m = cfg.mass_natural
    a_ls = packet.center / c
    k_nat = packet.wavevector * c
    sigma_ls = packet.sigma0 / c
    l_ls = coherence_length_L / c if math.isfinite(coherence_length_L) \
        else math.inf
    b_ls = a_ls - k_nat * t_f / m
    sigma_tf = evolved_width(sigma_ls, t_f, l_ls, m)
    return b_ls * c, sigma_tf * c


# --- numeric oracle --------------------------------------------------

def evolve_density_numeric(state: SuperpositionState, t_f: float, m_R: float,
                           gamma_fn, x_grid, axis: int = 0,
                           n_nodes: int = 240) -> np.ndarray:
    """Axial density by direct evaluation of the double integral.

    Works in natural units on a single Cartesian axis (the Gaussian
    dynamics factorizes exactly).  ``gamma_fn`` maps the relative
    coordinate array q to the (non-positive) decoherence exponent; use
    ``lambda q: 0.0 * q`` for the bare evolution.  Intentionally slow
    and independent of the closed forms.
    """
    if t_f <= 0:
        raise ValueError("t_f must be positive")
    x_grid = np.asarray(x_grid, dtype=float)
    amps = np.array([p.amplitude for p in state.packets], dtype=complex)
    centers = np.array([p.center[axis] for p in state.packets])
    k0s = np.array([p.wavevector[axis] for p in state.packets])
    sigma0 = state.packets[0].sigma0

    def psi0(x):
        x = x[..., None]
        norm = (1.0 / (2.0 * math.pi * sigma0**2)) ** 0.25
        g = np.exp(-(x - centers) ** 2 / (4.0 * sigma0**2)
                   - 1j * k0s * (x - centers))
        return (amps * norm * g).sum(axis=-1)

    # quadrature domains: initial-position support and relative-coordinate
    # support (the cross terms peak at the center separation)
    r_lo = centers.min() - 9.0 * sigma0
    r_hi = centers.max() + 9.0 * sigma0
    q_half = 18.0 * sigma0 + abs(centers.max() - centers.min())

    xg, wg = np.polynomial.legendre.leggauss(n_nodes)
    r_nodes = 0.5 * (r_hi + r_lo) + 0.5 * (r_hi - r_lo) * xg
    r_w = 0.5 * (r_hi - r_lo) * wg
    q_nodes = q_half * xg
    q_w = q_half * wg

    weight = np.exp(np.asarray(gamma_fn(q_nodes), dtype=float))
    initial = psi0(r_nodes[:, None] + 0.5 * q_nodes[None, :]) \
        * np.conj(psi0(r_nodes[:, None] - 0.5 * q_nodes[None, :]))
    initial = initial * weight[None, :]

    pref = m_R / (2.0 * math.pi * t_f)
    k = m_R / t_f
    density = np.empty(x_grid.size)
    for i, xf in enumerate(x_grid):
        phase = np.exp(-1j * k * (xf - r_nodes[:, None]) * q_nodes[None, :])
        val = (r_w[:, None] * q_w[None, :] * phase * initial).sum()
        density[i] = pref * val.real
    return density


def gaussian_density_1d(x, center: float, sigma: float):
    """Normalized 1D Gaussian probability density."""
    x = np.asarray(x, dtype=float)
    return (np.exp(-(x - center) ** 2 / (2.0 * sigma**2))
            / math.sqrt(2.0 * math.pi * sigma**2))


def collision_density_1d(x, sigma_tf: float, amplitudes, k0: float,
                         epsilon: float, re_phase: float):
    """Closed-form axial density of the two-packet collision.

    ``re_phase`` is the (negative) real part of the interference phase;
    the fringes carry wavevector 2 k0 (1 - epsilon).
    """
    x = np.asarray(x, dtype=float)
    a1, a2 = complex(amplitudes[0]), complex(amplitudes[1])
    envelope = gaussian_density_1d(x, 0.0, sigma_tf)
    cross = 2.0 * (a1 * np.conj(a2)
                   * np.exp(re_phase - 2j * k0 * x * (1.0 - epsilon))).real
    return envelope * (abs(a1) ** 2 + abs(a2) ** 2 + cross)


# --- the interference experiment -------------------------------------

def interference_collision(a: float, sigma0: float, k0: float, amplitudes,
                           cfg: PhysicalConfig,
                           exact_phase: bool = True) -> InterferenceReport:
    """Contrast of two packets launched from +-a with speeds -+k0/m.

    SI inputs: a and sigma0 in meters, k0 in 1/m.  The collision happens
    at the origin after t_f = a m / k0; the exact interference phase
    carries the (1 - epsilon) correction, which ``exact_phase=False``
    drops to recover the widely quoted small-epsilon form.
    """
    if k0 <= 0:
        raise ValueError("k0 must be positive for a collision")
    if a <= 0 or sigma0 <= 0:
        raise ValueError("a and sigma0 must be positive")
    a1, a2 = complex(amplitudes[0]), complex(amplitudes[1])
    if a1 == 0 or a2 == 0:
        raise ValueError("both amplitudes must be non-zero")

    c = cfg.speed_of_light
    m = cfg.mass_natural
    a_ls = a / c
    k_nat = k0 * c
    sigma_ls = sigma0 / c
    v = k_nat / m                       # v/c, dimensionless
    if v >= 1.0:
        raise ValueError("packet speed reaches c; non-relativistic only")
    t_f = a_ls / v

    l_ls = coherence_length(t_f, cfg) / c
    sigma_tf = evolved_width(sigma_ls, t_f, l_ls, m)
    eps = t_f**2 / (m**2 * l_ls**2 * sigma_tf**2)
    factor = (1.0 - eps) if exact_phase else 1.0
    re_phase = -2.0 * a_ls**2 / l_ls**2 * factor
    d = math.exp(re_phase)
    fringe_k = 2.0 * k0 * factor
    weight = abs(a1) ** 2 + abs(a2) ** 2
    visibility = 2.0 * abs(a1 * a2) * d / weight

    return InterferenceReport(
        envelope_width_sigma_tf=sigma_tf * c,
        envelope_center_b=np.zeros(3),
        fringe_wavevector=fringe_k,
        epsilon=eps,
        decoherence_factor_D=d,
        visibility=visibility,
        collision_time_t_f=t_f,
        coherence_length_m=l_ls * c,
    )


def measure_fringe_visibility(x, density) -> float:
    """Operational contrast (max - min)/(max + min) over the given window."""
    rho = np.asarray(density, dtype=float)
    hi, lo = rho.max(), rho.min()
    return (hi - lo) / (hi + lo)
