"""Classical radiation-damped dynamics of a charged particle.

The runaway-free formulation replaces the third-derivative damping term
by an exponentially weighted average of the external force over a short
window of the future (pre-acceleration).  After that smoothing the
motion obeys an ordinary second-order equation, which a fixed-step
velocity-Verlet scheme integrates deterministically.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .constants import PhysicalConfig
from .numerics import halfline_rule, solve_cubic


@dataclass(frozen=True)
class RadiationDampingParams:
    """Mass and radiation time used by the damped dynamics.

    Units are the caller's; only the product omega_0 * tau_0 matters
    for the physics, so scaled test systems are welcome.
    """

    m_R: float
    tau_0: float

    def __post_init__(self):
        if self.m_R <= 0 or self.tau_0 <= 0:
            raise ValueError("m_R and tau_0 must be positive")

    @classmethod
    def from_config(cls, cfg: PhysicalConfig) -> "RadiationDampingParams":
        return cls(m_R=cfg.mass_natural, tau_0=cfg.radiation_time)


@dataclass(frozen=True)
class TrajectoryResult:
    """Sampled solution of the radiation-damped equation of motion."""

    times: np.ndarray          # (n,)
    position: np.ndarray       # (n, d)
    velocity: np.ndarray       # (n, d)
    acceleration: np.ndarray   # (n, d)
    diagnostics: dict

    def export_csv(self, path) -> None:
        """Write (t, x, v, a) columns; vector components are suffixed."""
        d = self.position.shape[1]
        cols = ["t"]
        for name in ("x", "v", "a"):
            cols += [name if d == 1 else f"{name}{i}" for i in range(d)]
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(",".join(cols) + "\n")
            for i, t in enumerate(self.times):
                row = [t, *self.position[i], *self.velocity[i],
                       *self.acceleration[i]]
                fh.write(",".join(f"{v:.16e}" for v in row) + "\n")


def abraham_lorentz_solve(force, r0, v0, t_span, step,
                          params: RadiationDampingParams) -> TrajectoryResult:
    """Integrate the runaway-free radiation-damped equation of motion.

    ``force(t, x, v)`` must broadcast: given arrays t (n,), x (n, d),
    v (n, d) it returns the force (n, d).  At every acceleration
    evaluation the force is smoothed over the future window
    int_0^inf e^{-s} F(t + tau_0 s) ds, with the state extrapolated
    ballistically over the (tiny) pre-acceleration horizon.  A vanishing
    force therefore conserves the velocity exactly: runaways are
    excluded by construction.
    """
    t0, t1 = float(t_span[0]), float(t_span[1])
    if not t1 > t0:
        raise ValueError("t_span must be increasing")
    if step <= 0:
        raise ValueError("step must be positive")

    r = np.atleast_1d(np.asarray(r0, dtype=float)).copy()
    v = np.atleast_1d(np.asarray(v0, dtype=float)).copy()
    d = r.size
    m, tau0 = params.m_R, params.tau_0
    s_nodes, s_weights = halfline_rule()
    ts_off = tau0 * s_nodes                       # future offsets (k,)

    def accel(t, x, vel, a_prev):
        ts = t + ts_off
        xs = x[None, :] + ts_off[:, None] * vel[None, :] \
            + 0.5 * ts_off[:, None]**2 * a_prev[None, :]
        vs = vel[None, :] + ts_off[:, None] * a_prev[None, :]
        f = np.asarray(force(ts, xs, vs), dtype=float)
        if f.shape != (s_nodes.size, d):
            raise ValueError(
                f"force returned shape {f.shape}, expected {(s_nodes.size, d)}")
        return (s_weights[:, None] * f).sum(axis=0) / m

    n_steps = int(math.ceil((t1 - t0) / step))
    times = t0 + step * np.arange(n_steps + 1)
    times[-1] = min(times[-1], t1)

    pos = np.empty((n_steps + 1, d))
    vel = np.empty((n_steps + 1, d))
    acc = np.empty((n_steps + 1, d))

    a = accel(t0, r, v, np.zeros(d))
    a = accel(t0, r, v, a)        # one bootstrap pass for the a-dependence
    pos[0], vel[0], acc[0] = r, v, a
    max_resid = 0.0

    for i in range(n_steps):
        dt = times[i + 1] - times[i]
        r_new = r + v * dt + 0.5 * a * dt**2
        v_guess = v + a * dt
        a_new = a
        for _ in range(2):
            a_next = accel(times[i + 1], r_new, v_guess, a)
            v_guess = v + 0.5 * (a + a_next) * dt
            resid = float(np.abs(a_next - a_new).max())
            a_new = a_next
        max_resid = max(max_resid, resid)
        r, v, a = r_new, v_guess, a_new
        pos[i + 1], vel[i + 1], acc[i + 1] = r, v, a

    return TrajectoryResult(
        times=times, position=pos, velocity=vel, acceleration=acc,
        diagnostics={"steps": n_steps, "max_accel_residual": max_resid},
    )


@dataclass(frozen=True)
class HarmonicRootReport:
    """Characteristic frequencies of the radiation-damped oscillator."""

    physical_pair: tuple[complex, complex]
    runaway_root: float
    perturbative_pair: tuple[complex, complex]
    damping_gamma: float


def harmonic_roots(omega_0: float,
                   params: RadiationDampingParams) -> HarmonicRootReport:
    """Exact and perturbative mode frequencies of the damped oscillator.

    The exponential ansatz turns the equation of motion into the cubic
    z^2 - tau_0 z^3 + omega_0^2 = 0.  Its lone real positive root is the
    runaway mode and is reported only to be discarded; the conjugate
    pair carries the physics, with damping rate gamma = tau_0 omega_0^2.
    """
    if omega_0 <= 0:
        raise ValueError("omega_0 must be positive")
    tau0 = params.tau_0
    if omega_0 * tau0 >= 0.1:
        warnings.warn("omega_0 * tau_0 >= 0.1: perturbative pair is "
                      "unreliable", stacklevel=2)
    roots = solve_cubic(-tau0, 1.0, 0.0, omega_0**2)
    real_mask = roots.imag == 0.0
    if real_mask.sum() != 1:
        raise ArithmeticError(f"expected one real root, got {roots}")
    runaway = float(roots[real_mask][0].real)
    pair = roots[~real_mask]
    pair = tuple(sorted(pair, key=lambda z: -z.imag))
    gamma = tau0 * omega_0**2
    pert = (1j * omega_0 - 0.5 * gamma, -1j * omega_0 - 0.5 * gamma)
    return HarmonicRootReport(
        physical_pair=pair,
        runaway_root=runaway,
        perturbative_pair=pert,
        damping_gamma=gamma,
    )
