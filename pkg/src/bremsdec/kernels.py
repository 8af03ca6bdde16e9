"""Bath correlation functions of the radiation field in dipole coupling.

The environment seen by a non-relativistic charge is fixed by a linear
spectral density with a sharp UV cutoff.  Two real kernels follow: the
antisymmetric dissipation kernel (temperature independent) and the
symmetric noise kernel (temperature dependent through coth).  Closed
forms of the frequency integrals are primary; quadrature of the
defining integrals is demoted to a test oracle because the cutoff-time
product is astronomically large at physical parameters.

All kernels are expressed in natural units (1/s^2) with time in
seconds, and include the squared-charge factor e^2 = 4 pi alpha.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import PhysicalConfig
from .numerics import QuadratureSpec, integrate_adaptive

_SMALL_PHASE = 1e-4
_THERMAL_X_MAX = 60.0  # upper limit of beta*omega for the thermal integral


@dataclass(frozen=True)
class KernelContext:
    """Configuration view used by the kernel functions."""

    cfg: PhysicalConfig

    @property
    def omega_cutoff(self) -> float:
        return self.cfg.uv_cutoff_omega

    @property
    def beta(self) -> float:
        return self.cfg.beta

    @property
    def prefactor(self) -> float:
        """e^2 / (3 pi^2), the overall kernel strength."""
        return self.cfg.squared_charge / (3.0 * math.pi**2)


def spectral_density(omega, ctx: KernelContext):
    """Spectral density of the radiation bath: linear up to the cutoff.

    J(omega) = e^2/(3 pi^2) * omega for omega < Omega, zero above.
    """
    omega = np.asarray(omega, dtype=float)
    if (omega < 0).any():
        raise ValueError("spectral density is defined for omega >= 0")
    out = np.where(omega < ctx.omega_cutoff, ctx.prefactor * omega, 0.0)
    return out if out.ndim else float(out)


def dissipation_kernel(t, ctx: KernelContext):
    """Antisymmetric dissipation kernel D(t), independent of temperature.

    Elementary closed form of the sine transform of the spectral
    density; a Taylor branch protects small |Omega t| against
    cancellation.
    """
    t = np.asarray(t, dtype=float)
    omega = ctx.omega_cutoff
    x = omega * t
    small = np.abs(x) < _SMALL_PHASE
    xs = np.where(small, 1.0, x)  # dummy to silence 0/0 warnings
    closed = np.sin(xs) / xs**2 - np.cos(xs) / xs
    series = x / 3.0 - x**3 / 30.0
    out = ctx.prefactor * omega**2 * np.where(small, series, closed)
    return out if out.ndim else float(out)


def _vacuum_noise(x):
    # (cos x - 1)/x^2 + sin x / x, with its small-x expansion
    small = np.abs(x) < _SMALL_PHASE
    xs = np.where(small, 1.0, x)
    closed = (np.cos(xs) - 1.0) / xs**2 + np.sin(xs) / xs
    series = 0.5 - x**2 / 8.0 + x**4 / 144.0
    return np.where(small, series, closed)


def _thermal_occupation(beta_omega):
    # coth(x/2) - 1 = 2 / (e^x - 1), with the Laurent form near zero
    small = np.abs(beta_omega) < _SMALL_PHASE
    xs = np.where(small, 1.0, beta_omega)
    closed = 2.0 / np.expm1(xs)
    series = 2.0 / np.where(small, beta_omega, 1.0) - 1.0 + beta_omega / 6.0
    return np.where(small, series, closed)


def noise_kernel(t, ctx: KernelContext,
                 spec: QuadratureSpec | None = None):
    """Symmetric noise kernel D1(t).

    At T = 0 the closed form of the cosine transform is used directly.
    At T > 0 the thermal excess (the coth - 1 part) is obtained by
    regularized quadrature over the exponentially damped frequency
    window and added to the vacuum closed form.
    """
    t_arr = np.asarray(t, dtype=float)
    omega = ctx.omega_cutoff
    vac = ctx.prefactor * omega**2 * _vacuum_noise(omega * t_arr)
    if math.isinf(ctx.beta):
        return vac if vac.ndim else float(vac)

    beta = ctx.beta
    cap = min(omega, _THERMAL_X_MAX / beta)
    scalars = np.atleast_1d(t_arr)
    thermal = np.empty_like(scalars)
    for i, ti in enumerate(scalars):
        if spec is None:
            hint = (2.0 * math.pi / abs(ti)) if ti != 0 else None
            local = QuadratureSpec(oscillation_period_hint=hint)
        else:
            local = spec

        def integrand(w, ti=ti):
            return w * _thermal_occupation(beta * w) * np.cos(w * ti)

        val, _ = integrate_adaptive(integrand, 0.0, cap, local)
        thermal[i] = ctx.prefactor * val
    out = vac + thermal.reshape(t_arr.shape)
    return out if out.ndim else float(out)


def f_function(t, ctx: KernelContext):
    """The sharp-cutoff smearing function sin(Omega t)/t.

    Equals Omega at t = 0; under coarse graining it acts as a delta
    function of weight pi (documented, not asserted numerically).
    """
    t = np.asarray(t, dtype=float)
    omega = ctx.omega_cutoff
    x = omega * t
    small = np.abs(x) < 1e-8
    xs = np.where(small, 1.0, x)
    out = omega * np.where(small, 1.0 - x**2 / 6.0, np.sin(xs) / xs)
    return out if out.ndim else float(out)


def export_kernel_table(path, times, ctx: KernelContext) -> None:
    """Write a CSV table (t_seconds, D, D1) for plotting."""
    times = np.asarray(times, dtype=float)
    d = np.atleast_1d(dissipation_kernel(times, ctx))
    d1 = np.atleast_1d(noise_kernel(times, ctx))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("t_seconds,D_per_s2,D1_per_s2\n")
        for ti, di, d1i in zip(times, d, d1):
            fh.write(f"{ti:.16e},{di:.16e},{d1i:.16e}\n")
