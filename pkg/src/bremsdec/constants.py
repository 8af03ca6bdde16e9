"""Physical constants, unit conversions and derived scales.

Single source of truth for every scale used by the physics modules.
Internally all computations use natural units (hbar = c = 1) with time
measured in seconds and length in light-seconds; SI values appear only
at the API boundary.  The squared charge is stored in Heaviside-Lorentz
convention, e^2 = 4 pi alpha.

Zero temperature is a first-class state: the thermal correlation time
and the thermal wavelength are represented as ``math.inf`` rather than
as a large float, so that vacuum formulas never inherit rounding from a
fake huge time scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# CODATA SI values
SPEED_OF_LIGHT = 2.99792458e8        # m / s (exact)
PLANCK_HBAR = 1.054571817e-34        # J s
BOLTZMANN_K = 1.380649e-23           # J / K (exact)
FINE_STRUCTURE_ALPHA = 1.0 / 137.035999
ELECTRON_REST_ENERGY = 8.1871057769e-14   # J  (m_e c^2)

DEFAULT_PREPARATION_TIME = 1e-21     # s


class ConfigError(ValueError):
    """A physical configuration value is out of its allowed range."""


@dataclass(frozen=True)
class PhysicalConfig:
    """Immutable bundle of physical constants and derived scales.

    All stored values are SI except where noted; the ``*_natural``
    helpers convert to the internal hbar = c = 1 convention (time in
    seconds, length in light-seconds, energy and mass in 1/s).
    """

    fine_structure_alpha: float
    electron_rest_energy: float      # J
    uv_cutoff_omega: float           # rad / s
    preparation_time_tau_p: float    # s
    temperature: float               # K
    speed_of_light: float
    planck_hbar: float
    boltzmann_k: float

    # derived
    compton_wavelength: float        # m, reduced
    classical_electron_radius: float # m
    radiation_time: float            # s
    thermal_correlation_time: float  # s, inf at T = 0
    thermal_wavelength: float        # m, inf at T = 0
    squared_charge: float            # 4 pi alpha, dimensionless
    low_temperature_valid: bool      # k_B T << m c^2

    @property
    def mass_natural(self) -> float:
        """Rest mass in natural units, m c^2 / hbar [1/s]."""
        return self.electron_rest_energy / self.planck_hbar

    @property
    def beta(self) -> float:
        """Inverse temperature hbar / (k_B T) in seconds; inf at T = 0."""
        if self.temperature == 0.0:
            return math.inf
        return self.planck_hbar / (self.boltzmann_k * self.temperature)

    # unit conversions ------------------------------------------------

    def length_to_natural(self, x_m):
        """Meters -> light-seconds."""
        return x_m / self.speed_of_light

    def length_from_natural(self, x_ls):
        """Light-seconds -> meters."""
        return x_ls * self.speed_of_light

    def wavevector_to_natural(self, k_per_m):
        """1/m -> 1/light-second."""
        return k_per_m * self.speed_of_light


def _require(name: str, value: float, *, positive=False, nonnegative=False):
    if not math.isfinite(value):
        raise ConfigError(f"{name} must be finite, got {value!r}")
    if positive and value <= 0:
        raise ConfigError(f"{name} must be positive, got {value!r}")
    if nonnegative and value < 0:
        raise ConfigError(f"{name} must be non-negative, got {value!r}")


def build_config(
    alpha: float = FINE_STRUCTURE_ALPHA,
    temperature_K: float = 0.0,
    *,
    electron_rest_energy: float = ELECTRON_REST_ENERGY,
    uv_cutoff_omega: float | None = None,
    tau_p: float = DEFAULT_PREPARATION_TIME,
    speed_of_light: float = SPEED_OF_LIGHT,
    planck_hbar: float = PLANCK_HBAR,
    boltzmann_k: float = BOLTZMANN_K,
) -> PhysicalConfig:
    """Build a validated :class:`PhysicalConfig` with all derived scales.

    The default UV cutoff is fixed by the rest energy, hbar Omega = m c^2.
    Raises :class:`ConfigError` naming the offending field on invalid input.
    """
    _require("alpha", alpha, positive=True)
    _require("temperature_K", temperature_K, nonnegative=True)
    _require("electron_rest_energy", electron_rest_energy, positive=True)
    _require("tau_p", tau_p, positive=True)
    _require("speed_of_light", speed_of_light, positive=True)
    _require("planck_hbar", planck_hbar, positive=True)
    _require("boltzmann_k", boltzmann_k, positive=True)

    if uv_cutoff_omega is None:
        uv_cutoff_omega = electron_rest_energy / planck_hbar
    _require("uv_cutoff_omega", uv_cutoff_omega, positive=True)

    mass_kg = electron_rest_energy / speed_of_light**2
    lambda_c = planck_hbar / (mass_kg * speed_of_light)
    r_e = alpha * lambda_c
    tau_0 = (2.0 / 3.0) * r_e / speed_of_light

    if temperature_K > 0:
        tau_b = planck_hbar / (math.pi * boltzmann_k * temperature_K)
        lambda_th = planck_hbar / math.sqrt(
            2.0 * mass_kg * boltzmann_k * temperature_K)
        low_t = boltzmann_k * temperature_K < 1e-2 * electron_rest_energy
    else:
        tau_b = math.inf
        lambda_th = math.inf
        low_t = True

    return PhysicalConfig(
        fine_structure_alpha=alpha,
        electron_rest_energy=electron_rest_energy,
        uv_cutoff_omega=uv_cutoff_omega,
        preparation_time_tau_p=tau_p,
        temperature=temperature_K,
        speed_of_light=speed_of_light,
        planck_hbar=planck_hbar,
        boltzmann_k=boltzmann_k,
        compton_wavelength=lambda_c,
        classical_electron_radius=r_e,
        radiation_time=tau_0,
        thermal_correlation_time=tau_b,
        thermal_wavelength=lambda_th,
        squared_charge=4.0 * math.pi * alpha,
        low_temperature_valid=low_t,
    )


def mass_renormalization(cfg: PhysicalConfig) -> tuple[float, float]:
    """Electromagnetic mass shift from the UV cutoff.

    Returns ``(delta_m_over_m, m_R)`` where the shift is
    delta_m = e^2 Omega / (3 pi^2) in natural units (linear in the
    cutoff) and ``m_R`` is the renormalized mass in 1/s.  With the
    default cutoff hbar Omega = m c^2 the ratio equals 4 alpha / (3 pi).
    """
    delta_m = cfg.squared_charge * cfg.uv_cutoff_omega / (3.0 * math.pi**2)
    m = cfg.mass_natural
    return delta_m / m, m + delta_m


# --- plain key = value config files ---------------------------------

_CONFIG_KEYS = {
    "alpha": "alpha",
    "temperature": "temperature_K",
    "temperature_K": "temperature_K",
    "electron_rest_energy": "electron_rest_energy",
    "uv_cutoff_omega": "uv_cutoff_omega",
    "tau_p": "tau_p",
    "speed_of_light": "speed_of_light",
    "planck_hbar": "planck_hbar",
    "boltzmann_k": "boltzmann_k",
}


def parse_config_file(path) -> dict[str, float]:
    """Read a flat ``key = value`` file with ``#`` comments.

    Returns a mapping of raw keys to floats; unknown keys are kept so
    that scenario parameters can live in the same file.
    """
    values: dict[str, float] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(
                    f"{path}:{lineno}: expected 'key = value', got {raw!r}")
            key, _, val = line.partition("=")
            key = key.strip()
            try:
                values[key] = float(val.strip())
            except ValueError as exc:
                raise ConfigError(
                    f"{path}:{lineno}: malformed number {val.strip()!r}"
                ) from exc
    return values


def config_from_mapping(values: dict[str, float]) -> PhysicalConfig:
    """Build a config from a mapping, ignoring non-physical keys."""
    kwargs = {}
    for key, val in values.items():
        if key in _CONFIG_KEYS:
            kwargs[_CONFIG_KEYS[key]] = val
    alpha = kwargs.pop("alpha", FINE_STRUCTURE_ALPHA)
    temperature = kwargs.pop("temperature_K", 0.0)
    return build_config(alpha, temperature, **kwargs)
