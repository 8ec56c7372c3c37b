"""Coupling chain from resonator geometry to the collective Rabi frequency.

mode geometry -> field per photon -> molecular dipole -> single
quasimolecule Rabi frequency Omega -> resonant pair count N(delta) ->
collective coupling Omega~(delta) = Omega * sqrt(N), plus the
Landau-Zener estimate of the excitation probability at the crossing.

Two coupling modes are supported:

* ``anchored`` (default): Omega~(delta) = ref * |delta_ref/delta|, pinned
  to a reference point.  This is the 1/|delta| scaling that sqrt(N)
  implies, anchored so the trap-depth resonance condition holds at the
  reference detuning.
* ``microscopic``: Omega~ built from the geometry and gas parameters as
  Omega * sqrt(N(delta)); used for consistency checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .constants import C_LIGHT, HBAR, PhysicalParams
from .errors import ConfigError, DomainError
from .potential import condon_radius, potential_slope

#: fixed orientation/mode-profile average <|f_c|^2><|eps.e|^2> = 1/6
ORIENTATION_AVERAGE = 1.0 / 6.0

COUPLING_MODES = ("anchored", "microscopic")


@dataclass(frozen=True)
class CavityConfig:
    """Resonator geometry, gas parameters, and the coupling model."""

    length: float                        # mirror separation, cm
    omega_c: float                       # mode frequency, rad/s
    n_atoms_total: float                 # N_A
    density: float                       # n_A, cm^-3
    coupling_mode: str = "anchored"
    omega_tilde_ref: Optional[float] = None   # rad/s, anchored mode
    delta_ref: Optional[float] = None         # rad/s (< 0), anchored mode

    def __post_init__(self):
        if self.length <= 0.0 or self.n_atoms_total <= 0.0 or self.density <= 0.0:
            raise ConfigError("cavity length, n_atoms and density must be positive")
        if self.coupling_mode not in COUPLING_MODES:
            raise ConfigError(
                f"coupling.mode must be one of {COUPLING_MODES}, "
                f"got {self.coupling_mode!r}")
        if self.coupling_mode == "anchored":
            if self.omega_tilde_ref is None or self.omega_tilde_ref <= 0.0:
                raise ConfigError(
                    "coupling.omega_tilde_ref_mhz must be positive in anchored mode")
            if self.delta_ref is None or self.delta_ref >= 0.0:
                raise ConfigError(
                    "coupling.delta_ref_mhz must be negative in anchored mode")


@dataclass(frozen=True)
class CouplingPoint:
    """Coupling quantities at one detuning."""

    delta: float          # rad/s
    omega_single: float   # averaged single quasimolecule Rabi frequency, rad/s
    n_pairs: float        # resonant pair count N
    omega_tilde: float    # collective Rabi frequency, rad/s


def mode_geometry(config: CavityConfig) -> tuple[float, float]:
    """Gaussian mode waist w0 = sqrt(c*l/omega_c) (cm) and volume pi*w0^2*l (cm^3)."""
    if config.length <= 0.0 or config.omega_c <= 0.0:
        raise DomainError("cavity length and mode frequency must be positive")
    waist = math.sqrt(C_LIGHT * config.length / config.omega_c)
    return waist, math.pi * waist**2 * config.length


def field_per_photon(omega: float, volume: float) -> float:
    """Vacuum field amplitude (2*pi*hbar*omega/V)^(1/2), (erg/cm^3)^(1/2)."""
    if omega <= 0.0 or volume <= 0.0:
        raise DomainError("mode frequency and volume must be positive")
    return math.sqrt(2.0 * math.pi * HBAR * omega / volume)


def atomic_dipole(params: PhysicalParams) -> float:
    """Atomic dipole moment from the decay rate, esu*cm.

    Inverts Gamma_A = 4*d_A^2*omega_a^3/(3*hbar*c^3); the pair transition
    dipole is sqrt(2) times this.
    """
    return math.sqrt(3.0 * HBAR * C_LIGHT**3 * params.gamma_a
                     / (4.0 * params.omega_a**3))


def molecular_dipole(params: PhysicalParams) -> float:
    """Pair transition dipole sqrt(2)*d_A, esu*cm."""
    return math.sqrt(2.0) * atomic_dipole(params)


def single_rabi(config: CavityConfig, params: PhysicalParams) -> float:
    """Orientation-averaged single quasimolecule Rabi frequency (rad/s)."""
    _, volume = mode_geometry(config)
    field = field_per_photon(config.omega_c, volume)
    return (field * molecular_dipole(params)
            * math.sqrt(ORIENTATION_AVERAGE) / HBAR)


def pair_count(delta: float, config: CavityConfig,
               params: PhysicalParams) -> float:
    """Number of pairs resonant within a linewidth of the Condon radius.

    N(delta) = N_A * n_A * (2*pi*C3 / (3*hbar*Gamma)) * (Gamma/delta)^2,
    an order-of-magnitude count that scales as delta^-2.
    """
    if delta >= 0.0:
        raise DomainError(f"red detuning required, got delta={delta!r}")
    gamma = params.gamma_mol
    return (config.n_atoms_total * config.density
            * (2.0 * math.pi * params.c3 / (3.0 * HBAR * gamma))
            * (gamma / delta) ** 2)


def collective_rabi(delta: float, config: CavityConfig,
                    params: PhysicalParams) -> CouplingPoint:
    """Collective Rabi frequency at one detuning, with N back-filled.

    The mode frequency tracks the scan point: omega_c = omega_a + delta.
    """
    if delta >= 0.0:
        raise DomainError(f"red detuning required, got delta={delta!r}")
    point_config = CavityConfig(
        length=config.length,
        omega_c=params.omega_a + delta,
        n_atoms_total=config.n_atoms_total,
        density=config.density,
        coupling_mode=config.coupling_mode,
        omega_tilde_ref=config.omega_tilde_ref,
        delta_ref=config.delta_ref,
    )
    omega_single = single_rabi(point_config, params)
    if config.coupling_mode == "microscopic":
        n_pairs = pair_count(delta, config, params)
        omega_tilde = omega_single * math.sqrt(n_pairs)
    else:
        omega_tilde = config.omega_tilde_ref * abs(config.delta_ref / delta)
        # dipole (and Omega) vanish in the decay-free limit; the implied
        # pair count is then unbounded rather than an error
        n_pairs = ((omega_tilde / omega_single) ** 2
                   if omega_single > 0.0 else math.inf)
    return CouplingPoint(delta=delta, omega_single=omega_single,
                         n_pairs=n_pairs, omega_tilde=omega_tilde)


def landau_zener(delta: float, omega_tilde: float, v_inf: float,
                 params: PhysicalParams) -> float:
    """Excitation probability 1 - exp(-2*pi*Dt) at the Condon crossing.

    Dt = hbar*omega_tilde^2 / (v_inf * |U'(R_C)|).  With the shipped
    couplings Dt >> 1 and the probability saturates near one; it is
    reported separately and never multiplied into the loss curves.
    """
    if v_inf <= 0.0:
        raise DomainError(f"asymptotic velocity must be positive, got {v_inf!r}")
    if omega_tilde < 0.0:
        raise DomainError(
            f"collective Rabi frequency must be >= 0, got {omega_tilde!r}")
    slope = potential_slope(condon_radius(delta, params), params)
    adiabaticity = HBAR * omega_tilde**2 / (v_inf * slope)
    return -math.expm1(-2.0 * math.pi * adiabaticity)
