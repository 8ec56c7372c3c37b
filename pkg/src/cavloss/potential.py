"""Excited-state dipole-dipole potential and the resonance geometry.

The attractive pair potential is U(R) = -C3/R^3.  A red-detuned cavity
mode at omega_c = omega_a + delta (delta < 0) is resonant with the
R-dependent pair splitting at the Condon radius R_C, where
C3/R_C^3 = hbar*|delta|.  The coupling stays effective until the
splitting has walked off resonance by the collective Rabi frequency,
which defines the escape radius R_e = R_C * (1 + Omega~/|delta|)^(-1/3).
"""

from __future__ import annotations

from dataclasses import dataclass

from .constants import HBAR, PhysicalParams
from .errors import DomainError


@dataclass(frozen=True)
class ResonanceGeometry:
    """Radii bracketing the resonant region at one detuning."""

    detuning: float    # rad/s, negative
    r_condon: float    # cm
    r_escape: float    # cm
    r_ratio: float     # r_escape / r_condon, in (0, 1]

    def __post_init__(self):
        if self.detuning >= 0.0:
            raise DomainError("detuning must be negative")
        if not 0.0 < self.r_escape <= self.r_condon:
            raise DomainError("requires 0 < r_escape <= r_condon")


def u_dd(r: float, params: PhysicalParams) -> float:
    """Dipole-dipole potential -C3/r^3 (erg, negative)."""
    if r <= 0.0:
        raise DomainError(f"internuclear distance must be positive, got {r!r}")
    return -params.c3 / r**3


def omega_r(r: float, params: PhysicalParams) -> float:
    """Pair splitting omega_a + U(r)/hbar (rad/s); tends to omega_a as r grows."""
    return params.omega_a + u_dd(r, params) / HBAR


def condon_radius(delta: float, params: PhysicalParams) -> float:
    """Radius where the mode is resonant: (C3/(hbar*|delta|))^(1/3) (cm)."""
    if delta >= 0.0:
        raise DomainError(f"red detuning required, got delta={delta!r}")
    return (params.c3 / (HBAR * abs(delta))) ** (1.0 / 3.0)


def escape_radius(delta: float, omega_tilde: float,
                  params: PhysicalParams) -> tuple[float, float]:
    """Off-resonance boundary.

    Returns ``(r_escape, r_ratio)`` with
    r_ratio = (1 + omega_tilde/|delta|)^(-1/3); omega_tilde = 0 gives
    r_escape = r_condon.
    """
    if omega_tilde < 0.0:
        raise DomainError(
            f"collective Rabi frequency must be >= 0, got {omega_tilde!r}")
    ratio = (1.0 + omega_tilde / abs(delta)) ** (-1.0 / 3.0)
    return condon_radius(delta, params) * ratio, ratio


def potential_slope(r: float, params: PhysicalParams) -> float:
    """|U'(r)| = 3*C3/r^4 (erg/cm); equals 3*hbar*|delta|/R_C at r = R_C."""
    if r <= 0.0:
        raise DomainError(f"internuclear distance must be positive, got {r!r}")
    return 3.0 * params.c3 / r**4


def resonance_geometry(delta: float, omega_tilde: float,
                       params: PhysicalParams) -> ResonanceGeometry:
    """Bundle Condon and escape radii for one detuning."""
    r_c = condon_radius(delta, params)
    r_e, ratio = escape_radius(delta, omega_tilde, params)
    return ResonanceGeometry(detuning=delta, r_condon=r_c,
                             r_escape=r_e, r_ratio=ratio)
