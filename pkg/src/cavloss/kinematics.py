"""Classical in-fall time scales of the colliding pair.

Starting at rest at the Condon radius R_C, energy conservation on the
attractive -C3/R^3 curve gives the total in-fall time to R = 0

    t0(delta) = g0 * sqrt(mu/(2*C3)) * (C3/(hbar*|delta|))^(5/6)

and the fraction of it spent inside the resonant region R_e < R < R_C

    f = (1/g0) * integral_r^1 du / sqrt(u^-3 - 1),   r = R_e/R_C,

with g0 the r -> 0 value of the integral, which normalizes f to one.

The integrand has an integrable singularity at u = 1.  Substituting
u = 1 - s^2 removes it exactly:

    du / sqrt(u^-3 - 1) = 2*(1 - s^2)^(3/2) / sqrt(3 - 3*s^2 + s^4) ds,

an analytic integrand on 0 <= s <= sqrt(1 - r).  The production
quadrature is adaptive Gauss-Kronrod on this form, absolute tolerance
1e-10; a naive panel rule on the raw form loses about half the digits
near u = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from scipy.integrate import quad

from .constants import HBAR, PhysicalParams
from .errors import DomainError
from .potential import ResonanceGeometry, resonance_geometry

QUAD_TOL = 1.0e-10


@dataclass(frozen=True)
class CollisionTimes:
    """Time scales of one collision at a fixed detuning.

    ``t_total = t_resonant + t_escape_region`` holds exactly whenever
    ``t_prime`` is zero (the shipped presets); ``geometry`` may be None
    for synthetic bundles used in property checks.
    """

    t_total: float              # s, R_C -> 0
    frac_resonant: float        # dimensionless fraction in [0, 1]
    t_resonant: float           # s, R_e(R') -> R_C
    t_escape_region: float      # s, 0 -> R_e
    t_prime: float = 0.0        # s, R_e -> R' (0 in all presets)
    geometry: Optional[ResonanceGeometry] = None


def _regular_integrand(s: float) -> float:
    # integrand after u = 1 - s^2; analytic on [0, 1]
    s2 = s * s
    return 2.0 * (1.0 - s2) ** 1.5 / math.sqrt(3.0 - 3.0 * s2 + s2 * s2)


def _infall_integral(r_ratio: float, tol: float = QUAD_TOL) -> tuple[float, float]:
    """integral_r^1 du/sqrt(u^-3 - 1) with an error estimate."""
    s_max = math.sqrt(1.0 - r_ratio)
    if s_max == 0.0:
        return 0.0, 0.0
    value, err = quad(_regular_integrand, 0.0, s_max,
                      epsabs=tol, epsrel=1.0e-13, limit=200)
    return value, err


@lru_cache(maxsize=None)
def g0_constant() -> float:
    """Normalization integral over the full range (r -> 0); cached.

    Evaluates to 0.7468342 with the production quadrature.  The cache
    makes concurrent first calls race at worst to the same value.
    """
    return _infall_integral(0.0, tol=1.0e-13)[0]


def _ratio_escape(delta: float, omega_tilde: float) -> float:
    if delta >= 0.0:
        raise DomainError(f"red detuning required, got delta={delta!r}")
    if omega_tilde < 0.0:
        raise DomainError(
            f"collective Rabi frequency must be >= 0, got {omega_tilde!r}")
    return (1.0 + omega_tilde / abs(delta)) ** (-1.0 / 3.0)


def fraction_f(delta: float, omega_tilde: float, tol: float = QUAD_TOL) -> float:
    """Fraction of the in-fall time spent in the resonant region, in [0, 1]."""
    return fraction_f_with_error(delta, omega_tilde, tol)[0]


def fraction_f_with_error(delta: float, omega_tilde: float,
                          tol: float = QUAD_TOL) -> tuple[float, float]:
    """As :func:`fraction_f`, plus the quadrature error estimate."""
    ratio = _ratio_escape(delta, omega_tilde)
    value, err = _infall_integral(ratio, tol)
    g0 = g0_constant()
    return value / g0, err / g0


def total_time(delta: float, params: PhysicalParams) -> float:
    """In-fall time t0 from R_C to R = 0 (s); scales as |delta|^(-5/6)."""
    if delta >= 0.0:
        raise DomainError(f"red detuning required, got delta={delta!r}")
    return (g0_constant()
            * math.sqrt(params.mu / (2.0 * params.c3))
            * (params.c3 / (HBAR * abs(delta))) ** (5.0 / 6.0))


def collision_times(delta: float, omega_tilde: float,
                    params: PhysicalParams) -> CollisionTimes:
    """Assemble the full time bundle at one detuning (t_prime = 0)."""
    geometry = resonance_geometry(delta, omega_tilde, params)
    t0 = total_time(delta, params)
    frac = fraction_f(delta, omega_tilde)
    t_c = t0 * frac
    return CollisionTimes(
        t_total=t0,
        frac_resonant=frac,
        t_resonant=t_c,
        t_escape_region=t0 - t_c,
        t_prime=0.0,
        geometry=geometry,
    )


def phase_exceeds_single_cycle(phase: float, margin: float = 0.0) -> bool:
    """Audit flag: does omega_tilde * t_c exceed one Rabi cycle?

    The semiclassical treatment assumes the resonant passage completes
    at most a single cycle; exceeding 2*pi*(1 + margin) is reported as
    a flag, never a failure (the shipped preset itself reaches 2.3 pi
    at the smallest |delta|).
    """
    return phase > 2.0 * math.pi * (1.0 + margin)
