"""Independent brute-force oracles used by the test suite.

Everything here is deliberately written from the defining expressions,
not from the production code paths: the quadrature oracle is composite
Simpson on the raw transformed integrand, the time-scale oracle chains
the closed formulas with its own constant literals, and the damped
oscillation reference evaluates the textbook form naively.
"""

from __future__ import annotations

import math

import numpy as np

# constant literals owned by the tests
HBAR = 1.0545718176461565e-27   # erg*s
C_LIGHT = 2.99792458e10         # cm/s
AMU = 1.66053906660e-24         # g

TWO_PI_MHZ = 2.0 * math.pi * 1.0e6


def infall_integral_oracle(r_ratio: float, panels: int = 1_000_000) -> float:
    """integral_r^1 du/sqrt(u^-3 - 1) by composite Simpson.

    Uses the substitution u = 1 - s^2 and integrates the *unsimplified*
    quotient 2*s/sqrt((1-s^2)^-3 - 1); only the two endpoint limits
    (2/sqrt(3) at s=0, 0 at s=1) are filled in by hand.
    """
    if panels % 2:
        panels += 1
    s_max = math.sqrt(1.0 - r_ratio)
    if s_max == 0.0:
        return 0.0
    s = np.linspace(0.0, s_max, panels + 1)
    with np.errstate(divide="ignore", invalid="ignore"):
        y = 2.0 * s / np.sqrt((1.0 - s * s) ** -3 - 1.0)
    y[0] = 2.0 / math.sqrt(3.0)
    if r_ratio == 0.0:
        y[-1] = 0.0
    h = s_max / panels
    return h / 3.0 * (y[0] + y[-1]
                      + 4.0 * y[1:-1:2].sum() + 2.0 * y[2:-1:2].sum())


def g0_oracle(panels: int = 1_000_000) -> float:
    return infall_integral_oracle(0.0, panels)


def fraction_oracle(delta: float, omega_tilde: float,
                    panels: int = 1_000_000) -> float:
    """Resonant-region time fraction from the Simpson oracle."""
    r_ratio = (1.0 + omega_tilde / abs(delta)) ** (-1.0 / 3.0)
    return infall_integral_oracle(r_ratio, panels) / g0_oracle(panels)


class DenseFractionOracle:
    """Fast fraction evaluation for dense detuning grids.

    Precomputes the cumulative trapezoid integral of the transformed
    integrand on a very fine s grid (error ~ h^2 ~ 6e-14), then reads
    arbitrary upper limits off by linear interpolation.
    """

    def __init__(self, nodes: int = 2**22):
        s = np.linspace(0.0, 1.0, nodes + 1)
        with np.errstate(divide="ignore", invalid="ignore"):
            y = 2.0 * s / np.sqrt((1.0 - s * s) ** -3 - 1.0)
        y[0] = 2.0 / math.sqrt(3.0)
        y[-1] = 0.0
        h = 1.0 / nodes
        cumulative = np.concatenate(
            ([0.0], np.cumsum(0.5 * h * (y[1:] + y[:-1]))))
        self._s = s
        self._cumulative = cumulative
        self.g0 = cumulative[-1]

    def fraction(self, r_ratio: np.ndarray) -> np.ndarray:
        s_max = np.sqrt(1.0 - np.asarray(r_ratio))
        return np.interp(s_max, self._s, self._cumulative) / self.g0


def total_time_oracle(delta: float, mass_amu: float, c3_erg_cm3: float,
                      g0: float) -> float:
    """In-fall time from the closed formula, chained by hand."""
    mu = 0.5 * mass_amu * AMU
    return (g0 * math.sqrt(mu / (2.0 * c3_erg_cm3))
            * (c3_erg_cm3 / (HBAR * abs(delta))) ** (5.0 / 6.0))


def p_underdamped_reference(t: float, omega_tilde: float,
                            gamma: float) -> float:
    """Damped-oscillation survival probability, naive textbook evaluation.

    Valid for omega_tilde > gamma/4 only; used as a cross-check away
    from the critical boundary.
    """
    beta = math.sqrt(omega_tilde**2 - (gamma / 4.0) ** 2)
    bracket = math.cos(beta * t) - gamma / (4.0 * beta) * math.sin(beta * t)
    return math.exp(-gamma * t / 2.0) * bracket**2


def loss_series_reference(p_tc: float, p_2tc: float, gamma: float,
                          t_e: float, t_prime: float,
                          n_terms: int = 200_000) -> float:
    """Multiple-passage loss summed term by term from the probabilities."""
    total = 0.0
    for n in range(n_terms):
        total += (p_tc
                  * (math.exp(-2.0 * (t_prime + t_e) * gamma) * p_2tc) ** n
                  * math.exp(-t_prime * gamma)
                  * (1.0 - math.exp(-2.0 * t_e * gamma)))
    return total
