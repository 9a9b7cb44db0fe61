"""Transmission estimates for a single-hump barrier.

Three approximations, in decreasing order of fidelity to the uniform
Airy construction:

* t_uniform    : T = 3 (Ai(u)/Bi(u))**2 * |alpha+/alpha-|**(1/3), with
                 u = s_half**(2/3). Valid through the barrier top, where
                 it tends to 3 (Ai(0)/Bi(0))**2 = 1.
* t_asymptotic : T = (3/4) |alpha+/alpha-|**(1/3) exp(-2 theta), the
                 large-action limit of the above.
* t_wkb        : T = exp(-2 theta), the plain WKB (Gamow) factor.

The Airy ratio is evaluated in log domain, so t_uniform survives barriers
thick enough that Bi(u)**2 alone would overflow (theta beyond ~350).

These are amplitude-ratio quantities, not flux-normalized transmission
coefficients; t_uniform is deliberately not clamped to <= 1 so its
behavior near the barrier top can be studied against the exact solver.
All functions here are pure; sweeping energies in parallel is safe.
"""

import math
from dataclasses import dataclass, replace
from typing import Optional

from .errors import DegenerateTurningPointError
from .geometry import BarrierGeometry, analyze_barrier
from .oracle import OracleResult, exact_transmission
from .specfun import log_bi_over_ai


@dataclass(frozen=True)
class RateReport:
    """All transmission estimates for one barrier at one energy."""

    energy: float
    geometry: BarrierGeometry
    airy_argument: float
    t_wkb: float
    t_asymptotic: float
    t_uniform: float
    t_exact: Optional[float] = None
    oracle: Optional[OracleResult] = None


def t_wkb(theta):
    """WKB transmission factor exp(-2 theta)."""
    theta = float(theta)
    if theta < 0.0 or not math.isfinite(theta):
        raise ValueError("theta must be >= 0, got %r" % theta)
    return math.exp(-2.0 * theta)


def t_asymptotic(theta, alpha_plus, alpha_minus):
    """Asymptotic rate (3/4) |alpha+/alpha-|**(1/3) exp(-2 theta)."""
    if alpha_plus == 0.0 or alpha_minus == 0.0:
        raise DegenerateTurningPointError("alpha = 0: barrier-top degeneracy")
    ratio = abs(alpha_plus / alpha_minus)
    return 0.75 * ratio ** (1.0 / 3.0) * t_wkb(theta)


def t_uniform(geom: BarrierGeometry):
    """Uniform Airy-ratio rate 3 (Ai(u)/Bi(u))**2 |alpha+/alpha-|**(1/3).

    u = s_half**(2/3); the square of the Airy ratio is computed as
    exp(-2 ln(Bi/Ai)) so thick barriers cannot overflow.
    """
    if geom.s_half <= 0.0:
        raise ValueError("geometry has non-positive half action %r" % geom.s_half)
    u = geom.s_half ** (2.0 / 3.0)
    ratio = abs(geom.alpha_plus / geom.alpha_minus)
    log_t = math.log(3.0) - 2.0 * log_bi_over_ai(u) + math.log(ratio) / 3.0
    return math.exp(log_t)


def rate_report(pot, energy, window=None, with_oracle=False, oracle_slices=4000):
    """Assemble all transmission estimates at one energy.

    The exact transfer-matrix value is included when ``with_oracle`` is
    set; it uses the same window as the geometry scan, so the window must
    then reach far enough that V has decayed to its zero asymptote.
    """
    if window is None:
        window = pot.suggested_window()
    geom = analyze_barrier(pot, energy, window)
    u = geom.s_half ** (2.0 / 3.0)
    report = RateReport(
        energy=float(energy),
        geometry=geom,
        airy_argument=u,
        t_wkb=t_wkb(geom.theta),
        t_asymptotic=t_asymptotic(geom.theta, geom.alpha_plus, geom.alpha_minus),
        t_uniform=t_uniform(geom),
    )
    if with_oracle:
        result = exact_transmission(pot, energy, window, slices=oracle_slices)
        report = replace(report, t_exact=result.t_exact, oracle=result)
    return report
