"""Airy kernel tests: exact identities, frozen series values, regime checks."""

import math

import mpmath
import numpy as np
import pytest

from airytunnel import AiryOverflowError, DomainError, airy, log_bi_over_ai
from airytunnel.specfun import (
    SERIES_ASYMPTOTIC_SWITCH,
    _airy_asymptotic,
    _airy_grid,
)

# Independent oracle constants, written out rather than imported.
G13 = 2.6789385347077476337
G23 = 1.3541179394264004170
AI0 = 1.0 / (9.0 ** (1.0 / 3.0) * G23)
AIP0 = -1.0 / (3.0 ** (1.0 / 3.0) * G13)
BI0 = 1.0 / (3.0 ** (1.0 / 6.0) * G23)
BIP0 = 3.0 ** (1.0 / 6.0) / G13


def maclaurin_airy(u, terms=120):
    """Independent oracle: direct Maclaurin sum of the two auxiliary series.

    f: y(0)=1, y'(0)=0 and g: y(0)=0, y'(0)=1 solve y'' = u y; Ai and Bi
    are the standard combinations. Accurate in double precision only for
    small |u|, which is all this oracle is used for.
    """
    # term recurrences: f_k ~ u^{3k}, g_k ~ u^{3k+1}
    tf, tg = 1.0, u
    f, g = tf, tg
    fp, gp = 0.0, 1.0
    for k in range(1, terms):
        tf = tf * u ** 3 / ((3 * k - 1) * (3 * k))
        tg = tg * u ** 3 / ((3 * k) * (3 * k + 1))
        f += tf
        g += tg
        if u != 0.0:
            fp += tf * (3 * k) / u
            gp += tg * (3 * k + 1) / u
    ai = AI0 * f + AIP0 * g
    bi = BI0 * f + BIP0 * g
    ai_p = AI0 * fp + AIP0 * gp
    bi_p = BI0 * fp + BIP0 * gp
    return ai, bi, ai_p, bi_p


def test_zero_argument_matches_gamma_closed_forms():
    pair = airy(0.0)
    assert pair.ai == pytest.approx(AI0, rel=1e-14)
    assert pair.bi == pytest.approx(BI0, rel=1e-14)
    assert pair.ai_prime == pytest.approx(AIP0, rel=1e-14)
    assert pair.bi_prime == pytest.approx(BIP0, rel=1e-14)
    # Bi(0)/Ai(0) = sqrt(3)
    assert pair.bi / pair.ai == pytest.approx(math.sqrt(3.0), rel=1e-14)


@pytest.mark.parametrize("u", [-2.5, -1.0, -0.3, 0.0, 0.5, 1.0, 2.0, 3.0])
def test_small_arguments_match_maclaurin_oracle(u):
    ai, bi, ai_p, bi_p = maclaurin_airy(u)
    pair = airy(u)
    assert pair.ai == pytest.approx(ai, rel=1e-12, abs=1e-14)
    assert pair.bi == pytest.approx(bi, rel=1e-12, abs=1e-14)
    assert pair.ai_prime == pytest.approx(ai_p, rel=1e-12, abs=1e-14)
    assert pair.bi_prime == pytest.approx(bi_p, rel=1e-12, abs=1e-14)


def test_unit_argument_frozen_values():
    # frozen from the Maclaurin oracle summed to machine convergence
    pair = airy(1.0)
    assert pair.ai == pytest.approx(0.13529241631288141552, rel=1e-12)
    assert pair.bi == pytest.approx(1.2074235949528712594, rel=1e-12)


def test_wronskian_identity_on_grid():
    worst = 0.0
    for u in np.linspace(-10.0, 10.0, 2001):
        p = airy(float(u))
        w = p.ai * p.bi_prime - p.ai_prime * p.bi
        worst = max(worst, abs(w - 1.0 / math.pi))
    assert worst <= 1e-12


def test_positive_axis_signs_and_monotonicity():
    us = np.linspace(0.0, 10.0, 201)
    ai_vals = [airy(float(u)).ai for u in us]
    bi_vals = [airy(float(u)).bi for u in us]
    assert all(v > 0 for v in ai_vals)
    assert all(v > 0 for v in bi_vals)
    assert all(x > y for x, y in zip(ai_vals[:-1], ai_vals[1:]))
    assert all(x < y for x, y in zip(bi_vals[:-1], bi_vals[1:]))


def test_defining_ode_residual_five_point_stencil():
    h = 1e-3
    for u in np.linspace(-5.0, 5.0, 101):
        u = float(u)
        ai = [airy(u + k * h).ai for k in (-2, -1, 0, 1, 2)]
        bi = [airy(u + k * h).bi for k in (-2, -1, 0, 1, 2)]
        for f in (ai, bi):
            d2 = (-f[0] + 16 * f[1] - 30 * f[2] + 16 * f[3] - f[4]) / (12 * h * h)
            assert abs(d2 - u * f[2]) <= 1e-5 * max(1.0, abs(u * f[2]))


def test_regime_switch_overlap_agreement():
    assert SERIES_ASYMPTOTIC_SWITCH == 9.0
    for u in np.linspace(8.0, 10.0, 21):
        grid = _airy_grid(float(u))
        asym = _airy_asymptotic(float(u))
        for g, a in zip(grid, asym):
            assert g == pytest.approx(a, rel=1e-9)


@pytest.mark.parametrize("u", [8.0, 10.0, 20.0, 50.0, 100.0])
def test_leading_order_asymptotic_forms(u):
    # ai ~ exp(-z)/(2 sqrt(pi) u^(1/4)), bi ~ exp(+z)/(sqrt(pi) u^(1/4)),
    # z = (2/3) u^(3/2), to within 1% at u >= 8.
    pair = airy(u)
    zeta = (2.0 / 3.0) * u ** 1.5
    q = u ** 0.25
    assert pair.ai * 2.0 * math.sqrt(math.pi) * q * math.exp(zeta) == pytest.approx(1.0, rel=0.01)
    assert pair.bi * math.sqrt(math.pi) * q * math.exp(-zeta) == pytest.approx(1.0, rel=0.01)


def test_mpmath_cross_check_in_range():
    mpmath.mp.dps = 30
    for u in np.linspace(-10.0, 9.0, 77):
        u = float(u)
        pair = airy(u)
        for mine, ref in [
            (pair.ai, mpmath.airyai(u)),
            (pair.bi, mpmath.airybi(u)),
            (pair.ai_prime, mpmath.airyai(u, 1)),
            (pair.bi_prime, mpmath.airybi(u, 1)),
        ]:
            assert abs(mine - float(ref)) <= 1e-11 * max(1.0, abs(float(ref)))


@pytest.mark.parametrize("u", [15.0, 50.0, 100.0])
def test_mpmath_cross_check_asymptotic_range(u):
    mpmath.mp.dps = 40
    pair = airy(u)
    assert pair.ai == pytest.approx(float(mpmath.airyai(u)), rel=1e-8)
    assert pair.bi == pytest.approx(float(mpmath.airybi(u)), rel=1e-8)
    assert pair.ai_prime == pytest.approx(float(mpmath.airyai(u, 1)), rel=1e-8)
    assert pair.bi_prime == pytest.approx(float(mpmath.airybi(u, 1)), rel=1e-8)


def test_overflow_raises_with_exponent():
    with pytest.raises(AiryOverflowError) as info:
        airy(120.0)
    assert isinstance(info.value, OverflowError)
    assert info.value.exponent == pytest.approx((2.0 / 3.0) * 120.0 ** 1.5, rel=1e-12)


def test_below_supported_range_raises():
    with pytest.raises(DomainError):
        airy(-10.5)
    airy(-10.0)  # boundary is included
    with pytest.raises(DomainError):
        airy(float("nan"))


def test_log_ratio_at_zero():
    assert log_bi_over_ai(0.0) == pytest.approx(math.log(math.sqrt(3.0)), rel=1e-13)


def test_log_ratio_matches_direct_quotient():
    for u in (0.5, 2.0, 4.0, 8.9):
        pair = airy(u)
        assert log_bi_over_ai(u) == pytest.approx(math.log(pair.bi / pair.ai), rel=1e-9)


def test_log_ratio_large_argument_leading_term():
    val = log_bi_over_ai(400.0)
    lead = math.log(2.0) + (4.0 / 3.0) * 8000.0
    assert abs(val - lead) / lead < 1e-4
    # continuity across the regime switch: the two evaluation paths agree
    # up to the genuine function variation over the 2e-9 straddle
    lo = log_bi_over_ai(SERIES_ASYMPTOTIC_SWITCH - 1e-9)
    hi = log_bi_over_ai(SERIES_ASYMPTOTIC_SWITCH + 1e-9)
    slope = 2.0 * math.sqrt(SERIES_ASYMPTOTIC_SWITCH)
    assert abs(hi - lo) <= slope * 2e-9 + 1e-10


def test_log_ratio_rejects_negative():
    with pytest.raises(DomainError):
        log_bi_over_ai(-0.1)
