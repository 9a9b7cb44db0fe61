"""Transfer-matrix solver: calibration, flux conservation, convergence."""

import math

import pytest

from airytunnel import (
    AsymptoteMismatchError,
    DomainError,
    GaussianBarrier,
    ParabolicBarrier,
    Sech2Barrier,
    SquareBarrier,
    exact_transmission,
    square_barrier_closed_form,
)
from airytunnel.oracle import _transfer_once


def poschl_teller_transmission(v0, w, energy):
    """Independent closed form for the sech2 barrier (4 v0 w^2 > 1)."""
    k = math.sqrt(energy)
    s = math.sinh(math.pi * k * w) ** 2
    c = math.cosh(0.5 * math.pi * math.sqrt(4.0 * v0 * w * w - 1.0)) ** 2
    return s / (s + c)


def test_square_closed_form_values():
    assert square_barrier_closed_form(1.0, 2.0, 0.5) == pytest.approx(
        0.21077109396613054, rel=1e-12
    )
    assert square_barrier_closed_form(1.0, 0.0, 0.5) == 1.0
    assert square_barrier_closed_form(1.0, 1e-9, 0.5) == pytest.approx(1.0, abs=1e-9)
    assert square_barrier_closed_form(1.0, 2.0, 1e-6) < 1e-4
    with pytest.raises(DomainError):
        square_barrier_closed_form(1.0, 2.0, 1.0)
    with pytest.raises(DomainError):
        square_barrier_closed_form(1.0, 2.0, 1.5)


def test_calibration_against_square_closed_form():
    # domain chosen so the barrier edges fall exactly on slice boundaries
    pot = SquareBarrier(1.0, 2.0)
    result = exact_transmission(pot, 0.5, (-5.0, 5.0), slices=10000)
    reference = square_barrier_closed_form(1.0, 2.0, 0.5)
    assert result.t_exact == pytest.approx(reference, rel=1e-6)
    assert result.flux_defect <= 1e-10
    assert 0.0 <= result.t_exact <= 1.0


def test_sech2_converged_run():
    result = exact_transmission(Sech2Barrier(1.0, 1.0), 0.5, (-12.0, 12.0), slices=10000)
    assert result.flux_defect <= 1e-10
    assert result.slices == 20000
    reference = poschl_teller_transmission(1.0, 1.0, 0.5)
    assert result.t_exact == pytest.approx(reference, rel=1e-6)
    assert result.richardson_estimate == pytest.approx(reference, rel=1e-8)
    assert result.t_exact + result.r_exact == pytest.approx(1.0, abs=1e-10)


def test_second_order_grid_convergence():
    pot = Sech2Barrier(1.0, 1.0)
    ts = {n: _transfer_once(pot, 0.5, -12.0, 12.0, n)[0] for n in (500, 1000, 2000, 4000)}
    d1 = abs(ts[1000] - ts[500])
    d2 = abs(ts[2000] - ts[1000])
    d3 = abs(ts[4000] - ts[2000])
    assert d1 / d2 >= 4.0
    assert d2 / d3 >= 4.0


def test_domain_widening_changes_nothing():
    # matched slice width in both domains so only the tail truncation differs
    pot = Sech2Barrier(1.0, 1.0)
    t_narrow = exact_transmission(pot, 0.5, (-12.0, 12.0), slices=12000).t_exact
    t_wide = exact_transmission(pot, 0.5, (-16.0, 16.0), slices=16000).t_exact
    assert abs(t_narrow - t_wide) <= 1e-8


def test_high_energy_is_transparent():
    result = exact_transmission(Sech2Barrier(1.0, 1.0), 10.0, (-12.0, 12.0), slices=2000)
    assert result.t_exact == pytest.approx(1.0, abs=1e-3)


def test_thick_barrier_never_overflows():
    result = exact_transmission(Sech2Barrier(1.0, 8.0), 0.1, (-120.0, 120.0), slices=10000)
    assert 0.0 <= result.t_exact < 1e-12
    assert result.flux_defect <= 1e-10


def test_gaussian_barrier_transmission_reasonable():
    result = exact_transmission(GaussianBarrier(1.0, 1.0), 0.5, (-12.0, 12.0), slices=4000)
    assert 0.0 < result.t_exact < 1.0
    assert result.flux_defect <= 1e-10


def test_asymptote_mismatch_rejected():
    with pytest.raises(AsymptoteMismatchError):
        exact_transmission(ParabolicBarrier(1.0), 0.5, (-1.5, 1.5), slices=1000)
    with pytest.raises(AsymptoteMismatchError):
        exact_transmission(Sech2Barrier(1.0, 1.0), 0.5, (-3.0, 3.0), slices=1000)


def test_input_validation():
    pot = Sech2Barrier(1.0, 1.0)
    with pytest.raises(DomainError):
        exact_transmission(pot, -0.5, (-12.0, 12.0), slices=1000)
    with pytest.raises(DomainError):
        exact_transmission(pot, 0.0, (-12.0, 12.0), slices=1000)
    with pytest.raises(ValueError):
        exact_transmission(pot, 0.5, (-12.0, 12.0), slices=50)
    with pytest.raises(ValueError):
        exact_transmission(pot, 0.5, (12.0, -12.0), slices=1000)
