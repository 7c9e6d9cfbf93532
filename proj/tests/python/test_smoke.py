import math

import pytest

import weakspin as ws


def test_constants_expose_the_moment_ratio():
    c = ws.constants()
    assert c.metastable_he_moment / c.bohr_magneton == 2.0
    assert c.helium4_mass == pytest.approx(6.6464769891e-27, rel=1e-10)


def test_weak_value_matches_the_half_angle_tangent():
    w = ws.weak_value(2.9, 0.0)
    assert w.real == pytest.approx(math.tan(1.45), rel=1e-12)
    assert w.imag == 0.0


def test_headline_displacement():
    p = ws.ExperimentParams()
    p.sigma = 0.5e-6
    p.flight_distance = 2.5
    p.beam_velocity = 1717.0
    assert ws.displacement(p, 0.37) == pytest.approx(1.7095669e-5, rel=1e-6)


def test_calibrated_limit():
    assert ws.find_max_limit(ws.default_geometry()) == pytest.approx(
        0.37, abs=1e-12
    )


def test_orthogonal_selection_raises():
    with pytest.raises(ws.WeakspinError):
        ws.weak_value(math.pi, 0.0)


def test_profiles_agree_in_the_weak_regime():
    p = ws.default_geometry(2.9)
    p.dBdz = ws.gradient_for_limit(0.05, 2.9, p.sigma, p.delta_t)
    exact = ws.exact_detector_density(p)
    first = ws.first_order_detector_density(p)
    assert exact.mean == pytest.approx(first.mean, rel=0.01)
    assert exact.total_weight == pytest.approx(first.total_weight, rel=0.01)
