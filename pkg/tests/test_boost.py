import math

import pytest
from hypothesis import assume, given, strategies as st

from ctcsim.boost import (
    BoostParameter,
    PulseFrameParams,
    boosted_metric,
    gamma,
    horizon_condition,
    lorentz_transform,
    negative_time_condition,
    null_speed_backward,
    null_speed_forward,
    pulse_frame_params,
    pulse_metric,
)
from ctcsim.errors import DomainError, SingularityError
from ctcsim.metric import axial_metric
from oracles import boosted_interval, null_speeds_by_roots

Fs = st.floats(1.0, 20.0)
betas = st.floats(-0.99, 0.99)


def test_boost_parameter():
    assert BoostParameter(0.6).gamma == pytest.approx(1.25)
    for b in (1.0, -1.0, 1.5):
        with pytest.raises(DomainError):
            BoostParameter(b)


@given(b=betas)
def test_gamma_at_least_one(b):
    assert gamma(b) >= 1.0


@pytest.mark.parametrize("t, z", [(0.3, -2.0), (5.0, 1.0)])
def test_identity_boost(t, z):
    assert lorentz_transform(t, z, 0.0) == (t, z)


def test_lorentz_examples():
    assert lorentz_transform(0.0, 0.0, 0.7) == (0.0, 0.0)
    tp, zp = lorentz_transform(1.0, 0.0, 0.6, 1.0)
    assert tp == pytest.approx(1.25, rel=1e-15)
    assert zp == pytest.approx(-0.75, rel=1e-15)
    assert lorentz_transform(1.0, 0.0, BoostParameter(0.6)) == (tp, zp)
    with pytest.raises(DomainError):
        lorentz_transform(1.0, 0.0, 1.0)


@given(t=st.floats(-1e3, 1e3), z=st.floats(-1e3, 1e3), b=betas, c_v=st.floats(0.1, 10))
def test_lorentz_round_trip(t, z, b, c_v):
    tp, zp = lorentz_transform(t, z, b, c_v)
    t2, z2 = lorentz_transform(tp, zp, -b, c_v)
    scale = max(abs(t) * c_v, abs(z), 1.0) * gamma(b) ** 2
    assert abs(t2 - t) * c_v <= 1e-12 * scale
    assert abs(z2 - z) <= 1e-12 * scale


def test_boosted_metric_examples():
    m = boosted_metric(1.0, 0.6)
    assert (m.g_tt, m.g_tz, m.g_zz) == pytest.approx((-1.0, 0.0, 1.0), abs=1e-15)
    m = boosted_metric(1.0, 0.0)
    assert (m.g_tt, m.g_tz, m.g_zz) == (-1.0, 0.0, 1.0)
    m = boosted_metric(4.0, 0.3)
    assert m.g_tz == pytest.approx(0.9 / 0.91, rel=1e-14)
    assert m.g_tz == pytest.approx(0.989011, abs=1e-6)


@given(F=Fs, b=betas, c_v=st.floats(0.1, 10))
def test_boosted_metric_zero_boost_is_axial(F, c_v, b):
    assert boosted_metric(F, 0.0, c_v) == axial_metric(F, c_v)


@given(F=Fs, b=betas, dt=st.floats(-3, 3), dz=st.floats(-3, 3))
def test_boosted_metric_matches_square_form(F, b, dt, dz):
    m = boosted_metric(F, b)
    ref = boosted_interval(F, b, dt, dz)
    assert m.interval(dt, dz) == pytest.approx(ref, rel=1e-9, abs=1e-9 * gamma(b) ** 2 * F)


@given(F=Fs, b=betas)
def test_boosted_metric_determinant(F, b):
    m = boosted_metric(F, b)
    assert m.is_lorentzian()
    assert m.determinant == pytest.approx(-F, rel=1e-8)


def test_forward_speed_examples():
    assert null_speed_forward(1.0, 0.6) == pytest.approx(1.0, rel=1e-15)
    assert null_speed_forward(1.0, 0.0) == 1.0
    assert null_speed_forward(4.0, 0.3) == pytest.approx(1.4375, rel=1e-15)


def test_backward_speed_examples():
    assert null_speed_backward(1.0, 0.0) == 1.0
    assert null_speed_backward(4.0, 0.3) == pytest.approx(4.25, rel=1e-14)
    assert null_speed_backward(4.0, 0.6) == pytest.approx(-7.0, rel=1e-14)
    with pytest.raises(SingularityError):
        null_speed_backward(4.0, 0.5)
    with pytest.raises(SingularityError):
        null_speed_backward(25 / 9, 0.6)


@given(F=Fs, b=betas)
def test_forward_speed_is_velocity_addition(F, b):
    u = math.sqrt(F)
    assert null_speed_forward(F, b) == pytest.approx((u + b) / (1 + u * b), rel=1e-14)


@given(b=betas)
def test_flat_space_boost_invariance(b):
    assert null_speed_forward(1.0, b) == pytest.approx(1.0, rel=1e-14)
    assert null_speed_backward(1.0, b) == pytest.approx(1.0, rel=1e-14)


@given(F=Fs, b=betas)
def test_null_speeds_solve_boosted_metric(F, b):
    assume(abs(F * b * b - 1) > 1e-3)
    m = boosted_metric(F, b)
    ref = null_speeds_by_roots(m.g_tt, m.g_tz, m.g_zz)
    got = sorted([null_speed_forward(F, b), -null_speed_backward(F, b)])
    assert got == pytest.approx(ref, rel=1e-8)


def test_negative_time_condition_examples():
    assert not negative_time_condition(1.0, 0.99)
    assert negative_time_condition(4.0, 0.6)
    assert not negative_time_condition(25 / 9, 0.6)
    assert negative_time_condition(25 / 9 + 1e-6, 0.6)


@given(F=Fs, b=st.floats(0.0, 0.99))
def test_negative_time_iff_backward_negative(F, b):
    x = math.sqrt(F) * b
    assume(abs(x - 1) > 1e-9)
    p = pulse_frame_params(F, b)
    beyond_horizon = p.c_p**2 < p.v_pulse**2
    assert negative_time_condition(F, b) == (null_speed_backward(F, b) < 0) == beyond_horizon


def test_pulse_frame_examples():
    assert pulse_frame_params(1.0, 0.4) == PulseFrameParams(1.0, 0.0)
    p = pulse_frame_params(4.0, 0.3)
    assert p.c_p == pytest.approx(2.84375, rel=1e-14)
    assert p.v_pulse == pytest.approx(1.40625, rel=1e-14)
    assert p.c_p - p.v_pulse == pytest.approx(1.4375, rel=1e-14)
    p = pulse_frame_params(4.0, 0.6)
    assert p.c_p == pytest.approx(-2.909090909, rel=1e-9)
    assert p.abs_c_p == -p.c_p


def test_pulse_frame_singular_point():
    with pytest.raises(SingularityError):
        pulse_frame_params(4.0, 0.5)
    with pytest.raises(SingularityError):
        pulse_frame_params(25 / 9, 0.6)


def test_pulse_metric_examples():
    m = pulse_metric(PulseFrameParams(1.0, 0.0))
    assert (m.g_tt, m.g_tz, m.g_zz) == (-1.0, 0.0, 1.0)
    m = pulse_metric(PulseFrameParams(2.84375, 1.40625))
    assert m.g_tt == pytest.approx(-(2.84375**2 - 1.40625**2), rel=1e-14)
    assert m.g_tt == pytest.approx(-6.109375, rel=1e-12)
    assert pulse_metric(PulseFrameParams(1.3, 1.3)).g_tt == 0.0


@given(F=Fs, b=betas)
def test_pulse_form_identities(F, b):
    assume(abs(F * b * b - 1) > 1e-3)
    p = pulse_frame_params(F, b)
    assert p.c_p - p.v_pulse == pytest.approx(null_speed_forward(F, b), rel=1e-11)
    assert p.c_p + p.v_pulse == pytest.approx(null_speed_backward(F, b), rel=1e-11)


def test_horizon_condition_examples():
    assert horizon_condition(PulseFrameParams(1.0, 1.0))
    assert not horizon_condition(PulseFrameParams(2.84375, 1.40625))
    assert horizon_condition(PulseFrameParams(0.0, 0.0))


@pytest.mark.parametrize("eps, expected", [
    (1e-11, True), (-1e-11, True), (1e-3, False), (-1e-3, False), (0.5, False),
])
def test_horizon_locus_at_beta_06(eps, expected):
    p = pulse_frame_params(25 / 9 + eps, 0.6)
    assert horizon_condition(p) is expected
