import numpy as np
import pytest

from tlwaves import oracle
from tlwaves.errors import NoSolitaryWaveError, PoleProximityError, StepSizeTooLargeError
from tlwaves.params import make_parameters


@pytest.fixture(scope="module")
def elev_curve():
    p = make_parameters(0.5, 0.8)
    return oracle.potential(oracle.TravelingWaveProblem(params=p, speed=p.c_crit + 0.05))


@pytest.fixture(scope="module")
def depr_curve():
    p = make_parameters(0.5, 0.5)
    return oracle.potential(oracle.TravelingWaveProblem(params=p, speed=p.c_crit + 0.05))


@pytest.fixture(scope="module")
def elev_profile(elev_curve):
    return oracle.integrate_profile(elev_curve, x_max=60.0, step=1e-3)


def test_problem_rejects_zero_speed():
    p = make_parameters(0.5, 0.8)
    with pytest.raises(ValueError):
        oracle.TravelingWaveProblem(params=p, speed=0.0)


def test_turning_point_elevation(elev_curve):
    vstar = elev_curve.turning_point
    assert vstar > 0.0
    assert 0.0 < vstar < elev_curve.v_pole
    assert abs(elev_curve.U(vstar)) < 1e-14
    # potential is strictly negative between the saddle and the turning point
    inner = np.linspace(1e-6, vstar * (1 - 1e-9), 500)
    assert np.all(elev_curve.U(inner) < 0.0)


def test_turning_point_depression(depr_curve):
    assert depr_curve.turning_point < 0.0
    assert abs(depr_curve.U(depr_curve.turning_point)) < 1e-14


def test_no_wave_below_critical_speed():
    p = make_parameters(0.5, 0.8)
    with pytest.raises(NoSolitaryWaveError):
        oracle.potential(oracle.TravelingWaveProblem(params=p, speed=0.9 * p.c_crit))


def test_no_wave_for_degenerate_nonlinearity():
    p = make_parameters(0.25, 0.5)
    with pytest.raises(NoSolitaryWaveError):
        oracle.potential(oracle.TravelingWaveProblem(params=p, speed=2.0))


def test_existence_boundary_is_sharp():
    p = make_parameters(0.5, 0.8)
    with pytest.raises(NoSolitaryWaveError):
        oracle.potential(oracle.TravelingWaveProblem(params=p, speed=0.99 * p.c_crit))
    curve = oracle.potential(oracle.TravelingWaveProblem(params=p, speed=1.01 * p.c_crit))
    assert curve.turning_point > 0.0


def test_saddle_curvature_matches_finite_differences(elev_curve):
    p = elev_curve.problem.params
    cs = elev_curve.problem.speed
    expected = -(cs**2 - p.c_crit**2) / (p.beta * cs**2)
    h = 1e-4
    second_diff = (elev_curve.U(h) - 2.0 * elev_curve.U(0.0) + elev_curve.U(-h)) / h**2
    assert second_diff == pytest.approx(expected, rel=1e-6)


def test_potential_series_matches_closed_form(elev_curve):
    # both branches of U and G agree where they meet
    v = 1.1e-3 * elev_curve.v_pole  # just outside the series cutoff
    w = 0.9e-3 * elev_curve.v_pole  # just inside
    for val in (v, w):
        direct = -val**2 / (2 * elev_curve.problem.params.beta) + elev_curve.G(val)
        assert elev_curve.U(val) == pytest.approx(direct, rel=1e-10, abs=1e-18)


def test_profile_initial_conditions(elev_curve, elev_profile):
    assert elev_profile.x[0] == 0.0
    assert elev_profile.v[0] == pytest.approx(elev_curve.turning_point, abs=1e-12)
    assert elev_profile.v_prime[0] == 0.0


def test_profile_decay_and_energy(elev_profile):
    assert abs(elev_profile.sample_v(60.0)) < 1e-8
    assert elev_profile.energy_max < 1e-10


def test_profile_strictly_decreasing(elev_profile):
    mags = np.abs(elev_profile.v)
    assert np.all(np.diff(mags) < 0.0)


def test_profile_decay_rate(elev_curve, elev_profile):
    xs = np.linspace(30.0, 50.0, 200)
    slope = np.polyfit(xs, np.log(np.abs(elev_profile.sample_v(xs))), 1)[0]
    assert slope == pytest.approx(-elev_curve.saddle_rate, rel=0.01)


def test_profile_even_extension_satisfies_ode(elev_curve, elev_profile):
    h = 0.01
    xs = np.arange(-40.0, 40.0 + h / 2, h)
    v = elev_profile.sample_v(xs)
    second = (v[2:] - 2 * v[1:-1] + v[:-2]) / h**2
    residual = second - np.asarray(elev_curve.ode_rhs(v[1:-1]))
    assert np.max(np.abs(residual)) < 1e-5


def test_step_size_monitor():
    p = make_parameters(0.5, 0.8)
    curve = oracle.potential(oracle.TravelingWaveProblem(params=p, speed=p.c_crit + 0.3))
    with pytest.raises(StepSizeTooLargeError):
        oracle.integrate_profile(curve, x_max=30.0, step=0.05)


def test_reconstruct_zeta_basics(elev_curve):
    assert oracle.reconstruct_zeta(elev_curve, 0.0) == 0.0
    v = 1e-6 * elev_curve.v_pole
    p = elev_curve.problem.params
    linearized = v / (elev_curve.problem.speed * (p.gamma + p.delta))
    assert oracle.reconstruct_zeta(elev_curve, v) == pytest.approx(linearized, rel=1e-4)
    with pytest.raises(PoleProximityError):
        oracle.reconstruct_zeta(elev_curve, elev_curve.v_pole * (1 - 1e-14))


def test_reconstruct_zeta_sign(elev_curve, depr_curve):
    assert oracle.reconstruct_zeta(elev_curve, elev_curve.turning_point) > 0.0
    assert oracle.reconstruct_zeta(depr_curve, depr_curve.turning_point) < 0.0


def test_reconstruct_u_basics(elev_curve):
    assert oracle.reconstruct_u(elev_curve, 0.0) == 0.0
    assert oracle.reconstruct_u(elev_curve, elev_curve.turning_point) > 0.0


def test_reconstruct_u_consistent_with_trajectory(elev_curve, elev_profile):
    # u = v - beta v'' along the orbit, with v'' from second differences of
    # the stored uniform samples (the crest sample at index 0 is offset)
    x = elev_profile.x[1:]
    v = elev_profile.v[1:]
    h = x[1] - x[0]
    second = (v[2:] - 2 * v[1:-1] + v[:-2]) / h**2
    beta = elev_curve.problem.params.beta
    u = oracle.reconstruct_u(elev_curve, v[1:-1])
    assert np.max(np.abs(u - v[1:-1] + beta * second)) < 1e-8


def test_turning_point_monotone_in_speed():
    p = make_parameters(0.5, 0.8)
    offsets = [0.02, 0.05, 0.1, 0.2, 0.3]
    vstars = []
    for off in offsets:
        curve = oracle.potential(oracle.TravelingWaveProblem(params=p, speed=p.c_crit + off))
        vstars.append(curve.turning_point)
    assert np.all(np.diff(vstars) > 0.0)


def test_negative_speed_sign_map():
    p = make_parameters(0.5, 0.8)
    speed = p.c_crit + 0.05
    pos = oracle.potential(oracle.TravelingWaveProblem(params=p, speed=speed))
    neg = oracle.potential(oracle.TravelingWaveProblem(params=p, speed=-speed))
    assert neg.turning_point == pytest.approx(-pos.turning_point, rel=1e-14)
    # interface deviation is unchanged, velocities flip
    assert oracle.reconstruct_zeta(neg, neg.turning_point) == pytest.approx(
        oracle.reconstruct_zeta(pos, pos.turning_point), rel=1e-14
    )
    assert oracle.reconstruct_u(neg, neg.turning_point) == pytest.approx(
        -oracle.reconstruct_u(pos, pos.turning_point), rel=1e-14
    )
    zeta, v, u = oracle.negative_speed_map(1.5, 2.0, 3.0)
    assert (zeta, v, u) == (1.5, -2.0, -3.0)


def test_profile_negative_speed():
    p = make_parameters(0.5, 0.8)
    speed = p.c_crit + 0.05
    neg = oracle.potential(oracle.TravelingWaveProblem(params=p, speed=-speed))
    prof = oracle.integrate_profile(neg, x_max=20.0, step=1e-3)
    assert prof.v[0] < 0.0  # velocity flips under the sign map
    assert oracle.reconstruct_zeta(neg, prof.v[0]) > 0.0  # still a wave of elevation
