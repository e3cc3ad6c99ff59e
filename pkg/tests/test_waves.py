"""Fixed-step RK4 reduction of the wave system and trajectory checks."""

import math

import numpy as np
import pytest

from nbarrier import (
    BoundsResult,
    ReactionSpec,
    SystemSpec,
    bounds_two_species_m2,
    check_bounds,
    evenness_index,
    hull_intercepts,
    integrate,
)
from nbarrier.waves import flux_balance_defect

LV = SystemSpec(n=2, m=1.0, d=(1.0, 1.0), l=(1.0, 1.0), theta=0.7,
                reaction=ReactionSpec(sigma=(1.0, 1.0),
                                      C=((1.0, 2.0), (3.0, 1.0))))


def max_profile_error(traj, profile):
    worst = 0.0
    for k in range(len(traj.xs)):
        exact = profile.at(float(traj.xs[k]))
        worst = max(worst, float(np.max(np.abs(traj.u[k] - np.array(exact.u)))))
    return worst


def test_integrate_validates_inputs(tanh_sol):
    spec = tanh_sol.system()
    with pytest.raises(ValueError):
        integrate(spec, (1.0,), (0.0, 0.0), (0, 1), 1e-2)
    with pytest.raises(ValueError):
        integrate(spec, (1.0, -1.0), (0.0, 0.0), (0, 1), 1e-2)
    with pytest.raises(ValueError):
        integrate(spec, (1.0, 1.0), (0.0, 0.0), (1, 0), 1e-2)
    with pytest.raises(ValueError):
        integrate(spec, (1.0, 1.0), (0.0, 0.0), (0, 1), 0.0)
    with pytest.raises(ValueError):
        integrate(spec, (1.0, 1.0), (0.0, 0.0), (0, 1), 1e-2, alpha=(1.0,))


def test_coexistence_state_is_a_fixed_point_m1():
    # 1 = u + 2v, 1 = 3u + v meet at (1/5, 2/5); w = u' = 0 there.
    traj = integrate(LV, (0.2, 0.4), (0.0, 0.0), (0.0, 3.0), 1e-2)
    assert not traj.truncated
    assert np.max(np.abs(traj.u - np.array([0.2, 0.4]))) < 1e-12
    assert np.max(np.abs(traj.w)) < 1e-12


def test_coexistence_state_is_a_fixed_point_m2(tanh_sol):
    spec = tanh_sol.system()
    # 240 = u + 27v and 32 = 0.4u + 2v meet inside the positive quadrant.
    v = 64 / 8.8
    u = 240 - 27 * v
    traj = integrate(spec, (u, v), (0.0, 0.0), (0.0, 2.0), 1e-2)
    assert np.max(np.abs(traj.u - np.array([u, v]))) < 1e-9


def test_rk4_tracks_tanh_front_on_central_window(tanh_sol):
    """Step 1e-3 on [-1, 1] stays within 1e-4 of the analytic front."""
    prof = tanh_sol.profile()
    start = prof.at(-1.0)
    traj = integrate(tanh_sol.system(), start.u, start.dum, (-1.0, 1.0), 1e-3)
    assert not traj.truncated
    assert max_profile_error(traj, prof) < 1e-4


def test_rk4_tracks_cos_orbit_between_touch_points(cos_sol):
    """Accurate while every component stays clear of zero."""
    prof = cos_sol.profile()
    x0 = math.pi / 4
    start = prof.at(x0)
    traj = integrate(cos_sol.system(), start.u, start.dum, (x0, x0 + 0.5), 1e-3)
    assert not traj.truncated
    assert max_profile_error(traj, prof) < 1e-9


def test_shooting_from_the_far_tail_truncates(tanh_sol):
    """The front is transversally unstable; fp seeds grow like e^(6.3 dx).

    Shooting from x = -10 therefore leaves the orbit and hits the positivity
    floor well before the crossover, but the stored prefix must stay clamped
    to nonnegative states and inside the closed-form bounds.
    """
    prof = tanh_sol.profile()
    start = prof.at(-10.0)
    traj = integrate(tanh_sol.system(), start.u, start.dum, (-10.0, 10.0), 1e-3,
                     alpha=(0.5, 1 / 3))
    assert traj.truncated
    assert "positivity floor" in traj.truncation_reason
    assert float(traj.xs[-1]) < 10.0
    assert np.all(traj.u >= 0.0)
    hull = hull_intercepts(tanh_sol.system().reaction)
    bounds = bounds_two_species_m2(0.5, 1 / 3, 3.0, 4.0, hull, 1)
    assert check_bounds(traj, (0.5, 1 / 3), bounds).ok


def test_final_partial_step_lands_on_the_endpoint(tanh_sol):
    prof = tanh_sol.profile()
    start = prof.at(0.0)
    traj = integrate(tanh_sol.system(), start.u, start.dum, (0.0, 0.0505), 1e-2)
    assert traj.xs[-1] == pytest.approx(0.0505, abs=1e-12)
    assert len(traj.xs) == 7


def test_trajectory_stores_weighted_totals(tanh_sol):
    prof = tanh_sol.profile()
    start = prof.at(0.0)
    alpha = (0.5, 1 / 3)
    traj = integrate(tanh_sol.system(), start.u, start.dum, (0.0, 0.1), 1e-2,
                     alpha=alpha)
    assert traj.alpha == alpha
    k = len(traj.xs) // 2
    p_hand = sum(a * ui for a, ui in zip(alpha, traj.u[k]))
    q_hand = sum(a * di * ui ** 2
                 for a, di, ui in zip(alpha, (3.0, 4.0), traj.u[k]))
    assert traj.p[k] == pytest.approx(p_hand, rel=1e-14)
    assert traj.q[k] == pytest.approx(q_hand, rel=1e-14)


def test_default_alpha_is_all_ones(tanh_sol):
    prof = tanh_sol.profile()
    start = prof.at(0.0)
    traj = integrate(tanh_sol.system(), start.u, start.dum, (0.0, 0.1), 1e-2)
    assert traj.alpha == (1.0, 1.0)
    assert traj.p[0] == pytest.approx(sum(start.u), rel=1e-14)


def test_check_bounds_reports_excursions(tanh_sol):
    prof = tanh_sol.profile()
    start = prof.at(-1.0)
    traj = integrate(tanh_sol.system(), start.u, start.dum, (-1.0, 1.0), 1e-2)
    tight = BoundsResult(lower=50.0, upper=60.0, chi=1, branch="general")
    report = check_bounds(traj, (0.5, 1 / 3), tight)
    assert not report.ok
    assert report.violations
    x, p = report.violations[0]
    assert p > 60.0 or p < 50.0
    assert report.min_p < 50.0 or report.max_p > 60.0
    with pytest.raises(ValueError):
        check_bounds(traj, (1.0,), tight)


def test_flux_balance_holds_along_accurate_trajectories(tanh_sol):
    spec = tanh_sol.system()
    prof = tanh_sol.profile()
    start = prof.at(-1.0)
    alpha = (0.5, 1 / 3)
    traj = integrate(spec, start.u, start.dum, (-1.0, 1.0), 1e-3, alpha=alpha)
    defect = flux_balance_defect(spec, traj, alpha)
    scale = float(np.max(np.abs(traj.w @ np.array([0.5 * 3, 4 / 3]))))
    assert abs(defect) / scale < 1e-5
    with pytest.raises(ValueError):
        flux_balance_defect(spec, traj, (1.0,))


def test_evenness_index_reference_values():
    assert evenness_index((0.7, 0.7, 0.7)) == pytest.approx(1.0)
    u = (0.3, 0.7)
    expected = -(0.3 * math.log(0.3) + 0.7 * math.log(0.7)) / math.log(2)
    assert evenness_index(u) == pytest.approx(expected, rel=1e-12)
    # Lopsided compositions score lower.
    assert evenness_index((0.01, 0.99)) < evenness_index((0.4, 0.6))
    with pytest.raises(ValueError):
        evenness_index((1.0,))
    with pytest.raises(ValueError):
        evenness_index((1.0, 0.0))
