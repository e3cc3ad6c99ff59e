"""Kinetics, hull intercepts and sign-hypothesis sampling."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nbarrier import (
    Equilibrium,
    HullBounds,
    ReactionSpec,
    SystemSpec,
    chi,
    equilibrium_defect,
    hull_intercepts,
    reaction_eval,
    system_from_dict,
    system_to_dict,
    verify_hypothesis_H,
)

# Classic two-species competition kinetics with crossed dominance.
LV = ReactionSpec(sigma=(1.0, 1.0), C=((1.0, 2.0), (3.0, 1.0)))
LV_SPEC = SystemSpec(n=2, m=1.0, d=(1.0, 1.0), l=(1.0, 1.0), theta=0.0,
                     reaction=LV)

rates = st.floats(min_value=0.1, max_value=10.0,
                  allow_nan=False, allow_infinity=False)


def random_reaction(draw, n):
    sigma = tuple(draw(rates) for _ in range(n))
    C = tuple(tuple(draw(rates) for _ in range(n)) for _ in range(n))
    return ReactionSpec(sigma=sigma, C=C)


def test_reaction_eval_matches_affine_form():
    r = ReactionSpec(sigma=(1.0, 2.0), C=((3.0, 4.0), (5.0, 6.0)))
    f = reaction_eval(r, (0.1, 0.2))
    assert f == pytest.approx((1 - 0.3 - 0.8, 2 - 0.5 - 1.2), abs=1e-15)


def test_reaction_eval_rejects_wrong_length():
    with pytest.raises(ValueError):
        reaction_eval(LV, (1.0,))


def test_reaction_spec_rejects_nonpositive_rates():
    with pytest.raises(ValueError):
        ReactionSpec(sigma=(1.0, 0.0), C=((1.0, 1.0), (1.0, 1.0)))
    with pytest.raises(ValueError):
        ReactionSpec(sigma=(1.0, 1.0), C=((1.0, -2.0), (1.0, 1.0)))
    with pytest.raises(ValueError):
        ReactionSpec(sigma=(1.0, 1.0), C=((1.0,), (1.0, 1.0)))


def test_system_spec_validation():
    with pytest.raises(ValueError):
        SystemSpec(n=2, m=0.5, d=(1, 1), l=(1, 1), theta=0.0, reaction=LV)
    with pytest.raises(ValueError):
        SystemSpec(n=2, m=2.0, d=(1,), l=(1, 1), theta=0.0, reaction=LV)
    with pytest.raises(ValueError):
        SystemSpec(n=3, m=2.0, d=(1, 1, 1), l=(1, 1, 1), theta=0.0, reaction=LV)


def test_hull_intercepts_hand_values():
    hull = hull_intercepts(LV)
    assert hull.ubar == pytest.approx((1.0, 1.0))
    assert hull.ulow == pytest.approx((1 / 3, 1 / 2))


@pytest.mark.filterwarnings("ignore:degenerate hull")
@given(st.data(), st.integers(min_value=2, max_value=4))
@settings(max_examples=60, deadline=None)
def test_hull_brackets_every_intercept(data, n):
    """Each plane's axis intercept lies between the hull's extremes."""
    r = random_reaction(data.draw, n)
    hull = hull_intercepts(r)
    for i in range(n):
        for j in range(n):
            cut = r.sigma[j] / r.C[j][i]
            assert hull.ulow[i] <= cut <= hull.ubar[i]


def test_hull_bounds_warns_on_degenerate_axis():
    sym = ReactionSpec(sigma=(1.0, 1.0), C=((1.0, 1.0), (1.0, 1.0)))
    with pytest.warns(UserWarning, match="degenerate"):
        hull = hull_intercepts(sym)
    assert hull.is_degenerate()


def test_hull_bounds_rejects_bad_ordering():
    with pytest.raises(ValueError):
        HullBounds(ubar=(1.0, 1.0), ulow=(2.0, 0.5))
    with pytest.raises(ValueError):
        HullBounds(ubar=(1.0, 1.0), ulow=(0.0, 0.5))


def test_chi_flags_zero_boundary_state():
    zero = Equilibrium((0.0, 0.0))
    pos = Equilibrium((0.2, 0.4))
    assert chi(zero, pos) == 0
    assert chi(pos, zero) == 0
    assert chi(pos, pos) == 1
    assert Equilibrium((1e-13, 0.0)).is_zero()


def test_equilibrium_defect_vanishes_at_coexistence():
    # 1 = u + 2v and 1 = 3u + v meet at (1/5, 2/5).
    assert equilibrium_defect(LV_SPEC, Equilibrium((0.2, 0.4))) == 0.0
    assert equilibrium_defect(LV_SPEC, Equilibrium((0.3, 0.4))) > 0.0


def test_hypothesis_H_passes_on_intercept_hull():
    hull = hull_intercepts(LV)
    report = verify_hypothesis_H(LV_SPEC, hull, 50)
    assert report.inner_ok and report.outer_ok and report.ok
    assert report.worst_inner_value >= -1e-12
    assert report.worst_outer_value <= 1e-12


def test_hypothesis_H_detects_oversized_inner_region():
    hull = HullBounds(ubar=(2.5, 2.5), ulow=(2.0, 2.0))
    report = verify_hypothesis_H(LV_SPEC, hull, 30)
    assert not report.inner_ok
    assert report.worst_inner_value < 0
    assert not report.ok


def test_hypothesis_H_detects_undersized_outer_region():
    hull = HullBounds(ubar=(0.05, 0.05), ulow=(0.01, 0.01))
    report = verify_hypothesis_H(LV_SPEC, hull, 30)
    assert report.inner_ok
    assert not report.outer_ok
    assert report.worst_outer_value > 0


def test_hypothesis_H_refuses_degenerate_hull():
    with pytest.warns(UserWarning):
        hull = HullBounds(ubar=(1.0, 1.0), ulow=(1.0, 0.5))
    with pytest.raises(ValueError):
        verify_hypothesis_H(LV_SPEC, hull, 10)


@pytest.mark.filterwarnings("ignore:degenerate hull")
@given(st.data(), st.integers(min_value=2, max_value=3))
@settings(max_examples=25, deadline=None)
def test_hypothesis_H_holds_for_any_intercept_hull(data, n):
    """The intercept construction satisfies the sign hypothesis by design."""
    r = random_reaction(data.draw, n)
    hull = hull_intercepts(r)
    if hull.is_degenerate():
        return
    spec = SystemSpec(n=n, m=2.0, d=(1.0,) * n, l=(1.0,) * n, theta=0.0,
                      reaction=r)
    report = verify_hypothesis_H(spec, hull, 12)
    assert report.ok


def test_inner_simplex_keeps_kinetics_nonnegative():
    """On the face sum u_i/ulow_i = 1 every f_i stays above -1e-12."""
    hull = hull_intercepts(LV)
    for k in range(101):
        t = k / 100
        u = (hull.ulow[0] * t, hull.ulow[1] * (1 - t))
        assert min(reaction_eval(LV, u)) >= -1e-12


def test_system_dict_round_trip():
    doc = system_to_dict(LV_SPEC)
    assert set(doc) == {"n", "m", "d", "l", "theta", "sigma", "C"}
    back = system_from_dict(doc)
    assert back == LV_SPEC
    assert system_to_dict(back) == doc


def test_system_from_dict_names_missing_key():
    doc = system_to_dict(LV_SPEC)
    del doc["sigma"]
    with pytest.raises(ValueError, match="sigma"):
        system_from_dict(doc)
