"""Closed-form bound branches and the cross-route identity."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nbarrier import (
    BoundsResult,
    HullBounds,
    bounds_general,
    bounds_m1,
    bounds_two_species_m2,
)
from nbarrier.bounds import two_species_m2_lower, two_species_m2_upper

REMARK_HULL = HullBounds(ubar=(240.0, 16.0), ulow=(80.0, 80 / 9))

positive = st.floats(min_value=0.2, max_value=5.0,
                     allow_nan=False, allow_infinity=False)


def test_two_species_reference_values():
    res = bounds_two_species_m2(0.5, 1 / 3, 3.0, 4.0, REMARK_HULL, 1)
    assert res.lower == pytest.approx(80 / math.sqrt(2211), rel=1e-12)
    assert res.upper == pytest.approx(180 * math.sqrt(2), rel=1e-12)
    assert res.branch == "two_species_m2"


def test_two_species_agrees_with_envelope_route():
    direct = bounds_two_species_m2(0.5, 1 / 3, 3.0, 4.0, REMARK_HULL, 1)
    via_envelopes = bounds_general((0.5, 1 / 3), (3.0, 4.0), REMARK_HULL, 2.0, 1)
    assert direct.lower == pytest.approx(via_envelopes.lower, rel=1e-12)
    assert direct.upper == pytest.approx(via_envelopes.upper, rel=1e-12)


@given(st.data())
@settings(max_examples=80, deadline=None)
def test_cross_route_identity_randomized(data):
    """The corollary transcription and the envelope build are one function."""
    a1, a2 = data.draw(positive), data.draw(positive)
    d1, d2 = data.draw(positive), data.draw(positive)
    lo = (data.draw(positive), data.draw(positive))
    hull = HullBounds(ubar=(lo[0] + data.draw(positive),
                            lo[1] + data.draw(positive)), ulow=lo)
    direct = bounds_two_species_m2(a1, a2, d1, d2, hull, 1)
    via = bounds_general((a1, a2), (d1, d2), hull, 2.0, 1)
    assert direct.lower == pytest.approx(via.lower, rel=1e-12)
    assert direct.upper == pytest.approx(via.upper, rel=1e-12)


def test_m1_branch_hand_values():
    hull = HullBounds(ubar=(3.0, 2.0), ulow=(1.0, 0.5))
    res = bounds_m1((1.0, 2.0), (1.0, 4.0), hull, 1)
    assert res.upper == pytest.approx(max(3.0, 4.0) * 4.0 / 1.0)
    assert res.lower == pytest.approx(min(1.0, 1.0) * 1.0 / 4.0)
    assert res.branch == "m1"


def test_zero_characteristic_collapses_lower_bound():
    res = bounds_two_species_m2(0.5, 1 / 3, 3.0, 4.0, REMARK_HULL, 0)
    assert res.lower == 0.0
    assert res.chi == 0
    alt = bounds_m1((1.0, 1.0), (1.0, 2.0),
                    HullBounds(ubar=(2.0, 2.0), ulow=(1.0, 1.0)), 0)
    assert alt.lower == 0.0


def test_bounds_general_rejects_linear_diffusion():
    with pytest.raises(ValueError):
        bounds_general((1.0, 1.0), (1.0, 1.0), REMARK_HULL, 1.0, 1)


def test_two_species_branch_needs_two_dimensions():
    hull3 = HullBounds(ubar=(2.0, 2.0, 2.0), ulow=(1.0, 1.0, 1.0))
    with pytest.raises(ValueError):
        bounds_two_species_m2(1.0, 1.0, 1.0, 1.0, hull3, 1)


def test_bounds_result_validation():
    with pytest.raises(ValueError):
        BoundsResult(lower=0.5, upper=1.0, chi=2, branch="general")
    with pytest.raises(ValueError):
        BoundsResult(lower=0.5, upper=1.0, chi=0, branch="general")
    with pytest.raises(ValueError):
        BoundsResult(lower=2.0, upper=1.0, chi=1, branch="general")
    doc = BoundsResult(lower=0.5, upper=1.0, chi=1, branch="general").to_dict()
    assert set(doc) == {"lower", "upper", "chi", "branch"}


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_bound_monotonicity_in_hull(data):
    """Wider hulls can only widen the bracket."""
    a = (data.draw(positive), data.draw(positive))
    d = (data.draw(positive), data.draw(positive))
    lo = (data.draw(positive), data.draw(positive))
    hi = (lo[0] + data.draw(positive), lo[1] + data.draw(positive))
    hull = HullBounds(ubar=hi, ulow=lo)
    grown = HullBounds(ubar=(hi[0] * 1.5, hi[1] * 1.5),
                       ulow=(lo[0] * 0.5, lo[1] * 0.5))
    base = bounds_two_species_m2(a[0], a[1], d[0], d[1], hull, 1)
    wide = bounds_two_species_m2(a[0], a[1], d[0], d[1], grown, 1)
    assert wide.upper >= base.upper * (1 - 1e-12)
    assert wide.lower <= base.lower * (1 + 1e-12)


def test_scaling_covariance_of_two_species_forms():
    # Scaling all intercepts by c scales both closed forms by c.
    args = (0.7, 1.1, 2.0, 3.0)
    c = 2.5
    lo1 = two_species_m2_lower(*args, 0.8, 1.2)
    lo2 = two_species_m2_lower(*args, 0.8 * c, 1.2 * c)
    assert lo2 == pytest.approx(c * lo1, rel=1e-12)
    up1 = two_species_m2_upper(*args, 0.8, 1.2)
    up2 = two_species_m2_upper(*args, 0.8 * c, 1.2 * c)
    assert up2 == pytest.approx(c * up1, rel=1e-12)
