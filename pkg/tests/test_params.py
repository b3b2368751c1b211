"""Parameter records, validation, and the two lossless transforms."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gaussian_bc import (
    ChannelParams,
    ParameterError,
    SourceParams,
    conditional_variance,
    negate_rho_transform,
    scale_variance_transform,
    validate_problem,
)

from helpers import DESK_CHANNEL, DESK_SOURCE


def test_desk_config_is_valid():
    src, ch = validate_problem(DESK_SOURCE, DESK_CHANNEL)
    assert src is DESK_SOURCE and ch is DESK_CHANNEL


def test_rho_one_rejected_by_name():
    with pytest.raises(ParameterError, match="rho must be < 1"):
        validate_problem(SourceParams(1.0, 1.0), DESK_CHANNEL)


def test_equal_noises_rejected_by_name():
    with pytest.raises(ParameterError, match="n1 must be < n2"):
        validate_problem(DESK_SOURCE, ChannelParams(1.0, 2.0, 2.0))


def test_negative_rho_rejected_without_transform():
    with pytest.raises(ParameterError, match="rho must be >= 0"):
        validate_problem(SourceParams(1.0, -0.5), DESK_CHANNEL)


@pytest.mark.parametrize(
    "source, channel",
    [
        (SourceParams(0.0, 0.5), DESK_CHANNEL),
        (SourceParams(-1.0, 0.5), DESK_CHANNEL),
        (SourceParams(math.nan, 0.5), DESK_CHANNEL),
        (DESK_SOURCE, ChannelParams(0.0, 1.0, 2.0)),
        (DESK_SOURCE, ChannelParams(1.0, -1.0, 2.0)),
        (DESK_SOURCE, ChannelParams(1.0, 1.0, 0.5)),
    ],
)
def test_invalid_parameters_rejected(source, channel):
    with pytest.raises(ParameterError):
        validate_problem(source, channel)


@settings(max_examples=300, deadline=None)
@given(
    sigma2=st.floats(-2.0, 5.0),
    rho=st.floats(-1.5, 1.5),
    power=st.floats(-2.0, 5.0),
    n1=st.floats(-1.0, 5.0),
    n2=st.floats(-1.0, 5.0),
)
def test_validate_problem_accepts_exactly_the_invariant_product(sigma2, rho, power, n1, n2):
    valid = sigma2 > 0 and 0 <= rho < 1 and power > 0 and n1 > 0 and n2 > 0 and n1 < n2
    source, channel = SourceParams(sigma2, rho), ChannelParams(power, n1, n2)
    if valid:
        validate_problem(source, channel)
    else:
        with pytest.raises(ParameterError):
            validate_problem(source, channel)


def test_negate_rho_transform_examples():
    assert negate_rho_transform(SourceParams(1.0, -0.5)) == (SourceParams(1.0, 0.5), True)
    assert negate_rho_transform(SourceParams(1.0, 0.0)) == (SourceParams(1.0, 0.0), False)
    assert negate_rho_transform(SourceParams(1.0, 0.9)) == (SourceParams(1.0, 0.9), False)


def test_negate_rho_transform_rejects_unit_correlation():
    for rho in (1.0, -1.0, 1.5):
        with pytest.raises(ParameterError):
            negate_rho_transform(SourceParams(1.0, rho))


@settings(max_examples=200, deadline=None)
@given(rho=st.floats(-0.999, 0.999), sigma2=st.floats(0.01, 100.0))
def test_negate_rho_transform_idempotent(rho, sigma2):
    once, _ = negate_rho_transform(SourceParams(sigma2, rho))
    twice, flip2 = negate_rho_transform(once)
    assert twice == once and flip2 is False
    assert once.rho >= 0


def test_scale_variance_transform_examples():
    assert scale_variance_transform(0.5, 0.5, 1.0, 1.0, 2.0, 3.0) == (1.0, 1.5, 2.0, 3.0)
    d = (0.25, 0.75, 1.5, 2.5)
    assert scale_variance_transform(*d, 1.0, 1.0) == d
    # normalizing unequal variances to the canonical equal-variance form
    _, _, v1, v2 = scale_variance_transform(0.5, 0.5, 4.0, 9.0, 1.0 / 4.0, 1.0 / 9.0)
    assert v1 == 1.0 and v2 == 1.0


def test_scale_variance_transform_rejects_nonpositive_scale():
    for a1, a2 in ((0.0, 1.0), (1.0, -2.0), (math.nan, 1.0)):
        with pytest.raises(ParameterError, match="scale factor"):
            scale_variance_transform(0.5, 0.5, 1.0, 1.0, a1, a2)


@settings(max_examples=200, deadline=None)
@given(
    d1=st.floats(1e-6, 10.0),
    d2=st.floats(1e-6, 10.0),
    v1=st.floats(1e-6, 10.0),
    v2=st.floats(1e-6, 10.0),
    k1=st.integers(-8, 8),
    k2=st.integers(-8, 8),
)
def test_scale_round_trip_exact_for_power_of_two_scales(d1, d2, v1, v2, k1, k2):
    # power-of-two scaling is exact in IEEE arithmetic, so the round trip is the identity
    a1, a2 = 2.0**k1, 2.0**k2
    forward = scale_variance_transform(d1, d2, v1, v2, a1, a2)
    back = scale_variance_transform(*forward, 1.0 / a1, 1.0 / a2)
    assert back == (d1, d2, v1, v2)


def test_conditional_variance():
    assert conditional_variance(DESK_SOURCE) == 0.75
    assert conditional_variance(SourceParams(2.0, 0.0)) == 2.0
