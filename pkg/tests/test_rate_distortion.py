"""Rate-distortion closed forms, the joint-rate oracle, and the converse endpoints."""

import pytest

from gaussian_bc import (
    InfeasibleDistortionError,
    OutOfRangeError,
    SourceParams,
    channel_capacity,
    conditional_info_bound,
    conditional_variance,
    d2_lower_via_rx1,
    d2_min_at_rx1,
    d1_min_at_d2min,
    d_min,
    r_conditional,
    r_joint_numeric,
    r_scalar,
)

from helpers import DESK_CHANNEL, DESK_SOURCE, random_valid_configs


class TestScalarRates:
    def test_r_scalar(self):
        assert r_scalar(1.0, 0.25) == 1.0
        assert r_scalar(1.0, 1.0) == 0.0
        assert r_scalar(1.0, 2.0) == 0.0  # above-variance distortion is free
        with pytest.raises(OutOfRangeError):
            r_scalar(1.0, 0.0)
        with pytest.raises(OutOfRangeError):
            r_scalar(-1.0, 0.5)

    def test_r_conditional(self):
        assert r_conditional(DESK_SOURCE, 0.75) == 0.0
        assert r_conditional(DESK_SOURCE, 0.375) == 0.5
        # independence: conditioning is free information only when rho > 0
        assert r_conditional(SourceParams(1.0, 0.0), 0.5) == r_scalar(1.0, 0.5)
        with pytest.raises(OutOfRangeError):
            r_conditional(DESK_SOURCE, 0.8)
        with pytest.raises(OutOfRangeError):
            r_conditional(DESK_SOURCE, 0.0)

    def test_channel_capacity(self):
        assert channel_capacity(1.0, 1.0) == 0.5
        assert channel_capacity(3.0, 1.0) == 1.0
        assert channel_capacity(1e-12, 1.0) == pytest.approx(0.0, abs=1e-11)
        with pytest.raises(OutOfRangeError):
            channel_capacity(0.0, 1.0)


class TestJointRateOracle:
    def test_desk_spot_value(self):
        assert r_joint_numeric(DESK_SOURCE, 0.625, 0.625) == pytest.approx(0.5, abs=1e-4)

    def test_zero_rate_at_full_distortion(self):
        assert r_joint_numeric(DESK_SOURCE, 1.0, 1.0) == 0.0
        assert r_joint_numeric(DESK_SOURCE, 3.0, 2.0) == 0.0  # clamped above sigma2

    def test_independent_components_decouple(self):
        src = SourceParams(1.0, 0.0)
        expected = r_scalar(1.0, 0.5) + r_scalar(1.0, 0.5)
        assert r_joint_numeric(src, 0.5, 0.5) == pytest.approx(expected, abs=1e-4)

    def test_one_component_released_degenerates_to_scalar(self):
        for delta in (0.3, 0.6):
            assert r_joint_numeric(DESK_SOURCE, delta, 1.0) == pytest.approx(
                r_scalar(1.0, delta), abs=1e-4
            )
            assert r_joint_numeric(DESK_SOURCE, 1.0, delta) == pytest.approx(
                r_scalar(1.0, delta), abs=1e-4
            )

    def test_strong_correlation_interior_optimum(self):
        # loose first constraint: a good second description pins the first
        # component's error well below its cap, so the optimum is interior
        src = SourceParams(1.0, 0.9)
        assert r_joint_numeric(src, 1.0, 0.1) == pytest.approx(r_scalar(1.0, 0.1), abs=1e-4)
        assert r_joint_numeric(src, 0.5, 0.1) == pytest.approx(r_scalar(1.0, 0.1), abs=1e-4)

    def test_monotone_nonincreasing(self):
        grid = [0.2, 0.4, 0.6, 0.8, 1.0]
        in_d1 = [r_joint_numeric(DESK_SOURCE, d, 0.7) for d in grid]
        in_d2 = [r_joint_numeric(DESK_SOURCE, 0.7, d) for d in grid]
        for seq in (in_d1, in_d2):
            assert all(a >= b - 1e-6 for a, b in zip(seq, seq[1:]))

    def test_consistency_with_capacity_along_the_companion_floor(self):
        cap = channel_capacity(DESK_CHANNEL.power, DESK_CHANNEL.n1)
        lo = d_min(DESK_SOURCE, DESK_CHANNEL, 1)
        hi = d1_min_at_d2min(DESK_SOURCE, DESK_CHANNEL)
        for i in range(5):
            d1 = lo + (hi - lo) * (i + 1) / 6.0
            floor = d2_min_at_rx1(DESK_SOURCE, DESK_CHANNEL, d1)
            assert r_joint_numeric(DESK_SOURCE, d1, floor) == pytest.approx(cap, abs=1e-4)

    def test_domain(self):
        with pytest.raises(OutOfRangeError):
            r_joint_numeric(DESK_SOURCE, 0.0, 0.5)
        with pytest.raises(OutOfRangeError):
            r_joint_numeric(DESK_SOURCE, 0.5, -0.1)


class TestConditionalInfoBound:
    def test_exact_zero_at_the_receiver2_floor(self):
        # exact cancellation, not approximate
        floor = d_min(DESK_SOURCE, DESK_CHANNEL, 2)
        assert conditional_info_bound(DESK_SOURCE, DESK_CHANNEL, floor) == 0.0

    def test_exact_zero_across_random_configs(self):
        for source, channel in random_valid_configs(20, seed=61):
            floor = d_min(source, channel, 2)
            assert conditional_info_bound(source, channel, floor) == 0.0

    def test_full_variance_recovers_capacity(self):
        value = conditional_info_bound(DESK_SOURCE, DESK_CHANNEL, DESK_SOURCE.sigma2)
        assert value == pytest.approx(
            channel_capacity(DESK_CHANNEL.power, DESK_CHANNEL.n1), rel=1e-12
        )

    def test_below_floor_is_infeasible(self):
        with pytest.raises(InfeasibleDistortionError):
            conditional_info_bound(DESK_SOURCE, DESK_CHANNEL, 0.6)

    def test_monotone_increasing(self):
        values = [
            conditional_info_bound(DESK_SOURCE, DESK_CHANNEL, d) for d in (0.7, 0.8, 0.9, 1.0)
        ]
        assert all(a < b for a, b in zip(values, values[1:]))


class TestReceiver2FloorFromSideInfo:
    def test_exact_floor_at_the_conditional_variance(self):
        cv = conditional_variance(DESK_SOURCE)
        assert d2_lower_via_rx1(DESK_SOURCE, DESK_CHANNEL, cv) == d_min(DESK_SOURCE, DESK_CHANNEL, 2)

    def test_exact_floor_across_random_configs(self):
        for source, channel in random_valid_configs(20, seed=71):
            cv = conditional_variance(source)
            assert d2_lower_via_rx1(source, channel, cv) == d_min(source, channel, 2)

    def test_hand_value(self):
        assert d2_lower_via_rx1(DESK_SOURCE, DESK_CHANNEL, 0.375) == pytest.approx(1.0, rel=1e-12)

    def test_divergence_at_vanishing_side_info_distortion(self):
        assert d2_lower_via_rx1(DESK_SOURCE, DESK_CHANNEL, 1e-12) > 1e9

    def test_domain(self):
        with pytest.raises(OutOfRangeError):
            d2_lower_via_rx1(DESK_SOURCE, DESK_CHANNEL, 0.8)
        with pytest.raises(OutOfRangeError):
            d2_lower_via_rx1(DESK_SOURCE, DESK_CHANNEL, 0.0)
