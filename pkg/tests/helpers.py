"""Shared fixtures for the test suite: the desk configuration and config draws."""

from __future__ import annotations

import random

from gaussian_bc import ChannelParams, SourceParams

DESK_SOURCE = SourceParams(1.0, 0.5)
DESK_CHANNEL = ChannelParams(1.0, 1.0, 2.0)


def random_valid_configs(count: int, seed: int) -> list[tuple[SourceParams, ChannelParams]]:
    """Seeded draws of valid problem instances spanning moderate ranges."""
    rng = random.Random(seed)
    configs = []
    for _ in range(count):
        sigma2 = rng.uniform(0.1, 10.0)
        rho = rng.uniform(0.0, 0.99)
        power = rng.uniform(0.1, 10.0)
        n1 = rng.uniform(0.1, 5.0)
        n2 = n1 * rng.uniform(1.01, 5.0)
        configs.append((SourceParams(sigma2, rho), ChannelParams(power, n1, n2)))
    return configs
