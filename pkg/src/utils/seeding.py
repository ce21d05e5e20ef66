"""Deterministic per-trajectory seed derivation."""

import numpy as np

_MASK64 = (1 << 64) - 1
_GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def splitmix64(state: int) -> int:
    """One splitmix64 output for the given 64-bit state."""
    z = (state + _GOLDEN_GAMMA) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def trajectory_seed(master_seed: int, index: int) -> int:
    """Seed for trajectory `index`; independent of the order trajectories are run in."""
    return splitmix64((splitmix64(master_seed & _MASK64) + index * _GOLDEN_GAMMA) & _MASK64)


def trajectory_rng(master_seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng(trajectory_seed(master_seed, index))
