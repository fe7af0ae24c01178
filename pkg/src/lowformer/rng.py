"""Deterministic weight initialization based on SplitMix64.

The generator is a pure function of (seed, counter), so the weight stream
for a given seed is bit-exact across platforms, runs and thread counts.
"""
from __future__ import annotations

import numpy as np

_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_U64 = np.uint64


def _splitmix64(state: np.ndarray) -> np.ndarray:
    """Finalizer of SplitMix64 applied elementwise to uint64 states."""
    z = state + _GAMMA
    z = (z ^ (z >> _U64(30))) * _MIX1
    z = (z ^ (z >> _U64(27))) * _MIX2
    return z ^ (z >> _U64(31))


class Rng:
    """Counter-based SplitMix64 stream mapped to float32 in [-a, a]."""

    def __init__(self, seed: int):
        self.seed = np.uint64(seed & 0xFFFFFFFFFFFFFFFF)
        self.counter = np.uint64(0)

    def _next_block(self, n: int) -> np.ndarray:
        with np.errstate(over="ignore"):
            idx = self.counter + np.arange(n, dtype=np.uint64)
            out = _splitmix64(self.seed + idx * _GAMMA)
        self.counter += np.uint64(n)
        return out

    def uniform(self, shape, scale: float) -> np.ndarray:
        """float32 samples uniform in [-scale, scale), shape `shape`."""
        n = int(np.prod(shape))
        bits = self._next_block(n)
        # top 24 bits -> [0, 1) at float32 resolution
        u = (bits >> np.uint64(40)).astype(np.float64) / float(1 << 24)
        x = (2.0 * u - 1.0) * scale
        return x.astype(np.float32).reshape(shape)

    def conv_weight(self, out_ch: int, in_ch_per_group: int, kh: int, kw: int) -> np.ndarray:
        fan_in = in_ch_per_group * kh * kw
        return self.uniform((out_ch, in_ch_per_group, kh, kw), 1.0 / np.sqrt(fan_in))

    def conv_transpose_weight(self, in_ch: int, out_ch_per_group: int, kh: int, kw: int) -> np.ndarray:
        fan_in = in_ch * kh * kw
        return self.uniform((in_ch, out_ch_per_group, kh, kw), 1.0 / np.sqrt(fan_in))

    def linear_weight(self, out_f: int, in_f: int) -> np.ndarray:
        return self.uniform((out_f, in_f), 1.0 / np.sqrt(in_f))
