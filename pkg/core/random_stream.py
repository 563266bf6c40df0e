"""Seeded, portable random stream.

Draws come from numpy's PCG64 bit generator, whose raw 64-bit output is
identical on every platform for a given seed. Everything else is derived from
the raw words here rather than from `Generator` methods, so the mapping from
seed to draws is fixed by this module alone:

    uniform()      = (raw >> 11) * 2**-53          in [0, 1)
    randbelow(n)   = floor(uniform() * n)
    normal()       = Box-Muller on two uniforms (cosine branch)
"""

import math

import numpy as np

_TWO_POW_53 = float(2 ** 53)


class RandomStream:
    """Single-owner random stream. Not safe to share between threads."""

    def __init__(self, seed: int = 0):
        if seed < 0 or seed >= 2 ** 64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
        self.seed = int(seed)
        self._bits = np.random.PCG64(self.seed)

    def uniform(self) -> float:
        raw = int(self._bits.random_raw())
        return (raw >> 11) / _TWO_POW_53

    def uniforms(self, size: int) -> np.ndarray:
        raw = self._bits.random_raw(size)
        return (raw >> np.uint64(11)).astype(np.float64) / _TWO_POW_53

    def randbelow(self, n: int) -> int:
        if n <= 0:
            raise ValueError(f"randbelow needs n >= 1, got {n}")
        return min(int(self.uniform() * n), n - 1)

    def normal(self, mean: float = 0.0, sigma: float = 1.0) -> float:
        u1 = self.uniform()
        u2 = self.uniform()
        # 1 - u1 lies in (0, 1], keeps the log finite
        radius = math.sqrt(-2.0 * math.log(1.0 - u1))
        return mean + sigma * radius * math.cos(2.0 * math.pi * u2)
