"""Deterministic pseudo-randomness for every generator in the package.

All randomness flows through SplitMix64, a 64-bit counter-based generator
(Steele, Lea & Flood's mixing function).  The algorithm is pinned here on
purpose: graphs produced from a given seed must be bit-identical across
runs, platforms and Python versions, because acceptance suites freeze
values derived from them.  Do not swap this for ``random`` or a library
generator whose stream may change between releases.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """SplitMix64 stream seeded by a 64-bit integer.

    ``split(index)`` derives an independent child stream from the original
    seed and the index, so substreams do not depend on how many values the
    parent has consumed.
    """

    __slots__ = ("_seed", "_state")

    def __init__(self, seed: int):
        self._seed = seed & _MASK64
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        return _mix(self._state)

    def split(self, index: int) -> "SplitMix64":
        return SplitMix64(_mix(self._seed ^ _mix((index + 1) * _GOLDEN & _MASK64)))

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * 2.0**-53

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound), unbiased via rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        # reject draws from the final partial copy of [0, bound)
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            value = self.next_u64()
            if value < limit:
                return value % bound

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
