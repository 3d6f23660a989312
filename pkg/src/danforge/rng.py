"""Seedable 64-bit PRNG used by the synthetic generators.

SplitMix64 (Steele, Lea, Flood 2014): a counter-based generator with a
trivially portable update, so generated instances are reproducible from
(seed, draw order) alone, independent of any host-language RNG.  Streams
are split by hashing labels into fresh seeds.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15

ALGORITHM = "splitmix64"


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """Deterministic 64-bit generator; draw order is part of the contract."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        return _mix(self._state)

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 bits of precision."""
        return (self.next_u64() >> 11) * (2.0 ** -53)

    def randrange(self, k: int) -> int:
        """Uniform integer in [0, k), unbiased via rejection."""
        if k <= 0:
            raise ValueError("randrange needs k >= 1")
        limit = (1 << 64) - ((1 << 64) % k)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % k

    def choice(self, xs):
        return xs[self.randrange(len(xs))]

    def shuffle(self, xs: list) -> None:
        """In-place Fisher-Yates."""
        for i in range(len(xs) - 1, 0, -1):
            j = self.randrange(i + 1)
            xs[i], xs[j] = xs[j], xs[i]


def substream(seed: int, *labels: int) -> SplitMix64:
    """Independent child stream for (seed, labels), order-insensitive use.

    Each label is folded through the SplitMix64 finalizer so that nearby
    seeds and labels do not produce correlated streams.
    """
    state = _mix(seed & _MASK)
    for lab in labels:
        state = _mix((state ^ _mix(lab & _MASK)) & _MASK)
    return SplitMix64(state)


def zipf_weights(count: int, skew: float, rng: SplitMix64) -> list[float]:
    """Weights 1/(rank+1)^skew with ranks assigned by a random shuffle.

    skew = 0 gives uniform weights; larger skew concentrates mass.
    """
    ranks = list(range(count))
    rng.shuffle(ranks)
    if skew == 0.0:
        return [1.0] * count
    return [1.0 / float(r + 1) ** skew for r in ranks]
