"""Deterministic 64-bit pseudo-random generator (splitmix64).

One tiny, fully documented generator backs every seeded campaign so that
reports are reproducible bit for bit across runs and platforms: the state
advances by the odd constant 0x9E3779B97F4A7C15 and is scrambled by two
xor-shift-multiply rounds.  Not cryptographic; statistical quality is ample
for sampling campaigns and test-parameter generation.
"""

from __future__ import annotations

from fractions import Fraction

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK
        return z ^ (z >> 31)

    def next_unit_fraction(self) -> Fraction:
        """Exact rational in [0, 1) with denominator 2^53."""
        return Fraction(self.next_u64() >> 11, 1 << 53)

    def next_float(self) -> float:
        """Float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * 2.0 ** -53

    def next_below(self, n: int) -> int:
        # modulo reduction; the tiny bias is irrelevant at n << 2^64
        return self.next_u64() % n

    def next_positive_rational(self, max_part: int = 1000) -> Fraction:
        """Random p/q with 1 <= p, q <= max_part."""
        return Fraction(1 + self.next_below(max_part), 1 + self.next_below(max_part))
