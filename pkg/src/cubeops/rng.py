"""SplitMix64: the fixed pseudorandom source behind every sample set.

The generator is specified here rather than borrowed from :mod:`random` so that
reports are reproducible across Python versions and across implementations in
other languages. State update and output mixing follow the reference
SplitMix64 constants:

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

all modulo 2**64. Sub-streams are derived with :func:`derive_seed`, which mixes
a FNV-1a hash of a label into the parent seed.
"""

import math
from fractions import Fraction

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15

DEFAULT_SEED = 42
DEFAULT_DENOM_BITS = 12


def _mix(z):
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def fnv1a64(text):
    h = 0xCBF29CE484222325
    for byte in text.encode("utf-8"):
        h ^= byte
        h = (h * 0x100000001B3) & MASK64
    return h


def derive_seed(seed, label):
    """Seed of the sub-stream named ``label`` under ``seed``."""
    return _mix((seed ^ fnv1a64(label)) & MASK64)


class SplitMix64:
    def __init__(self, seed=DEFAULT_SEED):
        self.state = seed & MASK64

    def next_u64(self):
        self.state = (self.state + GOLDEN) & MASK64
        return _mix(self.state)

    def below(self, n):
        """Uniform integer in ``[0, n)`` by rejection (no modulo bias)."""
        if n <= 0:
            raise ValueError("bound must be positive")
        limit = MASK64 - (MASK64 + 1) % n
        while True:
            x = self.next_u64()
            if x <= limit:
                return x % n

    def integer(self, lo, hi):
        """Uniform integer in the closed range ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def shuffle(self, items):
        items = list(items)
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
        return items

    def coin(self, num=1, den=2):
        return self.below(den) < num

    def rational(self, bits=DEFAULT_DENOM_BITS):
        """Rational in the open interval (0, 1) with denominator dividing ``2**bits``."""
        d = 1 << bits
        return Fraction(self.integer(1, d - 1), d)

    def rational_between(self, lo, hi, bits=DEFAULT_DENOM_BITS, closed=False):
        """Rational of denominator dividing ``2**bits`` in ``(lo, hi)``.

        With ``closed=True`` the endpoints are admissible. Falls back to the
        midpoint when the open interval holds no grid point.
        """
        d = 1 << bits
        if closed:
            k0, k1 = math.ceil(lo * d), math.floor(hi * d)
        else:
            k0, k1 = math.floor(lo * d) + 1, math.ceil(hi * d) - 1
        if k0 > k1:
            return (lo + hi) / 2
        return Fraction(self.integer(k0, k1), d)
