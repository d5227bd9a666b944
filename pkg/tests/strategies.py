"""Hypothesis strategies over dyadic rationals."""

from fractions import Fraction

from hypothesis import strategies as st

from cubeops.generators import random_configuration
from cubeops.operad import LittleCube, Permutation
from cubeops.rng import SplitMix64

DENOM = 256


def unit_rationals():
    return st.integers(0, DENOM).map(lambda k: Fraction(k, DENOM))


def interior_rationals():
    return st.integers(1, DENOM - 1).map(lambda k: Fraction(k, DENOM))


def points(n):
    return st.tuples(*[interior_rationals()] * n)


def closed_points(n):
    return st.tuples(*[unit_rationals()] * n)


@st.composite
def sides(draw):
    a = draw(st.integers(0, DENOM - 1))
    b = draw(st.integers(a + 1, DENOM))
    return Fraction(a, DENOM), Fraction(b, DENOM)


def cubes(n):
    return st.lists(sides(), min_size=n, max_size=n).map(LittleCube.from_image)


def configurations(n, r):
    return st.integers(0, 2**64 - 1).map(lambda seed: random_configuration(SplitMix64(seed), n, r, bits=8))


def permutations(r):
    return st.permutations(list(range(1, r + 1))).map(lambda p: Permutation(tuple(p)))


def times():
    return st.integers(0, 16).map(lambda k: Fraction(k, 16))
