from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from cubeops.operad import (
    Configuration,
    LittleCube,
    NotDisjoint,
    OperadError,
    Permutation,
    act,
    config_from_json,
    config_to_json,
    extract,
    full_compose,
    halves,
    operad_unit,
    partial_compose,
    restrict,
    unit_configuration,
)

from strategies import configurations, cubes, permutations, points


def cfg(*images):
    return Configuration.from_images(1, [[b] for b in images])


def image_of(outer, inner):
    """Image of ``outer o inner`` read straight off the two images."""
    return [
        (lo + (hi - lo) * a, lo + (hi - lo) * b)
        for (lo, hi), (a, b) in zip(zip(outer.los, outer.his), zip(inner.los, inner.his))
    ]


def test_unit_is_identity():
    u = operad_unit(1)
    assert u(F(2, 7)) == (F(2, 7),)
    assert u.is_identity()


def test_partial_compose_by_hand():
    c = cfg((0, F(1, 2)), (F(1, 2), 1))
    d = cfg((0, F(1, 2)))
    assert partial_compose(c, 1, d) == cfg((0, F(1, 4)), (F(1, 2), 1))
    assert partial_compose(c, 1, unit_configuration(1)) == c


def test_compose_with_empty_drops_cube():
    c = cfg((0, F(1, 4)), (F(1, 2), F(3, 4)), (F(3, 4), 1))
    empty = Configuration(1, ())
    assert partial_compose(c, 2, empty) == restrict(c, 2)


def test_full_compose_by_hand():
    c = cfg((0, F(1, 2)), (F(1, 2), 1))
    out = full_compose(c, [cfg((0, F(1, 2))), cfg((F(1, 2), 1))])
    assert out == cfg((0, F(1, 4)), (F(3, 4), 1))


def test_action_swaps():
    c1, c2 = halves(1).cubes
    swapped = act(Configuration(1, (c1, c2)), Permutation((2, 1)))
    assert swapped.cubes == (c2, c1)
    c = halves(2)
    assert act(c, Permutation.identity(2)) == c


def test_restriction_and_extraction():
    c1, c2 = halves(1).cubes
    c = Configuration(1, (c1, c2))
    assert restrict(c, 1).cubes == (c2,)
    assert restrict(Configuration(1, (c1,)), 1).arity == 0
    assert extract(c, 2) == c2
    assert extract(Configuration(1, (c1,)), 1) == c1


def test_overlapping_cubes_rejected():
    with pytest.raises(NotDisjoint):
        cfg((0, F(1, 2)), (F(1, 4), 1))


def test_shared_faces_allowed():
    assert cfg((0, F(1, 2)), (F(1, 2), 1)).arity == 2


def test_bad_cube_rejected():
    with pytest.raises(OperadError):
        LittleCube((F(1, 2),), (F(3, 4),))


def test_index_errors():
    with pytest.raises(IndexError):
        restrict(halves(1), 3)


def test_json_round_trip():
    c = halves(2)
    assert config_from_json(config_to_json(c)) == c
    assert config_to_json(halves(1)) == {"dim": 1, "cubes": [[["0", "1/2"]], [["1/2", "1"]]]}


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(cubes(n), cubes(n), points(n))))
def test_cube_composition_matches_images(args):
    a, b, x = args
    ab = a @ b
    assert list(zip(ab.los, ab.his)) == image_of(a, b)
    assert ab(x) == a(b(x))
    assert ab.invert(ab(x)) == x


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(configurations(n, 3), configurations(n, 2), configurations(n, 2))))
def test_partial_then_full(args):
    c, d, e = args
    ds = [d, unit_configuration(c.dim), e]
    full = full_compose(c, ds)
    step = partial_compose(partial_compose(c, 3, e), 1, d)
    assert full == step
    assert full.disjointness_violation() is None


@given(st.integers(1, 2).flatmap(lambda n: st.tuples(configurations(n, 3), permutations(3), permutations(3))))
def test_action_is_right_action(args):
    c, s, t = args
    assert act(act(c, s), t) == act(c, s * t)


@given(st.integers(1, 3).flatmap(lambda n: configurations(n, 4)))
def test_simplicial_identities(c):
    for i in range(1, 5):
        for j in range(i + 1, 5):
            assert restrict(restrict(c, j), i) == restrict(restrict(c, i), j - 1)


@given(st.integers(1, 3).flatmap(lambda n: configurations(n, 4)))
def test_extract_picks_cube(c):
    for i in range(1, 5):
        assert extract(c, i) == c.cubes[i - 1]


@given(st.integers(1, 2).flatmap(lambda n: st.tuples(configurations(n, 4), permutations(4))))
def test_extraction_after_action(args):
    # cube i of c lands in slot sigma(i) of c . sigma
    c, sigma = args
    moved = act(c, sigma)
    for i in range(1, 5):
        assert extract(moved, sigma(i)) == extract(c, i)
        assert extract(moved, i) == extract(c, sigma.inverse()(i))


def test_action_example_three_cycle():
    c = cfg((0, F(1, 4)), (F(1, 4), F(1, 2)), (F(1, 2), 1))
    moved = act(c, Permutation((2, 3, 1)))
    assert moved.cubes == (c.cubes[2], c.cubes[0], c.cubes[1])
