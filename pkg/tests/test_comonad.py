from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from cubeops.codec import KILL2, SWAP12, fixture
from cubeops.comonad import (
    Peaked,
    PostMapped,
    Precomposed,
    PropertyDViolation,
    Threshold,
    Trivial,
    cofree_lift,
    cofree_unlift,
    comultiply,
    counit,
    cube_test_set,
    evaluate,
    expand_to_sequence,
    functor_map,
    generic_comonad_element,
    property_d_violation,
    sequence_compatible,
)
from cubeops.generators import Sampler
from cubeops.geometry import DimensionMismatch, rect
from cubeops.operad import Configuration, LittleCube, LittleCubesOperad, OnePointOperad, halves
from cubeops.spaces import BASE, IDENTITY, TO_BASE, Generator, IdentityLoop, SpherePoint, StepLoop, WedgePoint

from strategies import cubes

H = F(1, 2)


def cube(*bounds):
    return LittleCube.from_image(bounds)


def peaked_by_hand(t, loop, c):
    """``loop(c^-1 t)`` when ``t`` is strictly inside ``c``."""
    pre = []
    for x, lo, hi in zip(t, c.los, c.his):
        if not lo < x < hi:
            return BASE
        pre.append((x - lo) / (hi - lo))
    return loop.at(tuple(pre))


def test_eval_examples():
    ell = IdentityLoop(1)
    assert evaluate(Trivial(1), cube((0, 1))) is BASE
    assert evaluate(Peaked((H,), ell), cube((F(1, 4), F(3, 4)))) == SpherePoint((H,))
    assert evaluate(Peaked((H,), ell), cube((0, F(1, 4)))) is BASE
    assert evaluate(Threshold(F(3, 4)), cube((0, F(7, 8)))) == F(1, 8)


def test_dimension_checked():
    with pytest.raises(DimensionMismatch):
        evaluate(Trivial(2), cube((0, 1)))


def test_counit_examples():
    ell = Generator(1, 5)
    assert counit(Peaked((F(1, 3),), ell)) == ell.at((F(1, 3),))
    assert counit(Trivial(1)) is BASE
    assert counit(Threshold(F(5, 8))) == F(3, 8)


def test_comultiply_examples():
    f = Peaked((H,), IdentityLoop(1))
    assert comultiply(f, LittleCube.identity(1)) == f
    assert comultiply(f, cube((0, H))).eval(cube((H, 1))) is BASE
    c = cube((F(1, 4), 1))
    assert counit(comultiply(f, c)) == f.eval(c)


def test_functor_map():
    f = Peaked((F(1, 3),), Generator(1, 2))
    assert functor_map(IDENTITY, f) == f
    assert functor_map(TO_BASE, f) == Trivial(1)


def test_expand_to_sequence():
    t = (F(1, 4),)
    f = Peaked(t, IdentityLoop(1))
    theta = halves(1)
    assert expand_to_sequence(f, theta) == WedgePoint(2, 1, SpherePoint((H,)))
    assert expand_to_sequence(Trivial(1), theta) is BASE
    for i in (1, 2):
        assert sequence_compatible(f, theta, i)


def test_property_d_violation_raised():
    broken = fixture("broken", dim=1)
    with pytest.raises(PropertyDViolation):
        expand_to_sequence(broken, halves(1))
    assert property_d_violation(broken, [halves(1).cubes]) is not None


def test_generic_element_over_one_point_operad():
    point = OnePointOperad()
    for value in (1, SpherePoint((H,)), F(1, 3)):
        assert generic_comonad_element(point, lambda theta, v=value: v) is None
    assert generic_comonad_element(point, lambda theta: BASE) is not None


def test_generic_element_over_cubes_accepts_threshold():
    f = Threshold(F(3, 4))
    assert generic_comonad_element(LittleCubesOperad(1), lambda theta: f.eval(theta.cubes[0])) is not None
    broken = fixture("broken", dim=1)
    assert generic_comonad_element(LittleCubesOperad(1), lambda theta: broken.eval(theta.cubes[0])) is None


def test_cofree_adjunction_round_trip():
    structure = lambda x: Peaked(x.coords, IdentityLoop(1)) if x is not BASE else Trivial(1)
    lifted = cofree_lift(IDENTITY, structure)
    x = SpherePoint((F(2, 5),))
    assert cofree_unlift(lifted)(x) == x
    assert lifted(x) == structure(x)
    assert cofree_lift(TO_BASE, lambda a: Trivial(1))(BASE) == Trivial(1)


def test_postmapped_registered_maps():
    twos = StepLoop(1, [(rect((0, 1)), 2)])
    assert PostMapped(Peaked((H,), twos), KILL2) == Trivial(1)
    ones = StepLoop(1, [(rect((0, 1)), 1)])
    assert PostMapped(Peaked((H,), ones), SWAP12).eval(LittleCube.identity(1)) == 2


def test_threshold_domain():
    with pytest.raises(ValueError):
        Threshold(F(1, 4))
    with pytest.raises(ValueError):
        Threshold(1)


@given(st.integers(1, 2).flatmap(lambda n: st.tuples(st.integers(0, 2**32), cubes(n), cubes(n))))
def test_peaked_against_hand_formula(args):
    seed, c, d = args
    s = Sampler(c.dim, seed)
    t, loop = s.interior_point(), s.loop()
    f = Peaked(t, loop)
    assert f.eval(c) == peaked_by_hand(t, loop, c)
    # comultiplication: Delta(f)(c)(d) = f(c o d)
    assert comultiply(f, c).eval(d) == peaked_by_hand(t, loop, c @ d)
    assert Precomposed(f, c).simplified().eval(d) == f.eval(c @ d)


@given(st.integers(1, 2).flatmap(lambda n: st.tuples(st.integers(0, 2**32), cubes(n), cubes(n), cubes(n))))
def test_coassociativity_all_terms(args):
    seed, c, d, e = args
    s = Sampler(c.dim, seed)
    f = s.element()
    assert comultiply(comultiply(f, c), d).eval(e) == f.eval(c @ (d @ e))
    assert counit(comultiply(f, c)) == f.eval(c)
    assert comultiply(f, LittleCube.identity(c.dim)).eval(d) == f.eval(d)


@given(st.integers(1, 2), st.integers(0, 2**32), st.integers(0, 2**32))
def test_property_d_on_generated_pairs(n, seed, pair_seed):
    f = Sampler(n, seed).element()
    pairs = Sampler(n, pair_seed)
    pairs = [pairs.disjoint_pair() for _ in range(4)]
    assert property_d_violation(f, pairs) is None


def test_test_set_has_halves():
    left, right = halves(1).cubes
    ts = cube_test_set(1)
    assert left in ts and right in ts and LittleCube.identity(1) in ts
    assert Configuration(1, (left, right)).arity == 2
