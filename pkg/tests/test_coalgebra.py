from fractions import Fraction as F

from hypothesis import given, strategies as st

from cubeops.codec import SWAP12
from cubeops.coalgebra import (
    SphereCoalgebra,
    SuspensionCoalgebra,
    coend_slice,
    coend_to_comonadic,
    comonadic_to_coend,
    equivariance_residual,
    factorization_residual,
    nabla_sphere,
    nabla_suspension,
    naturality_residual,
    operad_morphism_residual,
    pinch,
    restriction_residual,
)
from cubeops.comonad import Peaked, Trivial
from cubeops.operad import Configuration, halves, unit_configuration
from cubeops.spaces import BASE, TO_BASE, Generator, SpherePoint, SuspensionPoint, WedgePoint

from strategies import configurations, permutations, points

H = F(1, 2)


def sp(*xs):
    return SpherePoint(tuple(F(x) for x in xs))


def test_nabla_sphere_examples():
    c = halves(1)
    assert nabla_sphere(c, sp(F(1, 4))) == WedgePoint(2, 1, sp(H))
    assert nabla_sphere(c, sp(H)) is BASE
    assert nabla_sphere(c, BASE) is BASE


def test_nabla_suspension_examples():
    c = halves(1)
    assert nabla_suspension(c, SuspensionPoint((F(1, 4),), "x")) == WedgePoint(2, 1, SuspensionPoint((H,), "x"))
    assert nabla_suspension(c, BASE) is BASE


def test_pinch_examples():
    assert pinch(SuspensionPoint((F(1, 4),), "x")) == WedgePoint(2, 1, SuspensionPoint((H,), "x"))
    assert pinch(SuspensionPoint((F(3, 4),), "x")) == WedgePoint(2, 2, SuspensionPoint((H,), "x"))
    assert pinch(SuspensionPoint((H,), "x")) is BASE


def test_pinch_in_two_dimensions_keeps_second_coordinate():
    p = SuspensionPoint((F(3, 4), F(1, 3)), 1)
    assert pinch(p) == WedgePoint(2, 2, SuspensionPoint((H, F(1, 3)), 1))


def test_coend_to_comonadic():
    s = SuspensionCoalgebra(1)
    p = SuspensionPoint((F(1, 3),), 2)
    elem = coend_to_comonadic(s, p)
    assert isinstance(elem, Peaked) and elem.t == p.t
    assert elem == coend_slice(s, p)
    assert coend_to_comonadic(s, BASE) == Trivial(1)


def test_trivial_comonadic_structure():
    structure = comonadic_to_coend(lambda x: Trivial(1), 1)
    assert structure.delta(halves(1), sp(F(1, 4))) is BASE


def test_round_trip_sphere():
    s = SphereCoalgebra(2)
    back = comonadic_to_coend(s.element, 2)
    theta = halves(2)
    for x in (sp(F(1, 4), F(1, 3)), sp(F(3, 4), F(1, 2)), BASE):
        assert back.delta(theta, x) == s.delta(theta, x)


def test_unit_configuration_is_identity():
    x = sp(F(2, 7))
    assert nabla_sphere(unit_configuration(1), x) == WedgePoint(1, 1, x)


def test_naturality_examples():
    p = SuspensionPoint((F(1, 4),), 1)
    assert naturality_residual(SWAP12, halves(1), p) is None
    assert naturality_residual(TO_BASE, halves(1), p) is None


@given(
    st.integers(1, 2).flatmap(
        lambda n: st.tuples(configurations(n, 2), configurations(n, 2), configurations(n, 1), points(n))
    )
)
def test_operad_morphism_sphere_and_suspension(args):
    theta, d1, d2, t = args
    for structure, x in (
        (SphereCoalgebra(theta.dim), SpherePoint(t)),
        (SuspensionCoalgebra(theta.dim), SuspensionPoint(t, 3)),
    ):
        assert operad_morphism_residual(structure, theta, [d1, d2], x) is None
        assert operad_morphism_residual(structure, theta, [Configuration(theta.dim, ()), d2], x) is None


@given(st.integers(1, 2).flatmap(lambda n: st.tuples(configurations(n, 3), permutations(3), points(n))))
def test_equivariance_and_restriction(args):
    theta, sigma, t = args
    s = SuspensionCoalgebra(theta.dim)
    x = SuspensionPoint(t, 1)
    assert equivariance_residual(s, theta, sigma, x) is None
    for i in (1, 2, 3):
        assert restriction_residual(s, theta, i, x) is None
    assert factorization_residual(theta, x) is None


@given(st.integers(1, 2).flatmap(lambda n: st.tuples(configurations(n, 3), points(n))))
def test_nabla_matches_hand_inverse(args):
    theta, t = args
    w = nabla_sphere(theta, SpherePoint(t))
    hits = [i for i, c in enumerate(theta.cubes, 1) if all(lo < x < hi for x, lo, hi in zip(t, c.los, c.his))]
    if not hits:
        assert w is BASE
        return
    (i,) = hits
    c = theta.cubes[i - 1]
    pre = tuple((x - lo) / (hi - lo) for x, lo, hi in zip(t, c.los, c.his))
    assert w == WedgePoint(3, i, SpherePoint(pre))


def test_generator_structure_element():
    s = SuspensionCoalgebra(1)
    p = SuspensionPoint((F(1, 3),), 1)
    assert s.element(p).loop.x == Generator(1, 1).x
