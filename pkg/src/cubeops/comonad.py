"""The comonad ``C_n`` on pointed spaces.

An element of ``C_n(X)`` is a compatible sequence of maps ``C_n(r) -> X^{v r}``;
it is determined by its arity-one part ``f: C_n(1) -> X``, which must satisfy
property (D): on two cubes with disjoint interiors at most one value is
non-base. Elements are represented by the symbolic terms below, each of which
can be evaluated on a little cube. Equality of elements is sampled pointwise
equality over :func:`cube_test_set`, never structural.
"""

from abc import ABC, abstractmethod
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional

from . import kernels
from .geometry import HALF, ONE, DimensionMismatch
from .operad import Configuration, LittleCube, restrict
from .rng import SplitMix64, derive_seed
from .spaces import (
    BASE,
    LoopMap,
    MappedLoop,
    PointedMap,
    WedgePoint,
    is_base,
    maps_agree,
    wedge_collapse,
)

CUBE_TEST_SEED = 0xC0BE
CUBE_TEST_EXTRA = 8


class PropertyDViolation(ValueError):
    """Two cubes with disjoint interiors both received non-base values."""

    def __init__(self, cubes, values=None):
        super().__init__(f"property (D) violated on {cubes}")
        self.cubes = cubes
        self.values = values


@lru_cache(maxsize=None)
def cube_test_set(n, extra=CUBE_TEST_EXTRA):
    """Deterministic cubes used to compare elements of ``C_n(X)``."""
    q = Fraction(1, 4)
    cubes = [
        LittleCube.identity(n),
        LittleCube.from_image([(0, HALF)] + [(0, 1)] * (n - 1)),
        LittleCube.from_image([(HALF, 1)] + [(0, 1)] * (n - 1)),
        LittleCube.from_image([(q, 3 * q)] * n),
        LittleCube.from_image([(0, 3 * q)] * n),
        LittleCube.from_image([(q, 1)] * n),
        LittleCube.from_image([(Fraction(1, 8), Fraction(7, 8))] * n),
        LittleCube.from_image([(0, q)] * n),
        LittleCube.from_image([(Fraction(3, 8), Fraction(5, 8))] * n),
    ]
    rng = SplitMix64(derive_seed(CUBE_TEST_SEED, f"cubes/{n}"))
    for _ in range(extra):
        bounds = []
        for _ in range(n):
            a, b = rng.rational(), rng.rational()
            while a == b:
                b = rng.rational()
            bounds.append((min(a, b), max(a, b)))
        cubes.append(LittleCube.from_image(bounds))
    return tuple(cubes)


class CnElem(ABC):
    """A point of ``C_n(X)`` given by its arity-one map ``C_n(1) -> X``."""

    dim: int

    @abstractmethod
    def eval(self, c: LittleCube):
        ...

    def __call__(self, c):
        return self.eval(c)

    def simplified(self):
        """An equivalent term in the most explicit form the rewrite rules reach."""
        return self

    def is_trivial(self):
        s = self.simplified()
        if isinstance(s, Trivial):
            return True
        return all(is_base(s.eval(c)) for c in cube_test_set(self.dim))

    def is_base(self):
        return self.is_trivial()

    def __eq__(self, other):
        if other is BASE:
            return self.is_trivial()
        if not isinstance(other, CnElem):
            return NotImplemented
        if other.dim != self.dim:
            return False
        return maps_agree(self, other, cube_test_set(self.dim)) is None

    def __hash__(self):
        return hash(("cn", self.dim))


class Trivial(CnElem):
    """The basepoint of ``C_n(X)``."""

    def __init__(self, dim):
        self.dim = dim

    def eval(self, c):
        return BASE

    def is_trivial(self):
        return True

    def __repr__(self):
        return f"Trivial({self.dim})"


class Peaked(CnElem):
    """``alpha[t, loop]``: ``c -> loop(c^-1(t))`` when ``t`` is inside ``c``, else base."""

    def __init__(self, t, loop: LoopMap):
        self.t = tuple(t)
        self.loop = loop
        self.dim = len(self.t)
        if loop.dim != self.dim:
            raise DimensionMismatch("loop and centre dimensions differ")

    def eval(self, c):
        if not kernels.contains_open(c.scales, c.offsets, self.t):
            return BASE
        return self.loop.at(kernels.invert(c.scales, c.offsets, self.t))

    def is_trivial(self):
        return self.loop.is_constant()

    def __repr__(self):
        return f"Peaked({[str(x) for x in self.t]}, {self.loop!r})"


class Precomposed(CnElem):
    """``d -> base(c o d)``; this is how the comultiplication acts."""

    def __init__(self, base: CnElem, cube: LittleCube):
        if base.dim != cube.dim:
            raise DimensionMismatch("cube and element dimensions differ")
        self.base = base
        self.cube = cube
        self.dim = base.dim

    def eval(self, d):
        return self.base.eval(self.cube @ d)

    def simplified(self):
        inner = self.base.simplified()
        c = self.cube
        if isinstance(inner, Trivial):
            return inner
        if c.is_identity():
            return inner
        if isinstance(inner, Peaked):
            if not c.contains(inner.t, open=True):
                return Trivial(self.dim)
            return Peaked(kernels.invert(c.scales, c.offsets, inner.t), inner.loop)
        if isinstance(inner, Precomposed):
            return Precomposed(inner.base, inner.cube @ c)
        if isinstance(inner, PostMapped):
            return PostMapped(Precomposed(inner.base, c).simplified(), inner.phi)
        return Precomposed(inner, c)

    def __repr__(self):
        return f"Precomposed({self.base!r}, {self.cube!r})"


class PostMapped(CnElem):
    """``phi o base`` for a pointed map ``phi``: the functor ``C_n(phi)``."""

    def __init__(self, base: CnElem, phi: PointedMap):
        self.base = base
        self.phi = phi
        self.dim = base.dim

    def eval(self, c):
        return self.phi(self.base.eval(c))

    def simplified(self):
        inner = self.base.simplified()
        if isinstance(inner, Trivial):
            return inner
        if isinstance(inner, Peaked):
            return Peaked(inner.t, MappedLoop(inner.loop, self.phi))
        if isinstance(inner, PostMapped):
            return PostMapped(inner.base, inner.phi.then(self.phi))
        return PostMapped(inner, self.phi)

    def __repr__(self):
        return f"PostMapped({self.base!r}, {self.phi!r})"


class Threshold(CnElem):
    """Element of ``C_1([0,1])`` (pointed at 0): ``c -> max(0, width(c) - a)``.

    Two intervals wider than ``a >= 1/2`` must overlap, so property (D)
    holds; the non-base cubes are exactly those wider than ``a``.
    """

    def __init__(self, a):
        a = Fraction(a)
        if not HALF <= a < ONE:
            raise ValueError("threshold must lie in [1/2, 1)")
        self.a = a
        self.dim = 1

    def eval(self, c):
        if c.dim != 1:
            raise DimensionMismatch("threshold elements live in C_1")
        w = c.scales[0]
        if w <= self.a:
            return BASE
        return w - self.a

    def __repr__(self):
        return f"Threshold({self.a})"


class Custom(CnElem):
    """Escape hatch: any evaluable ``C_n(1) -> X``.

    ``support`` optionally pins the exact cubical support (a :class:`Rect`,
    or ``"empty"``); otherwise support queries go to the sampling oracle.
    Property (D) is the caller's responsibility and is checked by the law
    suite rather than enforced here.
    """

    def __init__(self, dim, fn: Callable, name="custom", support=None):
        self.dim = dim
        self.fn = fn
        self.name = name
        self.support = support

    def eval(self, c):
        y = self.fn(c)
        return BASE if is_base(y) else y

    def __repr__(self):
        return f"Custom({self.name})"


# -- comonad structure -----------------------------------------------------


def evaluate(f: CnElem, c: LittleCube):
    if c.dim != f.dim:
        raise DimensionMismatch(f"{c.dim} != {f.dim}")
    return f.eval(c)


def counit(f: CnElem):
    """``epsilon(f) = f(id)``."""
    return f.eval(LittleCube.identity(f.dim))


def comultiply(f: CnElem, c: Optional[LittleCube] = None):
    """``Delta(f)(c)(d) = f(c o d)``.

    With a cube, returns the element ``Delta(f)(c)`` of ``C_n(X)``; without,
    returns ``Delta(f)`` itself as an element of ``C_n(C_n(X))``.
    """
    if c is not None:
        return Precomposed(f, c)
    return Custom(f.dim, lambda cube: Precomposed(f, cube), name="Delta")


def functor_map(phi, f: CnElem) -> CnElem:
    if not isinstance(phi, PointedMap):
        phi = PointedMap(phi)
    return PostMapped(f, phi)


def expand_to_sequence(f: CnElem, theta: Configuration):
    """The arity-r component ``f_r(theta) = {f D_1 theta, ..., f D_r theta}``."""
    if theta.dim != f.dim:
        raise DimensionMismatch(f"{theta.dim} != {f.dim}")
    hit = None
    for i, c in enumerate(theta.cubes, start=1):
        y = f.eval(c)
        if is_base(y):
            continue
        if hit is not None:
            raise PropertyDViolation((theta.cubes[hit[0] - 1], c), (hit[1], y))
        hit = (i, y)
    if hit is None:
        return BASE
    return WedgePoint(theta.arity, hit[0], hit[1])


def property_d_violation(f: CnElem, pairs):
    """First pair of disjoint-interior cubes on which ``f`` is doubly non-base."""
    for c1, c2 in pairs:
        if not is_base(f.eval(c1)) and not is_base(f.eval(c2)):
            return (c1, c2)
    return None


def sequence_compatible(f: CnElem, theta: Configuration, i: int) -> bool:
    """``pi_i f_r(theta) == f_{r-1}(d_i theta)``."""
    return wedge_collapse(expand_to_sequence(f, theta), i, theta.arity) == expand_to_sequence(
        f, restrict(theta, i)
    )


def cofree_lift(phi, structure):
    """Coalgebra map ``A -> C_n(X)`` adjoint to the pointed map ``phi: A -> X``."""
    if not isinstance(phi, PointedMap):
        phi = PointedMap(phi)

    def lifted(a):
        return functor_map(phi, structure(a))

    return lifted


def cofree_unlift(psi):
    """Inverse direction of the adjunction: ``epsilon o psi``."""
    return lambda a: counit(psi(a))


# -- generic comonad over an abstract operad -------------------------------


class GenericComonadElem:
    """An element of ``C_P(X)`` for an abstract unitary operad ``P``."""

    def __init__(self, operad, f1):
        self.operad = operad
        self.f1 = f1

    def component(self, theta):
        """``f_r(theta)`` as a wedge point; raises if not in the wedge."""
        r = self.operad.arity(theta)
        values = [self.f1(self.operad.extract(theta, i)) for i in range(1, r + 1)]
        live = [(i, y) for i, y in enumerate(values, start=1) if not is_base(y)]
        if len(live) > 1:
            raise PropertyDViolation(theta, [y for _, y in live])
        if not live:
            return BASE
        return WedgePoint(r, live[0][0], live[0][1])

    def __call__(self, theta):
        return self.component(theta)


def generic_comonad_element(operad, f1, rng=None, samples=20, max_arity=3):
    """Return the element with first component ``f1`` if one exists, else ``None``.

    Existence is decided on sampled operations of arities ``2..max_arity``:
    each ``f_r(theta)`` must land in the wedge and commute with the
    restriction operators.
    """
    if rng is None:
        rng = SplitMix64(derive_seed(CUBE_TEST_SEED, f"generic/{operad.name}"))
    elem = GenericComonadElem(operad, f1)
    for r in range(2, max_arity + 1):
        for _ in range(samples):
            theta = operad.sample(r, rng)
            try:
                full = elem.component(theta)
                for i in range(1, r + 1):
                    lower = elem.component(operad.restrict(theta, i))
                    if wedge_collapse(full, i, r) != lower:
                        return None
            except PropertyDViolation:
                return None
    return elem


__all__ = [
    "CnElem", "Trivial", "Peaked", "Precomposed", "PostMapped", "Threshold",
    "Custom", "PropertyDViolation", "cube_test_set", "evaluate", "counit",
    "comultiply", "functor_map", "expand_to_sequence", "property_d_violation",
    "sequence_compatible", "cofree_lift", "cofree_unlift", "GenericComonadElem",
    "generic_comonad_element",
]
