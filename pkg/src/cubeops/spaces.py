"""Pointed spaces: spheres, suspensions, wedges and loops.

Every pointed space shares one basepoint, the sentinel :data:`BASE`. Non-base
points are ordinary values (sphere coordinates, suspension pairs, wedge slots,
integers for finite pointed sets, positive fractions for ``[0,1]`` pointed at
0). Constructors normalise anything that *is* the basepoint to :data:`BASE`,
so a stored pair ``[t, x]`` never hides a base ``x`` and a stored ``t`` is
always strictly inside the cube.

Loops and comonad elements are black-box maps; whether one of them is the
basepoint (the constant map) is decided by :func:`is_base`, and equality is
the sampled pointwise comparison of :func:`maps_agree`.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Any, Callable, Optional, Tuple

from .geometry import ONE, ZERO, as_point
from .rng import SplitMix64, derive_seed

TEST_SEED = 0x5EED
TEST_EXTRA_POINTS = 4
GRID = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))


class _Base:
    """The basepoint of every pointed space."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return is_base(other)

    def __hash__(self):
        return 0

    def __repr__(self):
        return "BASE"

    def __reduce__(self):
        return (_Base, ())


BASE = _Base()


def is_base(x) -> bool:
    if x is BASE:
        return True
    check = getattr(x, "is_base", None)
    if check is not None:
        return check()
    return False


# -- sphere ------------------------------------------------------------------


@dataclass(frozen=True)
class SpherePoint:
    """Interior point of ``I^n`` standing for a non-base point of ``S^n = I^n / dI^n``."""

    coords: Tuple[Fraction, ...]

    @property
    def dim(self):
        return len(self.coords)

    def is_base(self):
        return False


def is_interior(coords) -> bool:
    return all(ZERO < c < ONE for c in coords)


def sphere_point(coords):
    """Normalising constructor: boundary coordinates give :data:`BASE`."""
    if coords is BASE or coords is None:
        return BASE
    if isinstance(coords, SpherePoint):
        return coords
    coords = as_point(coords)
    if not is_interior(coords):
        return BASE
    return SpherePoint(coords)


def coords_of(s):
    """Interior coordinates of a sphere point, or ``None`` for the basepoint."""
    if s is BASE:
        return None
    if isinstance(s, SpherePoint):
        return s.coords
    coords = as_point(s)
    return coords if is_interior(coords) else None


# -- suspension and wedge ----------------------------------------------------


@dataclass(frozen=True)
class SuspensionPoint:
    """Non-base point ``[t, x]`` of ``S^n ^ X``."""

    t: Tuple[Fraction, ...]
    x: Any

    @property
    def dim(self):
        return len(self.t)

    def is_base(self):
        return False


def suspension_point(t, x):
    coords = coords_of(t)
    if coords is None or is_base(x):
        return BASE
    return SuspensionPoint(coords, x)


@dataclass(frozen=True)
class WedgePoint:
    """Non-base point of ``X v ... v X`` (``arity`` copies) sitting in copy ``slot``."""

    arity: int
    slot: int
    x: Any

    def is_base(self):
        return False


def _check_slot(i, r):
    if not 1 <= i <= r:
        raise IndexError(f"wedge index {i} out of range 1..{r}")


def wedge_include(x, i, r):
    _check_slot(i, r)
    if is_base(x):
        return BASE
    return WedgePoint(r, i, x)


def wedge_collapse(w, i, arity=None):
    """``pi_i``: send copy ``i`` to the basepoint and close the gap."""
    if w is BASE:
        if arity is not None:
            _check_slot(i, arity)
        return BASE
    _check_slot(i, w.arity)
    if w.slot == i:
        return BASE
    j = w.slot if w.slot < i else w.slot - 1
    return WedgePoint(w.arity - 1, j, w.x)


def wedge_project(w, i, arity=None):
    """``q_i``: the component in copy ``i`` (base elsewhere)."""
    if w is BASE:
        if arity is not None:
            _check_slot(i, arity)
        return BASE
    _check_slot(i, w.arity)
    return w.x if w.slot == i else BASE


def fold(w):
    """``mu_r``: forget which copy a point lives in."""
    return BASE if w is BASE else w.x


def wedge_map(maps, w):
    """``f_1 v ... v f_r`` applied to a wedge point."""
    if w is BASE:
        return BASE
    if len(maps) != w.arity:
        raise ValueError("need one map per wedge summand")
    return wedge_include(maps[w.slot - 1](w.x), w.slot, w.arity)


def wedge_permute(sigma, w):
    """Move copy ``j`` to copy ``sigma(j)``; matches the action on configurations."""
    if w is BASE:
        return BASE
    return WedgePoint(w.arity, sigma(w.slot), w.x)


def distribute(p):
    """``S^n ^ (X_1 v ... v X_r) -> (S^n ^ X_1) v ... v (S^n ^ X_r)``."""
    if p is BASE:
        return BASE
    w = p.x
    return WedgePoint(w.arity, w.slot, SuspensionPoint(p.t, w.x))


def undistribute(w):
    if w is BASE:
        return BASE
    p = w.x
    return SuspensionPoint(p.t, WedgePoint(w.arity, w.slot, p.x))


# -- pointed maps ------------------------------------------------------------


class PointedMap:
    """A named pointed map ``X -> Y``.

    ``reflects_base`` declares that only the basepoint goes to the basepoint;
    cubical-support computations use it to see through postcomposition.
    """

    def __init__(self, fn: Callable, name="map", reflects_base=False):
        self.fn = fn
        self.name = name
        self.reflects_base = reflects_base

    def __call__(self, x):
        if x is BASE:
            return BASE
        y = self.fn(x)
        return BASE if is_base(y) else y

    def then(self, other):
        """``other o self``."""
        return PointedMap(
            lambda x: other(self(x)),
            name=f"{other.name}.{self.name}",
            reflects_base=self.reflects_base and other.reflects_base,
        )

    def __repr__(self):
        return f"PointedMap({self.name})"


IDENTITY = PointedMap(lambda x: x, name="id", reflects_base=True)
TO_BASE = PointedMap(lambda x: BASE, name="to_base")


def suspend_map(phi):
    """``S^n phi``: ``[t, x] -> [t, phi(x)]``."""

    def sigma_phi(p):
        if p is BASE:
            return BASE
        return suspension_point(p.t, phi(p.x))

    return PointedMap(sigma_phi, name=f"S({getattr(phi, 'name', 'map')})",
                      reflects_base=getattr(phi, "reflects_base", False))


# -- sample sets -------------------------------------------------------------


@lru_cache(maxsize=None)
def sphere_test_points(n, extra=TEST_EXTRA_POINTS):
    """Base, the grid ``{1/4,1/2,3/4}^n`` and ``extra`` seeded interior points."""
    pts = [BASE]
    pts.extend(SpherePoint(c) for c in product(GRID, repeat=n))
    rng = SplitMix64(derive_seed(TEST_SEED, f"sphere/{n}"))
    for _ in range(extra):
        pts.append(SpherePoint(tuple(rng.rational() for _ in range(n))))
    return tuple(pts)


def maps_agree(f, g, points):
    """Exact pointwise comparison on a finite sample; ``None`` or the first witness."""
    for p in points:
        if f(p) != g(p):
            return p
    return None


# -- loops -------------------------------------------------------------------


class LoopMap(ABC):
    """A pointed map ``S^n -> X``: a point of the loop space ``Omega^n X``."""

    dim: int

    @abstractmethod
    def at(self, coords):
        """Value at interior coordinates."""

    def __call__(self, s):
        coords = coords_of(s)
        if coords is None:
            return BASE
        return self.at(coords)

    def is_constant(self) -> bool:
        return all(is_base(self(s)) for s in sphere_test_points(self.dim))

    def is_base(self):
        return self.is_constant()

    def __eq__(self, other):
        if other is BASE:
            return self.is_constant()
        if not isinstance(other, LoopMap):
            return NotImplemented
        if other.dim != self.dim:
            return False
        return maps_agree(self, other, sphere_test_points(self.dim)) is None

    def __hash__(self):
        return hash(("loop", self.dim))


class ConstantLoop(LoopMap):
    def __init__(self, dim):
        self.dim = dim

    def at(self, coords):
        return BASE

    def is_constant(self):
        return True

    def __repr__(self):
        return f"ConstantLoop({self.dim})"


class Generator(LoopMap):
    """``s -> [s, x]`` in ``S^n ^ X``: the adjunction unit ``eta(x)``."""

    def __init__(self, dim, x):
        self.dim = dim
        self.x = x

    def at(self, coords):
        return suspension_point(coords, self.x)

    def is_constant(self):
        return is_base(self.x)

    def __repr__(self):
        return f"Generator({self.dim}, {self.x!r})"


class Bar(Generator):
    """``s -> [s, loop]`` in ``S^n Omega^n X``; the loop attached by the comultiplication."""

    def __init__(self, loop):
        super().__init__(loop.dim, loop)

    @property
    def loop(self):
        return self.x

    def __repr__(self):
        return f"Bar({self.x!r})"


class IdentityLoop(LoopMap):
    """``s -> s``: the fundamental class of ``S^n``."""

    def __init__(self, dim):
        self.dim = dim

    def at(self, coords):
        return SpherePoint(coords)

    def is_constant(self):
        return False

    def __repr__(self):
        return f"IdentityLoop({self.dim})"


class MappedLoop(LoopMap):
    """``phi o loop``."""

    def __init__(self, loop, phi):
        self.dim = loop.dim
        self.loop = loop
        self.phi = phi

    def at(self, coords):
        return self.phi(self.loop.at(coords))

    def is_constant(self):
        if self.loop.is_constant():
            return True
        if getattr(self.phi, "reflects_base", False):
            return False
        if isinstance(self.loop, StepLoop):
            return all(is_base(self.phi(v)) for v in self.loop.live_values())
        return super().is_constant()

    def __repr__(self):
        return f"MappedLoop({self.loop!r}, {self.phi!r})"


class StepLoop(LoopMap):
    """Piecewise-constant loop: value of the first box whose interior holds ``s``.

    Boxes are closed :class:`~cubeops.geometry.Rect` instances; only their
    interiors count, so the loop is base on every box boundary and is
    therefore a genuine pointed map on the quotient sphere.
    """

    def __init__(self, dim, pieces):
        self.dim = dim
        self.pieces = tuple((box, value) for box, value in pieces if not is_base(value))

    def at(self, coords):
        for box, value in self.pieces:
            if box.contains(coords, open=True):
                return value
        return BASE

    def live_values(self):
        """Values on pieces with nonempty interior."""
        return [v for box, v in self.pieces if not is_base(v) and not any(iv.degenerate for iv in box.intervals)]

    def is_constant(self):
        return not self.live_values()

    def __repr__(self):
        return f"StepLoop({self.dim}, {len(self.pieces)} pieces)"


class CustomLoop(LoopMap):
    """Arbitrary evaluable loop.

    ``fn`` receives interior coordinates. ``constant`` may assert whether the
    loop is the constant map; left as ``None`` it is decided on the standard
    test points.
    """

    def __init__(self, dim, fn, constant: Optional[bool] = None, name="custom"):
        self.dim = dim
        self.fn = fn
        self.constant = constant
        self.name = name

    def at(self, coords):
        y = self.fn(coords)
        return BASE if is_base(y) else y

    def is_constant(self):
        if self.constant is not None:
            return self.constant
        return super().is_constant()

    def __repr__(self):
        return f"CustomLoop({self.name})"


def adjunction_unit(x, n):
    """``eta_Z(x) = (s -> [s, x])`` in ``Omega^n S^n Z``."""
    if is_base(x):
        return ConstantLoop(n)
    return Generator(n, x)


def equalizer_member(loop, f, g, samples=None):
    """Whether ``f(loop(s)) == g(loop(s))`` at every sample ``s`` (Base and grid included)."""
    if samples is None:
        samples = sphere_test_points(loop.dim)
    for s in samples:
        x = loop(s)
        if f(x) != g(x):
            return False
    return True


# -- JSON --------------------------------------------------------------------


def point_to_json(p):
    """Sphere/suspension/wedge/finite-set/rational points as JSON-ready data."""
    from .geometry import format_rational

    if p is BASE:
        return {"base": True}
    if isinstance(p, SpherePoint):
        return {"coords": [format_rational(c) for c in p.coords]}
    if isinstance(p, SuspensionPoint):
        return {"t": [format_rational(c) for c in p.t], "x": point_to_json(p.x)}
    if isinstance(p, WedgePoint):
        return {"arity": p.arity, "slot": p.slot, "x": point_to_json(p.x)}
    if isinstance(p, Fraction):
        return {"q": format_rational(p)}
    if isinstance(p, int):
        return {"label": p}
    raise TypeError(f"no JSON form for {p!r}")


def point_from_json(data):
    from .geometry import parse_rational

    if data.get("base"):
        return BASE
    if "coords" in data:
        return sphere_point(data["coords"])
    if "t" in data:
        return suspension_point(data["t"], point_from_json(data["x"]))
    if "slot" in data:
        return wedge_include(point_from_json(data["x"]), int(data["slot"]), int(data["arity"]))
    if "q" in data:
        q = parse_rational(data["q"])
        return BASE if q == 0 else q
    if "label" in data:
        k = int(data["label"])
        return BASE if k == 0 else k
    raise ValueError(f"unrecognised point JSON {data!r}")


__all__ = [
    "BASE", "is_base", "SpherePoint", "sphere_point", "coords_of", "is_interior",
    "SuspensionPoint", "suspension_point", "WedgePoint", "wedge_include",
    "wedge_collapse", "wedge_project", "fold", "wedge_map", "wedge_permute",
    "distribute", "undistribute", "PointedMap", "IDENTITY", "TO_BASE",
    "suspend_map", "sphere_test_points", "maps_agree", "LoopMap", "ConstantLoop",
    "Generator", "Bar", "IdentityLoop", "MappedLoop", "StepLoop", "CustomLoop",
    "adjunction_unit", "equalizer_member", "point_to_json", "point_from_json",
]
