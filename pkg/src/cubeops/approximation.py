"""Approximating ``C_n`` by ``S^n Omega^n``.

``alpha`` sends ``[t, loop]`` to the element that rescales the loop into each
cube containing ``t``; ``psi`` goes back by reading off the centre of the
cubical support and probing the element on the boundary-touching cubes
``cube_st(s, centre)``. ``homotopy_H`` deforms the identity of ``C_n(X)``
into ``alpha o psi`` by growing every cube that holds the centre until it
touches the faces, keeping the preimage of the centre fixed.

The expansion path is the endpoint-wise linear interpolation from ``c`` to
``cube_st(c^-1(p), p)``. It is exact in rational arithmetic, starts at ``c``,
ends at the canonical cube, and maps ``c^-1(p)`` to ``p`` at every time.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Optional

from . import kernels
from .comonad import (
    CnElem,
    Custom,
    Peaked,
    PostMapped,
    Precomposed,
    Threshold,
    Trivial,
    comultiply,
    counit,
)
from .geometry import HALF, ONE, ZERO, NotInImage, Rect, rect_center
from .operad import LittleCube
from .rng import SplitMix64, derive_seed
from .spaces import (
    BASE,
    Bar,
    LoopMap,
    MappedLoop,
    PointedMap,
    SuspensionPoint,
    coords_of,
    is_base,
    is_interior,
    suspension_point,
)


class UnsupportedTerm(TypeError):
    """Exact cubical support is unknown for this term; use :func:`csupp_oracle`."""


# -- alpha -------------------------------------------------------------------


def alpha(t, loop: Optional[LoopMap] = None) -> CnElem:
    """``alpha[t, loop]``; also accepts a single suspension point (or BASE)."""
    if loop is None:
        p = t
        if p is BASE:
            raise ValueError("alpha(BASE) needs a dimension; use alpha_map(n)")
        t, loop = p.t, p.x
    coords = coords_of(t)
    if coords is None:
        return Trivial(loop.dim)
    return Peaked(coords, loop)


def alpha_map(n) -> PointedMap:
    """``alpha_X`` as a pointed map ``S^n Omega^n X -> C_n(X)``."""

    def fn(p):
        return alpha(p.t, p.x)

    return PointedMap(fn, name="alpha", reflects_base=False)


# -- cubical support -------------------------------------------------------


def _threshold_support(a):
    if a >= ONE:
        return None
    return Rect.from_bounds((ONE - a,), (a,))


def _expanded_threshold_support(a, time):
    """Support of ``H(Threshold(a), time)``: ``[1/2 - v, 1/2 + v]``.

    A live cube ``[1/2 - u, 1/2 - u + w]`` grows to width
    ``(u + v)((1 - time) + time / 2u)`` with ``v = w - u``; over ``v <= u <= 1/2``
    this peaks at ``u = 1/2`` or ``u = v``, so the smallest admissible overhang is
    ``v = min(a - 1/2, (a - time) / 2(1 - time))``, floored at 0.
    """
    if time >= ONE:
        v = ZERO
    else:
        v = max(ZERO, min(a - HALF, (a - time) / (2 * (ONE - time))))
    return Rect.from_bounds((HALF - v,), (HALF + v,))


def csupp(f: CnElem) -> Optional[Rect]:
    """Exact cubical support of a symbolic term, ``None`` when empty."""
    s = f.simplified()
    if isinstance(s, Trivial):
        return None
    if isinstance(s, Peaked):
        return None if s.loop.is_constant() else Rect.point(s.t)
    if isinstance(s, Threshold):
        return _threshold_support(s.a)
    if isinstance(s, Precomposed) and isinstance(s.base, Threshold):
        # d is live iff width(c) * width(d) > a
        return _threshold_support(s.base.a / s.cube.width)
    if isinstance(s, PostMapped):
        if s.phi.reflects_base:
            return csupp(s.base)
        raise UnsupportedTerm("postcomposition may enlarge the base set; use csupp_oracle")
    if isinstance(s, Expanded) and isinstance(s.base, Threshold):
        return _expanded_threshold_support(s.base.a, s.time)
    if isinstance(s, Custom) and s.support is not None:
        return None if s.support == "empty" else s.support
    raise UnsupportedTerm(f"no exact support rule for {s!r}; use csupp_oracle")


@lru_cache(maxsize=16)
def oracle_cubes(n, budget, seed=0x0AC1E):
    """Dyadic grid cubes (as fine as half the budget allows) plus seeded random cubes."""
    m = 1
    while ((2 * m) * (2 * m + 1) // 2) ** n <= budget // 2:
        m *= 2
    ticks = [Fraction(k, m) for k in range(m + 1)]
    sides = [(a, b) for a, b in combinations_with_replacement(ticks, 2) if a < b]
    cubes = [LittleCube.from_image(bounds) for bounds in product(sides, repeat=n)]
    rng = SplitMix64(derive_seed(seed, f"oracle/{n}"))
    while len(cubes) < budget:
        bounds = []
        for _ in range(n):
            a, b = rng.rational(), rng.rational()
            while a == b:
                b = rng.rational()
            bounds.append((min(a, b), max(a, b)))
        cubes.append(LittleCube.from_image(bounds))
    return tuple(cubes), m


def csupp_oracle(f: CnElem, budget=10_000) -> Optional[Rect]:
    """Brute-force support: intersect the images of every sampled live cube.

    Works for any element, including ``Custom``. Since only finitely many
    cubes are tried, a non-empty answer contains the true support; ``None``
    only means no sampled cube was live.
    """
    cubes, _ = oracle_cubes(f.dim, budget)
    los = his = None
    for c in cubes:
        if is_base(f.eval(c)):
            continue
        if los is None:
            los, his = c.los, c.his
            continue
        out = kernels.intersect(los, his, c.los, c.his)
        if out is None:  # only possible if f breaks property (D)
            return None
        los, his = out
    if los is None:
        return None
    return Rect.from_bounds(los, his)


def center(f: CnElem):
    supp = csupp(f)
    return None if supp is None else rect_center(supp)


# -- canonical cubes and psi ---------------------------------------------------


def cube_st(s, t) -> LittleCube:
    """The boundary-touching cube sending ``s`` to the interior point ``t``."""
    s = tuple(Fraction(x) for x in s)
    t = tuple(Fraction(x) for x in t)
    if len(s) != len(t):
        raise ValueError("s and t must have the same dimension")
    if not is_interior(t):
        raise ValueError("t must be strictly inside the cube")
    if not all(ZERO <= x <= ONE for x in s):
        raise ValueError("s must lie in the closed cube")
    return LittleCube._trusted(*kernels.cube_st(s, t))


class PsiLoop(LoopMap):
    """``s -> f(cube_st(s, t))``: the loop half of ``psi(f)``."""

    def __init__(self, f: CnElem, t):
        self.f = f
        self.t = tuple(t)
        self.dim = f.dim

    def at(self, coords):
        return self.f.eval(LittleCube._trusted(*kernels.cube_st(coords, self.t)))

    def is_constant(self):
        s = self.f.simplified()
        if isinstance(s, Trivial):
            return True
        if isinstance(s, Peaked) and s.t == self.t:
            return s.loop.is_constant()
        return super().is_constant()

    def __repr__(self):
        return f"PsiLoop({self.f!r}, {[str(x) for x in self.t]})"


def psi(f: CnElem):
    """``psi(f) = [Cent(f), s -> f(cube_st(s, Cent(f)))]``, base for trivial ``f``."""
    t = center(f)
    if t is None or not is_interior(t):
        return BASE
    return suspension_point(t, PsiLoop(f, t))


# -- rectilinear expansion and the homotopy ------------------------------------


@dataclass(frozen=True)
class ExpansionPath:
    cube: LittleCube
    point: tuple
    target: LittleCube

    @property
    def fixed(self):
        """Preimage of the fixed point, ``cube^-1(point)``."""
        return self.cube.invert(self.point)

    def __call__(self, time) -> LittleCube:
        time = Fraction(time)
        if not ZERO <= time <= ONE:
            raise ValueError("time must lie in [0, 1]")
        c, d = self.cube, self.target
        return LittleCube._trusted(*kernels.interpolate(c.scales, c.offsets, d.scales, d.offsets, time))


def expansion(c: LittleCube, p) -> ExpansionPath:
    p = tuple(Fraction(x) for x in p)
    if not is_interior(p):
        raise ValueError("expansion centre must be interior")
    if not c.contains(p):
        raise NotInImage(p)
    z = kernels.invert(c.scales, c.offsets, p)
    return ExpansionPath(c, p, LittleCube._trusted(*kernels.cube_st(z, p)))


class Expanded(CnElem):
    """``H(f, time)``: ``c -> f(expansion(c, Cent f)(time))`` when ``Cent f`` is in ``c``."""

    def __init__(self, base: CnElem, time):
        time = Fraction(time)
        if not ZERO <= time <= ONE:
            raise ValueError("time must lie in [0, 1]")
        self.base = base
        self.time = time
        self.dim = base.dim
        self._center = False

    @property
    def center(self):
        if self._center is False:
            self._center = center(self.base)
        return self._center

    def eval(self, c):
        p = self.center
        if p is None:
            return self.base.eval(c)
        if not kernels.contains_closed(c.scales, c.offsets, p):
            return BASE
        z = kernels.invert(c.scales, c.offsets, p)
        ts, to = kernels.cube_st(z, p)
        moved = LittleCube._trusted(*kernels.interpolate(c.scales, c.offsets, ts, to, self.time))
        return self.base.eval(moved)

    def simplified(self):
        inner = self.base.simplified()
        if self.time == 0 or isinstance(inner, (Trivial, Peaked)):
            return inner
        return Expanded(inner, self.time)

    def __repr__(self):
        return f"Expanded({self.base!r}, {self.time})"


def homotopy_H(f: CnElem, time) -> CnElem:
    return Expanded(f, time)


# -- morphism of comonads ----------------------------------------------------


def sigma_omega_counit(p):
    """``epsilon'[t, loop] = loop(t)``."""
    if p is BASE:
        return BASE
    return p.x.at(p.t)


def sigma_omega_comultiply(p):
    """``Delta'[t, loop] = [t, s -> [s, loop]]``."""
    if p is BASE:
        return BASE
    return SuspensionPoint(p.t, Bar(p.x))


def _closed_form(t, loop, c, d):
    cd = c @ d
    if not cd.contains(t, open=True):
        return BASE
    return loop.at(kernels.invert(cd.scales, cd.offsets, t))


def check_comonad_morphism(samples):
    """Evaluate both morphism-of-comonads identities on ``(t, loop, c, d)`` samples.

    Returns ``{"counit": {...}, "comultiplication": {...}}`` with the number
    of checks and the failing inputs. The comultiplication side compares the
    two composites at ``(c, d)`` with each other and with the closed form
    ``loop(γ(c; d)^-1 t)``.
    """
    report = {
        "counit": {"checked": 0, "counterexamples": []},
        "comultiplication": {"checked": 0, "counterexamples": []},
    }
    for t, loop, c, d in samples:
        p = suspension_point(t, loop)
        a = alpha(t, loop)
        report["counit"]["checked"] += 1
        if counit(a) != sigma_omega_counit(p):
            report["counit"]["counterexamples"].append((t, loop, c, d))

        # alpha_{C(X)} o S^n Omega^n(alpha) o Delta'
        lifted = sigma_omega_comultiply(p)
        if lifted is BASE:
            lhs_c = BASE
        else:
            lhs_c = Peaked(lifted.t, MappedLoop(lifted.x, alpha_map(len(t)))).eval(c)
        lhs = BASE if lhs_c is BASE else lhs_c.eval(d)
        rhs = comultiply(a, c).eval(d)
        report["comultiplication"]["checked"] += 1
        if not (lhs == rhs == _closed_form(t, loop, c, d)):
            report["comultiplication"]["counterexamples"].append((t, loop, c, d))
    return report
