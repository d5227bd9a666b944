"""Convolution of pointed maps and May's little-cubes action on loop spaces.

Every pointed space is an algebra over the fold operad: ``mu_r`` forgets the
wedge summand. Given a coalgebra structure on ``X`` and maps ``f_1..f_r: X -> Y``,
a configuration ``theta`` convolves them into ``mu_r o (f_1 v ... v f_r) o Delta(theta)``.
With ``X = S^n`` this is the classical action of ``C_n`` on ``Omega^n Y``.
"""

from dataclasses import dataclass

from .coalgebra import CoalgebraStructure, SphereCoalgebra, nabla_sphere
from .operad import Configuration
from .spaces import BASE, LoopMap, PointedMap, SpherePoint, fold, wedge_include, wedge_map


@dataclass(frozen=True)
class FoldAlgebra:
    """The fold maps ``mu_r: X v ... v X -> X``."""

    def __call__(self, w):
        return fold(w)

    def unit_residual(self, x, i, r):
        y = self(wedge_include(x, i, r))
        return None if y == x else (x, y)


FOLD = FoldAlgebra()


def convolution(theta: Configuration, structure: CoalgebraStructure, maps, mu=FOLD) -> PointedMap:
    if len(maps) != theta.arity:
        raise ValueError(f"need {theta.arity} maps, got {len(maps)}")
    if theta.dim != structure.dim:
        raise ValueError("configuration and coalgebra dimensions differ")
    maps = tuple(maps)

    def fn(x):
        return mu(wedge_map(maps, structure.delta(theta, x)))

    return PointedMap(fn, name="convolution")


class MayLoop(LoopMap):
    """``s -> mu_r((l_1 v ... v l_r)(nabla(theta, s)))``."""

    def __init__(self, theta: Configuration, loops):
        loops = tuple(loops)
        if len(loops) != theta.arity:
            raise ValueError(f"need {theta.arity} loops, got {len(loops)}")
        for loop in loops:
            if loop.dim != theta.dim:
                raise ValueError("loop and configuration dimensions differ")
        self.dim = theta.dim
        self.theta = theta
        self.loops = loops

    def at(self, coords):
        w = nabla_sphere(self.theta, SpherePoint(tuple(coords)))
        if w is BASE:
            return BASE
        return self.loops[w.slot - 1](w.x)

    def is_constant(self):
        if all(loop.is_constant() for loop in self.loops):
            return True
        return super().is_constant()

    def __repr__(self):
        return f"MayLoop({self.theta!r}, {list(self.loops)!r})"


def may_action(theta: Configuration, loops) -> LoopMap:
    return MayLoop(theta, loops)


def may_via_convolution(theta: Configuration, loops) -> PointedMap:
    """The same action spelled as a convolution on the sphere coalgebra."""
    return convolution(theta, SphereCoalgebra(theta.dim), loops)
