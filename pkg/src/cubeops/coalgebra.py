"""C_n-coalgebras in the coendomorphism sense.

A structure is a family ``delta(theta, x)`` taking an arity-r configuration and
a point to a point of the r-fold wedge. The sphere carries the collapse map
``nabla``; suspensions inherit it by smashing with the identity. The residual
helpers return ``None`` when a law holds at a sample and the offending pair of
values otherwise.
"""

from abc import ABC, abstractmethod
from typing import Callable

from .comonad import Custom, Peaked, Trivial, expand_to_sequence
from .operad import Configuration, Permutation, act, full_compose, halves, restrict
from .spaces import (
    BASE,
    Generator,
    IdentityLoop,
    SpherePoint,
    WedgePoint,
    coords_of,
    fold,
    is_base,
    suspend_map,
    suspension_point,
    wedge_collapse,
    wedge_map,
    wedge_permute,
)
from . import kernels


class CoalgebraStructure(ABC):
    """Operad map ``C_n -> CoEnd_X``, given arity by arity."""

    dim: int
    name = "coalgebra"

    @abstractmethod
    def delta(self, theta: Configuration, x):
        """``Delta_r(theta, x)``: BASE or a :class:`WedgePoint` of arity ``theta.arity``."""

    def __call__(self, theta, x):
        return self.delta(theta, x)

    def element(self, x):
        """The arity-one slice ``c -> Delta_1(c, x)`` as an element of ``C_n(X)``."""
        if is_base(x):
            return Trivial(self.dim)
        return Custom(self.dim, lambda c: fold(self.delta(Configuration(self.dim, (c,), validate=False), x)),
                      name=f"{self.name}@{x!r}")


def nabla_sphere(theta: Configuration, t):
    """Collapse the outside of the open cubes: ``t -> Slot(i, c_i^-1 t)``."""
    coords = coords_of(t)
    if coords is None:
        return BASE
    for i, c in enumerate(theta.cubes, start=1):
        if kernels.contains_open(c.scales, c.offsets, coords):
            return WedgePoint(theta.arity, i, SpherePoint(kernels.invert(c.scales, c.offsets, coords)))
    return BASE


def smash_distribute(w, x):
    """``(S^n v ... v S^n) ^ Y -> (S^n ^ Y) v ... v (S^n ^ Y)``."""
    if w is BASE or is_base(x):
        return BASE
    return WedgePoint(w.arity, w.slot, suspension_point(w.x, x))


def nabla_suspension(theta: Configuration, p):
    """``[t, x] -> Slot(i, [c_i^-1 t, x])`` for the cube ``c_i`` holding ``t`` in its interior.

    This is ``distribute o (nabla ^ id)``; :func:`factorization_residual`
    checks it against that composite.
    """
    if p is BASE:
        return BASE
    for i, c in enumerate(theta.cubes, start=1):
        if kernels.contains_open(c.scales, c.offsets, p.t):
            return WedgePoint(theta.arity, i, suspension_point(kernels.invert(c.scales, c.offsets, p.t), p.x))
    return BASE


def pinch(p):
    """The arity-two face of ``nabla`` at the halves configuration."""
    if p is BASE:
        return BASE
    return nabla_suspension(halves(len(p.t)), p)


class SphereCoalgebra(CoalgebraStructure):
    def __init__(self, n):
        self.dim = n
        self.name = f"S^{n}"

    def delta(self, theta, x):
        return nabla_sphere(theta, x)

    def element(self, x):
        coords = coords_of(x)
        if coords is None:
            return Trivial(self.dim)
        return Peaked(coords, IdentityLoop(self.dim))


class SuspensionCoalgebra(CoalgebraStructure):
    def __init__(self, n, name="S^n Y"):
        self.dim = n
        self.name = name

    def delta(self, theta, x):
        return nabla_suspension(theta, x)

    def element(self, x):
        if x is BASE:
            return Trivial(self.dim)
        return Peaked(x.t, Generator(self.dim, x.x))


class ComonadicStructure(CoalgebraStructure):
    """Coendomorphism structure read off a comonadic one, ``x -> C_n(X)``."""

    def __init__(self, dim, structure: Callable, name="comonadic"):
        self.dim = dim
        self.structure = structure
        self.name = name

    def delta(self, theta, x):
        if is_base(x):
            return BASE
        return expand_to_sequence(self.structure(x), theta)

    def element(self, x):
        return Trivial(self.dim) if is_base(x) else self.structure(x)


def coend_to_comonadic(structure: CoalgebraStructure, x):
    return structure.element(x)


def coend_slice(structure: CoalgebraStructure, x):
    """Same as :func:`coend_to_comonadic` but always through ``Delta_1``, never symbolic."""
    return CoalgebraStructure.element(structure, x)


def comonadic_to_coend(structure: Callable, dim) -> ComonadicStructure:
    return ComonadicStructure(dim, structure)


# -- law residuals -------------------------------------------------------------


def operad_morphism_residual(structure: CoalgebraStructure, theta, ds, x):
    """``Delta(gamma(theta; ds), x)`` against ``(v_i Delta(d_i)) o Delta(theta)`` flattened."""
    lhs = structure.delta(full_compose(theta, ds), x)
    outer = structure.delta(theta, x)
    if outer is BASE:
        rhs = BASE
    else:
        inner = structure.delta(ds[outer.slot - 1], outer.x)
        if inner is BASE:
            rhs = BASE
        else:
            shift = sum(d.arity for d in ds[: outer.slot - 1])
            rhs = WedgePoint(sum(d.arity for d in ds), shift + inner.slot, inner.x)
    return None if lhs == rhs else (lhs, rhs)


def equivariance_residual(structure: CoalgebraStructure, theta, sigma: Permutation, x):
    lhs = structure.delta(act(theta, sigma), x)
    rhs = wedge_permute(sigma, structure.delta(theta, x))
    return None if lhs == rhs else (lhs, rhs)


def restriction_residual(structure: CoalgebraStructure, theta, i, x):
    """Counital compatibility ``pi_i Delta_r(theta) = Delta_{r-1}(d_i theta)``."""
    lhs = wedge_collapse(structure.delta(theta, x), i, theta.arity)
    rhs = structure.delta(restrict(theta, i), x)
    return None if lhs == rhs else (lhs, rhs)


def naturality_residual(phi, theta, p):
    """``nabla`` commutes with ``S^n phi``."""
    sphi = suspend_map(phi)
    lhs = nabla_suspension(theta, sphi(p))
    rhs = wedge_map([sphi] * theta.arity, nabla_suspension(theta, p))
    return None if lhs == rhs else (lhs, rhs)


def factorization_residual(theta, p):
    """``nabla_suspension`` against the literal composite ``distribute o (nabla ^ id)``."""
    if p is BASE:
        return None
    lhs = nabla_suspension(theta, p)
    rhs = smash_distribute(nabla_sphere(theta, SpherePoint(p.t)), p.x)
    return None if lhs == rhs else (lhs, rhs)
