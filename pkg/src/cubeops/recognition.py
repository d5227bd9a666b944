"""Recognising iterated suspensions among C_n-coalgebras.

A comonadic C_n-coalgebra ``A`` on ``X`` has a subspace ``S(X)`` of points whose
structure element has a one-point cubical support. On ``S(X)`` the map
``psi o A`` is a coalgebra structure for ``S^n Omega^n``, and pushing it back
along ``alpha`` recovers ``A``. The retraction ``epsilon o alpha o psi o A``
fixes ``S(X)``; ``epsilon o H`` is its homotopy to the identity.
"""

from dataclasses import dataclass, field
from typing import Callable, Optional

from .approximation import (
    UnsupportedTerm,
    alpha,
    csupp,
    csupp_oracle,
    homotopy_H,
    psi,
    sigma_omega_comultiply,
    sigma_omega_counit,
)
from .coalgebra import CoalgebraStructure, SphereCoalgebra, SuspensionCoalgebra
from .comonad import Trivial, comultiply, counit, functor_map
from .operad import LittleCube
from .spaces import (
    BASE,
    CustomLoop,
    Generator,
    IdentityLoop,
    MappedLoop,
    PointedMap,
    SpherePoint,
    sphere_test_points,
    suspension_point,
)


@dataclass
class CnCoalgebra:
    """Comonadic C_n-coalgebra: ``structure(x)`` is an element of ``C_n(X)``."""

    dim: int
    structure: Callable
    name: str = "A"
    sampler: Optional[Callable] = None

    def __call__(self, x):
        if x is BASE:
            return Trivial(self.dim)
        return self.structure(x)

    def counit_residual(self, x):
        y = counit(self(x))
        return None if y == x else (x, y)

    def coassociativity_residual(self, x, d):
        """``Delta(A(x))(d)`` against ``A(A(x)(d))``."""
        lhs = comultiply(self(x), d)
        rhs = self(self(x).eval(d))
        return None if lhs == rhs else (x, d)

    @classmethod
    def from_coend(cls, structure: CoalgebraStructure, sampler=None):
        return cls(structure.dim, structure.element, name=structure.name, sampler=sampler)


@dataclass
class SigmaOmegaCoalgebra:
    """Coalgebra over ``S^n Omega^n``: ``structure(x) = [t, loop]``."""

    dim: int
    structure: Callable
    name: str = "A"
    sampler: Optional[Callable] = None

    def __call__(self, x):
        if x is BASE:
            return BASE
        return self.structure(x)

    def as_map(self):
        return PointedMap(self, name=f"gamma_{self.name}")

    def counit_residual(self, x):
        y = sigma_omega_counit(self(x))
        return None if y == x else (x, y)

    def coassociativity_residual(self, x):
        """``S^n Omega^n(gamma) o gamma`` against ``Delta' o gamma``."""
        p = self(x)
        if p is BASE:
            return None
        lhs = suspension_point(p.t, MappedLoop(p.x, self.as_map()))
        rhs = sigma_omega_comultiply(p)
        return None if lhs == rhs else (x, p)


def pushforward_structure(g: SigmaOmegaCoalgebra) -> CnCoalgebra:
    """``alpha_*``: ``x -> alpha(g(x))``."""

    def structure(x):
        p = g(x)
        return Trivial(g.dim) if p is BASE else alpha(p)

    return CnCoalgebra(g.dim, structure, name=f"alpha_*({g.name})", sampler=g.sampler)


# -- cosplit equalizers ---------------------------------------------------------


def _tally(report, key, ok, payload):
    entry = report.setdefault(key, {"checked": 0, "counterexamples": []})
    entry["checked"] += 1
    if not ok:
        entry["counterexamples"].append(payload)


def cosplit_check(A, points, elements=()):
    """Check ``hp = id``, ``sg = id`` and ``sf = ph`` pointwise.

    ``p`` is the structure map, ``f`` its image under the comonad, ``g`` the
    comultiplication, ``h`` the counit on ``X`` and ``s`` the counit one level
    up. ``elements`` are sample points of the comonad applied to ``X``.
    """
    report = {}
    if isinstance(A, SigmaOmegaCoalgebra):
        for x in points:
            _tally(report, "hp", sigma_omega_counit(A(x)) == x, x)
        for q in elements:
            _tally(report, "sg", sigma_omega_counit(sigma_omega_comultiply(q)) == q, q)
            if q is BASE:
                sf = BASE
            else:
                sf = sigma_omega_counit(suspension_point(q.t, MappedLoop(q.x, A.as_map())))
            _tally(report, "sf=ph", sf == A(sigma_omega_counit(q)), q)
        return report
    for x in points:
        _tally(report, "hp", counit(A(x)) == x, x)
    gamma = PointedMap(A, name=f"gamma_{A.name}")
    for f in elements:
        _tally(report, "sg", comultiply(f, LittleCube.identity(f.dim)) == f, f)
        _tally(report, "sf=ph", counit(functor_map(gamma, f)) == A(counit(f)), f)
    return report


# -- the subspace S(X) ----------------------------------------------------------


@dataclass(frozen=True)
class Membership:
    member: bool
    method: str = "exact"
    budget: Optional[int] = None

    def __bool__(self):
        return self.member


def in_S(x, A: CnCoalgebra, budget=10_000) -> Membership:
    """Whether ``A(x)`` has a singleton cubical support (always true at the basepoint)."""
    if x is BASE:
        return Membership(True)
    f = A(x)
    try:
        supp = csupp(f)
        method, used = "exact", None
    except UnsupportedTerm:
        supp = csupp_oracle(f, budget)
        method, used = "oracle", budget
    return Membership(supp is not None and supp.is_point, method, used)


def retraction(x, A: CnCoalgebra):
    """``epsilon o alpha o psi o A``."""
    if x is BASE:
        return BASE
    q = psi(A(x))
    if q is BASE:
        return BASE
    return counit(alpha(q))


def retraction_homotopy(x, A: CnCoalgebra, time):
    """``epsilon o H(-, time) o A``: the identity at time 0, the retraction at time 1."""
    if x is BASE:
        return BASE
    return counit(homotopy_H(A(x), time))


def induced_structure(x, A: CnCoalgebra):
    """``c'(x) = psi(A(x))`` on ``S(X)``."""
    if not in_S(x, A):
        raise ValueError(f"{x!r} is not in S(X)")
    if x is BASE:
        return BASE
    return psi(A(x))


def induced_coalgebra(A: CnCoalgebra) -> SigmaOmegaCoalgebra:
    return SigmaOmegaCoalgebra(A.dim, lambda x: induced_structure(x, A), name=f"S({A.name})", sampler=A.sampler)


def pn_membership(loop, g: SigmaOmegaCoalgebra, samples=None) -> bool:
    """Is ``loop`` in the equalizer of ``Omega^n gamma`` and ``eta``?

    Compares ``gamma(loop(s))`` with ``[s, loop]`` at every sample point.
    """
    if samples is None:
        samples = sphere_test_points(g.dim)
    for s in samples:
        lhs = g(loop(s))
        rhs = suspension_point(s, loop) if s is not BASE else BASE
        if lhs != rhs:
            return False
    return True


# -- shipped instances ---------------------------------------------------------


THREE_POINT = (BASE, 1, 2)


@dataclass
class RecognitionInstance:
    name: str
    dim: int
    coend: CoalgebraStructure
    sigma_omega: SigmaOmegaCoalgebra
    sample: Callable  # rng -> point
    fibre: tuple = field(default=())

    @property
    def cn(self) -> CnCoalgebra:
        return CnCoalgebra.from_coend(self.coend, sampler=self.sample)


def sphere_instance(n) -> RecognitionInstance:
    def gamma(x):
        return suspension_point(x.coords, IdentityLoop(n))

    def sample(rng):
        if rng.coin(1, 16):
            return BASE
        return SpherePoint(tuple(rng.rational() for _ in range(n)))

    return RecognitionInstance(
        f"S^{n}", n, SphereCoalgebra(n), SigmaOmegaCoalgebra(n, gamma, name=f"S^{n}", sampler=sample), sample
    )


def suspension_instance(n, labels=(1, 2)) -> RecognitionInstance:
    """``S^n Z`` for the finite pointed set ``Z = {base} + labels`` with ``gamma = S^n eta``."""

    def gamma(p):
        return suspension_point(p.t, Generator(n, p.x))

    def sample(rng):
        if rng.coin(1, 16):
            return BASE
        return suspension_point(tuple(rng.rational() for _ in range(n)), rng.choice(labels))

    name = f"S^{n}{{{len(labels) + 1}pt}}"
    return RecognitionInstance(
        name, n, SuspensionCoalgebra(n, name=name), SigmaOmegaCoalgebra(n, gamma, name=name, sampler=sample),
        sample, fibre=tuple(labels),
    )


def squared_loop(z, n=1):
    """``s -> [s^2, z]`` coordinatewise: a loop in ``S^n Z`` outside the equalizer."""

    def fn(s):
        return suspension_point(tuple(c * c for c in s), z)

    return CustomLoop(n, fn, constant=False, name=f"squared[{z}]")
