"""The little n-cubes operad with exact rational coefficients.

A :class:`LittleCube` is a rectilinear embedding of ``[0,1]^n`` into itself,
stored as per-coordinate scales and offsets. A :class:`Configuration` is an
ordered tuple of little cubes with pairwise disjoint open images, i.e. an
element of ``C_n(r)``; the empty configuration is the unique arity-0 element.

Indices in the public API are 1-based, as in the usual operad notation.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from . import kernels
from .geometry import (
    ONE,
    ZERO,
    AffineComponent,
    DimensionMismatch,
    NotInImage,
    Rect,
    as_point,
    format_rational,
    parse_rational,
)


class OperadError(ValueError):
    pass


class NotDisjoint(OperadError):
    def __init__(self, i, j):
        super().__init__(f"cubes {i} and {j} have overlapping interiors")
        self.pair = (i, j)


def _check_index(i, r):
    if not 1 <= i <= r:
        raise IndexError(f"index {i} out of range 1..{r}")


@dataclass(frozen=True)
class LittleCube:
    scales: Tuple[Fraction, ...]
    offsets: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.scales) != len(self.offsets) or not self.scales:
            raise OperadError("cube needs matching, non-empty coefficient tuples")
        for s, o in zip(self.scales, self.offsets):
            if s <= 0 or o < 0 or o + s > 1:
                raise OperadError(f"not a little cube: scale {s}, offset {o}")

    @classmethod
    def _trusted(cls, scales, offsets):
        # kernel outputs are valid by construction
        obj = object.__new__(cls)
        object.__setattr__(obj, "scales", scales)
        object.__setattr__(obj, "offsets", offsets)
        return obj

    @classmethod
    def identity(cls, n):
        if n < 1:
            raise OperadError("dimension must be positive")
        return cls._trusted((ONE,) * n, (ZERO,) * n)

    @classmethod
    def from_image(cls, bounds):
        """Build from ``[(lo, hi), ...]`` or a :class:`Rect`."""
        if isinstance(bounds, Rect):
            bounds = [(iv.lo, iv.hi) for iv in bounds.intervals]
        los = tuple(parse_rational(lo) for lo, _ in bounds)
        his = tuple(parse_rational(hi) for _, hi in bounds)
        return cls(tuple(h - l for l, h in zip(los, his)), los)

    @property
    def dim(self):
        return len(self.scales)

    @property
    def components(self):
        return tuple(AffineComponent(s, o) for s, o in zip(self.scales, self.offsets))

    @property
    def los(self):
        return self.offsets

    @property
    def his(self):
        return tuple(o + s for s, o in zip(self.scales, self.offsets))

    @property
    def image(self) -> Rect:
        return Rect.from_bounds(self.los, self.his)

    @property
    def width(self):
        """Side length; only meaningful for ``n = 1``."""
        return self.scales[0]

    def is_identity(self):
        return all(s == 1 for s in self.scales)

    def __call__(self, x):
        return kernels.apply(self.scales, self.offsets, as_point(x))

    def invert(self, y):
        """Preimage of ``y``; raises :class:`NotInImage` outside the closed image."""
        y = as_point(y)
        if not kernels.contains_closed(self.scales, self.offsets, y):
            raise NotInImage(y)
        return kernels.invert(self.scales, self.offsets, y)

    def contains(self, y, open=False):
        if open:
            return kernels.contains_open(self.scales, self.offsets, y)
        return kernels.contains_closed(self.scales, self.offsets, y)

    def __matmul__(self, other):
        """``self @ other`` is the composite ``x -> self(other(x))``."""
        if self.dim != other.dim:
            raise DimensionMismatch(f"{self.dim} != {other.dim}")
        return LittleCube._trusted(*kernels.compose(self.scales, self.offsets, other.scales, other.offsets))

    def interiors_overlap(self, other):
        return kernels.interiors_overlap(self.scales, self.offsets, other.scales, other.offsets)

    def __repr__(self):
        return f"LittleCube({self.image})"


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``{1..r}``; ``images[k-1]`` is the image of ``k``.

    Products are diagrammatic: ``(s * t)(k) = t(s(k))``, which makes
    ``act(act(c, s), t) == act(c, s * t)``.
    """

    images: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise OperadError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, r):
        return cls(tuple(range(1, r + 1)))

    @classmethod
    def transposition(cls, r, i, j):
        img = list(range(1, r + 1))
        img[i - 1], img[j - 1] = j, i
        return cls(tuple(img))

    @property
    def size(self):
        return len(self.images)

    def __call__(self, k):
        return self.images[k - 1]

    def inverse(self):
        inv = [0] * self.size
        for k, v in enumerate(self.images, start=1):
            inv[v - 1] = k
        return Permutation(tuple(inv))

    def __mul__(self, other):
        if self.size != other.size:
            raise OperadError("permutation sizes differ")
        return Permutation(tuple(other(self(k)) for k in range(1, self.size + 1)))

    def permute(self, items):
        """Reorder so that position ``k`` holds ``items[s^-1(k)]``."""
        inv = self.inverse()
        return tuple(items[inv(k) - 1] for k in range(1, self.size + 1))


def block_sum(perms: Sequence[Permutation]) -> Permutation:
    """``t_1 (+) ... (+) t_r`` acting on consecutive blocks."""
    images = []
    shift = 0
    for p in perms:
        images.extend(shift + v for v in p.images)
        shift += p.size
    return Permutation(tuple(images))


def block_permutation(sigma: Permutation, sizes: Sequence[int]) -> Permutation:
    """Permute whole blocks of the given sizes the way ``sigma`` permutes points.

    ``sizes`` are the block sizes in the *source* order.
    """
    starts = []
    acc = 0
    for s in sizes:
        starts.append(acc)
        acc += s
    # new block order: position k holds old block sigma^-1(k)
    inv = sigma.inverse()
    new_start = {}
    acc = 0
    for k in range(1, sigma.size + 1):
        old = inv(k)
        new_start[old] = acc
        acc += sizes[old - 1]
    images = []
    for b, size in enumerate(sizes, start=1):
        images.extend(new_start[b] + j + 1 for j in range(size))
    return Permutation(tuple(images))


class Configuration:
    """An element of ``C_n(r)``: r little n-cubes with disjoint open images."""

    __slots__ = ("dim", "cubes")

    def __init__(self, dim, cubes=(), validate=True):
        cubes = tuple(cubes)
        for c in cubes:
            if c.dim != dim:
                raise DimensionMismatch(f"cube of dim {c.dim} in C_{dim}")
        self.dim = dim
        self.cubes = cubes
        if validate:
            self.validate()

    @classmethod
    def of(cls, *cubes):
        return cls(cubes[0].dim, cubes)

    @classmethod
    def from_images(cls, dim, images):
        return cls(dim, [LittleCube.from_image(b) for b in images])

    @property
    def arity(self):
        return len(self.cubes)

    def disjointness_violation(self):
        cubes = self.cubes
        for i in range(len(cubes)):
            for j in range(i + 1, len(cubes)):
                if cubes[i].interiors_overlap(cubes[j]):
                    return (i + 1, j + 1)
        return None

    def validate(self):
        bad = self.disjointness_violation()
        if bad is not None:
            raise NotDisjoint(*bad)

    def __len__(self):
        return len(self.cubes)

    def __iter__(self):
        return iter(self.cubes)

    def __getitem__(self, k):
        return self.cubes[k]

    def __eq__(self, other):
        return isinstance(other, Configuration) and self.dim == other.dim and self.cubes == other.cubes

    def __hash__(self):
        return hash((self.dim, self.cubes))

    def __repr__(self):
        return f"Configuration(dim={self.dim}, {list(self.cubes)})"


def operad_unit(n) -> LittleCube:
    return LittleCube.identity(n)


def unit_configuration(n) -> Configuration:
    return Configuration(n, (LittleCube.identity(n),), validate=False)


def halves(n) -> Configuration:
    """The pinch configuration: split the first coordinate at 1/2."""
    half = Fraction(1, 2)
    left = LittleCube._trusted((half,) + (ONE,) * (n - 1), (ZERO,) * n)
    right = LittleCube._trusted((half,) + (ONE,) * (n - 1), (half,) + (ZERO,) * (n - 1))
    return Configuration(n, (left, right), validate=False)


def _same_dim(a, b):
    if a.dim != b.dim:
        raise DimensionMismatch(f"{a.dim} != {b.dim}")


def partial_compose(c: Configuration, i: int, d: Configuration) -> Configuration:
    """Replace cube ``i`` of ``c`` by the composites ``c_i o d_k``."""
    _same_dim(c, d)
    _check_index(i, c.arity)
    ci = c.cubes[i - 1]
    inserted = tuple(ci @ dk for dk in d.cubes)
    return Configuration(c.dim, c.cubes[: i - 1] + inserted + c.cubes[i:], validate=False)


def full_compose(c: Configuration, ds: Sequence[Configuration]) -> Configuration:
    if len(ds) != c.arity:
        raise OperadError(f"need {c.arity} inputs, got {len(ds)}")
    cubes = []
    for ci, d in zip(c.cubes, ds):
        _same_dim(c, d)
        cubes.extend(ci @ dk for dk in d.cubes)
    return Configuration(c.dim, cubes, validate=False)


def act(c: Configuration, sigma: Permutation) -> Configuration:
    """Right action: ``(c_1..c_r) . s = (c_{s^-1(1)}, ..., c_{s^-1(r)})``."""
    if sigma.size != c.arity:
        raise OperadError("permutation size does not match arity")
    return Configuration(c.dim, sigma.permute(c.cubes), validate=False)


def restrict(c: Configuration, i: int) -> Configuration:
    """The operator ``d_i``: compose with the arity-0 element at slot ``i``."""
    _check_index(i, c.arity)
    return Configuration(c.dim, c.cubes[: i - 1] + c.cubes[i:], validate=False)


def extract(c: Configuration, i: int) -> LittleCube:
    """``D_i = d_1 ... (d_i omitted) ... d_r``: the i-th cube alone."""
    _check_index(i, c.arity)
    return c.cubes[i - 1]


# -- abstract operads -------------------------------------------------------


class AbstractOperad(ABC):
    """What the generic comonad needs from a unitary operad."""

    name = "operad"

    @abstractmethod
    def unit(self):
        ...

    @abstractmethod
    def restrict(self, theta, i):
        ...

    def extract(self, theta, i):
        r = self.arity(theta)
        _check_index(i, r)
        for k in range(r, 0, -1):
            if k != i:
                theta = self.restrict(theta, k)
        return theta

    @abstractmethod
    def arity(self, theta):
        ...

    @abstractmethod
    def sample(self, r, rng):
        """A deterministic pseudorandom element of arity ``r``."""

    @property
    def reduced(self):
        return False


class LittleCubesOperad(AbstractOperad):
    def __init__(self, n):
        self.n = n
        self.name = f"C_{n}"

    def unit(self):
        return unit_configuration(self.n)

    def restrict(self, theta, i):
        return restrict(theta, i)

    def arity(self, theta):
        return theta.arity

    def sample(self, r, rng):
        from .generators import random_configuration

        return random_configuration(rng, self.n, r)


@dataclass(frozen=True)
class _Point:
    arity: int


class OnePointOperad(AbstractOperad):
    """``P(r) = {*}`` in every arity: unitary and reduced (e.g. Ass, Com shapes)."""

    name = "OnePoint"

    def unit(self):
        return _Point(1)

    def restrict(self, theta, i):
        _check_index(i, theta.arity)
        return _Point(theta.arity - 1)

    def arity(self, theta):
        return theta.arity

    def sample(self, r, rng):
        return _Point(r)

    @property
    def reduced(self):
        return True


# -- JSON --------------------------------------------------------------------


def cube_to_json(c: LittleCube):
    return [[format_rational(lo), format_rational(hi)] for lo, hi in zip(c.los, c.his)]


def cube_from_json(data) -> LittleCube:
    return LittleCube.from_image(data)


def config_to_json(c: Configuration):
    return {"dim": c.dim, "cubes": [cube_to_json(q) for q in c.cubes]}


def config_from_json(data) -> Configuration:
    dim = int(data["dim"])
    return Configuration(dim, [cube_from_json(q) for q in data["cubes"]])
