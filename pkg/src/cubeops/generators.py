"""Deterministic sample streams.

Every stream starts with a fixed catalogue of corner cases (identity cube,
boundary-touching cubes, shared-face pairs, equator points) and continues with
seeded pseudorandom values whose rationals have denominators dividing ``2**bits``.
"""

from fractions import Fraction
from itertools import chain, islice, permutations, product

from .codec import KILL2, SWAP12, fixture
from .comonad import Peaked, PostMapped, Precomposed, Threshold, Trivial
from .approximation import Expanded
from .geometry import HALF, ONE, ZERO, Rect, format_rational
from .operad import Configuration, LittleCube, Permutation, halves
from .rng import DEFAULT_DENOM_BITS, SplitMix64, derive_seed
from .spaces import (
    BASE,
    ConstantLoop,
    Generator,
    IdentityLoop,
    SpherePoint,
    StepLoop,
    suspension_point,
)

LABELS = (1, 2, 3)
Q = Fraction(1, 4)


class Sampler:
    """Seeded source of cubes, configurations, points, loops and elements in dimension ``n``."""

    def __init__(self, n, seed, bits=DEFAULT_DENOM_BITS):
        self.n = n
        self.bits = bits
        self.rng = SplitMix64(seed)

    # scalars

    def rational(self):
        return self.rng.rational(self.bits)

    def between(self, lo, hi, closed=False):
        return self.rng.rational_between(lo, hi, self.bits, closed)

    def time(self):
        r = self.rng.below(8)
        if r == 0:
            return ZERO
        if r == 1:
            return ONE
        return self.rational()

    def threshold(self):
        return self.between(HALF, ONE, closed=False) if self.rng.coin(3, 4) else HALF

    # geometry

    def interior_point(self):
        return tuple(self.rational() for _ in range(self.n))

    def sphere_point(self):
        if self.rng.coin(1, 12):
            return BASE
        return SpherePoint(self.interior_point())

    def _side(self, lo=ZERO, hi=ONE):
        kind = self.rng.below(6)
        if kind == 0:
            return lo, hi
        if kind == 1:
            return lo, self.between(lo, hi)
        if kind == 2:
            return self.between(lo, hi), hi
        a, b = self.between(lo, hi), self.between(lo, hi)
        while a == b:
            b = self.between(lo, hi)
        return min(a, b), max(a, b)

    def cube(self):
        return LittleCube.from_image([self._side() for _ in range(self.n)])

    def cube_containing(self, t, closed=False):
        """A cube whose image holds ``t`` (in its interior unless ``closed``)."""
        bounds = []
        for x in t:
            if closed and self.rng.coin(1, 3):
                lo, hi = (x, self.between(x, ONE, closed=True)) if self.rng.coin() else (self.between(ZERO, x, closed=True), x)
                if lo == hi:
                    lo, hi = ZERO, ONE
            else:
                lo = self.between(ZERO, x, closed=True) if x > 0 else ZERO
                hi = self.between(x, ONE, closed=True) if x < 1 else ONE
                if lo == x and x > 0:
                    lo = ZERO
                if hi == x and x < 1:
                    hi = ONE
            bounds.append((lo, hi))
        return LittleCube.from_image(bounds)

    def configuration(self, r):
        return random_configuration(self.rng, self.n, r, self.bits)

    def disjoint_pair(self):
        theta = self.configuration(2)
        return theta.cubes[0], theta.cubes[1]

    def permutation(self, r):
        return Permutation(tuple(self.rng.shuffle(range(1, r + 1))))

    # loops and elements

    def label(self):
        return self.rng.choice(LABELS)

    def loop(self):
        kind = self.rng.below(6)
        n = self.n
        if kind == 0:
            return Generator(n, self.label())
        if kind == 1:
            return IdentityLoop(n)
        if kind == 2:
            theta = self.configuration(self.rng.integer(1, 3))
            pieces = [(Rect.from_bounds(c.los, c.his), self.label()) for c in theta.cubes]
            return StepLoop(n, pieces)
        if kind == 3:
            a = self.rational()
            rest = ((ZERO, ONE),) * (n - 1)
            left = Rect.from_bounds(*zip((ZERO, a), *rest))
            right = Rect.from_bounds(*zip((a, ONE), *rest))
            return StepLoop(n, [(left, self.label()), (right, self.label())])
        if kind == 4:
            return Generator(n, suspension_point(self.interior_point(), self.label()))
        return ConstantLoop(n) if self.rng.coin(1, 2) else Generator(n, self.label())

    def peaked(self):
        return Peaked(self.interior_point(), self.loop())

    def element(self, kind=None):
        """A symbolic element; ``kind`` names the outer constructor."""
        kinds = ELEMENT_KINDS if self.n == 1 else ELEMENT_KINDS_ND
        if kind is None:
            kind = self.rng.choice(kinds)
        if kind == "Trivial":
            return Trivial(self.n)
        if kind == "Peaked":
            return self.peaked()
        if kind == "Threshold":
            return Threshold(self.threshold())
        if kind == "Precomposed":
            inner = self.element(self.rng.choice(["Peaked", "Threshold"] if self.n == 1 else ["Peaked"]))
            return Precomposed(inner, self.cube())
        if kind == "PostMapped":
            base = self.element(self.rng.choice(["Peaked", "Threshold"] if self.n == 1 else ["Peaked"]))
            # kill2 can only grow the base set of a Peaked term in a computable way
            phi = KILL2 if isinstance(base, Peaked) and self.rng.coin() else SWAP12
            return PostMapped(base, phi)
        if kind == "Expanded":
            base = self.element(self.rng.choice(["Peaked", "Threshold"] if self.n == 1 else ["Peaked"]))
            return Expanded(base, self.time())
        if kind == "Custom":
            t = self.interior_point()
            return fixture("inside", t=[format_rational(x) for x in t], label=self.label())
        raise ValueError(f"unknown element kind {kind!r}")


ELEMENT_KINDS = ("Trivial", "Peaked", "Precomposed", "PostMapped", "Threshold", "Expanded", "Custom")
ELEMENT_KINDS_ND = tuple(k for k in ELEMENT_KINDS if k != "Threshold")


def _split(rng, box, bits):
    los, his = list(box[0]), list(box[1])
    axis = rng.below(len(los))
    cut = rng.rational_between(los[axis], his[axis], bits)
    left_his = list(his)
    left_his[axis] = cut
    right_los = list(los)
    right_los[axis] = cut
    return (tuple(los), tuple(left_his)), (tuple(right_los), tuple(his))


def _shrink(rng, box, bits):
    los, his = [], []
    for lo, hi in zip(*box):
        if rng.coin():
            los.append(lo)
            his.append(hi)
            continue
        mid = rng.rational_between(lo, hi, bits)
        a = rng.rational_between(lo, mid, bits, closed=True)
        b = rng.rational_between(mid, hi, bits, closed=True)
        if a == b:
            a, b = lo, hi
        los.append(a)
        his.append(b)
    return tuple(los), tuple(his)


def random_configuration(rng, n, r, bits=DEFAULT_DENOM_BITS) -> Configuration:
    """Disjoint by construction: split boxes recursively, then shrink some of them."""
    if r == 0:
        return Configuration(n, (), validate=False)
    boxes = [((ZERO,) * n, (ONE,) * n)]
    while len(boxes) < r:
        k = rng.below(len(boxes))
        boxes[k:k + 1] = list(_split(rng, boxes[k], bits))
    boxes = [_shrink(rng, b, bits) for b in boxes]
    boxes = rng.shuffle(boxes)
    cubes = [LittleCube.from_image(list(zip(lo, hi))) for lo, hi in boxes]
    return Configuration(n, cubes)


# -- corner-case catalogues -------------------------------------------------------


def catalogue_cubes(n):
    full = [(ZERO, ONE)] * (n - 1)
    return [
        LittleCube.identity(n),
        LittleCube.from_image([(ZERO, HALF)] + full),
        LittleCube.from_image([(HALF, ONE)] + full),
        LittleCube.from_image([(ZERO, Q)] * n),
        LittleCube.from_image([(3 * Q, ONE)] * n),
        LittleCube.from_image([(Q, 3 * Q)] * n),
    ]


def catalogue_configurations(n, r):
    if r == 0:
        return [Configuration(n, (), validate=False)]
    if r == 1:
        return [Configuration(n, (LittleCube.identity(n),), validate=False)]
    out = []
    if r == 2:
        out.append(halves(n))
    # r slabs along the first axis, all sharing faces
    full = [(ZERO, ONE)] * (n - 1)
    out.append(Configuration.from_images(n, [[(Fraction(k, r), Fraction(k + 1, r))] + full for k in range(r)]))
    return out


def catalogue_points(n):
    equator = [(HALF,) + tuple(Q for _ in range(n - 1)), (HALF,) * n]
    grid = list(product((Q, HALF, 3 * Q), repeat=n))
    seen, out = set(), []
    for p in chain(equator, grid):
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


def catalogue_pairs(n):
    left, right = halves(n).cubes
    q = LittleCube.from_image([(ZERO, Q)] * n)
    corner = LittleCube.from_image([(Q, HALF)] + [(ZERO, Q)] * (n - 1))
    return [(left, right), (right, left), (q, corner)]


def catalogue_permutations(r):
    return [Permutation(p) for p in permutations(range(1, r + 1))][: max(1, min(6, r * r))]


# -- streams --------------------------------------------------------------------------

KINDS = (
    "cube", "configuration", "point", "sphere_point", "loop", "element", "disjoint_pair",
    "permutation", "coalgebra", "time",
)


def stream_seed(seed, kind, n, params=()):
    tail = ",".join(f"{k}={v}" for k, v in sorted(params))
    return derive_seed(seed, f"{kind}/{n}/{tail}")


def generate(kind, config, **params):
    """Infinite deterministic stream of ``kind`` values for ``config`` (dim, seed, denom_bits).

    ``configuration`` and ``permutation`` need ``r``; ``element`` accepts an
    optional constructor name ``term``.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    n = config.dim
    bits = getattr(config, "denom_bits", DEFAULT_DENOM_BITS)
    sampler = Sampler(n, stream_seed(config.seed, kind, n, params.items()), bits)
    if kind == "cube":
        yield from catalogue_cubes(n)
        while True:
            yield sampler.cube()
    elif kind == "configuration":
        r = params["r"]
        yield from catalogue_configurations(n, r)
        while True:
            yield sampler.configuration(r)
    elif kind == "point":
        yield from catalogue_points(n)
        while True:
            yield sampler.interior_point()
    elif kind == "sphere_point":
        yield BASE
        yield from (SpherePoint(p) for p in catalogue_points(n))
        while True:
            yield sampler.sphere_point()
    elif kind == "loop":
        yield Generator(n, 1)
        yield IdentityLoop(n)
        yield ConstantLoop(n)
        while True:
            yield sampler.loop()
    elif kind == "element":
        term = params.get("term")
        while True:
            yield sampler.element(term)
    elif kind == "disjoint_pair":
        yield from catalogue_pairs(n)
        while True:
            yield sampler.disjoint_pair()
    elif kind == "permutation":
        r = params["r"]
        yield from catalogue_permutations(r)
        while True:
            yield sampler.permutation(r)
    elif kind == "time":
        yield ZERO
        yield HALF
        yield ONE
        while True:
            yield sampler.time()
    elif kind == "coalgebra":
        from .recognition import sphere_instance, suspension_instance

        yield sphere_instance(n)
        yield suspension_instance(n)
        while True:
            k = sampler.rng.integer(1, 4)
            yield suspension_instance(n, labels=tuple(range(1, k + 1)))


def take(stream, k):
    return list(islice(stream, k))
