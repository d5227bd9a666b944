"""Exact rational intervals, rectangles and per-coordinate affine maps.

Scalars are :class:`fractions.Fraction` throughout. Intervals and rectangles are
closed; degenerate ones (``lo == hi``) are allowed because cubical supports can
shrink to a point. Affine components are strictly increasing.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from . import kernels

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


class DimensionMismatch(ValueError):
    pass


class NotInImage(ValueError):
    """Raised when inverting a cube at a point outside its image."""

    def __init__(self, point=None):
        super().__init__("point not in cube image" + ("" if point is None else f": {point}"))
        self.point = point


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or an int into a Fraction.

    Floats are refused: every coordinate has to be exact.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool) or isinstance(text, float):
        raise TypeError(f"refusing inexact value {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    return Fraction(str(text).strip())


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def as_point(coords) -> Tuple[Fraction, ...]:
    if isinstance(coords, (Fraction, int, str)):
        coords = (coords,)
    return tuple(parse_rational(c) for c in coords)


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if not (ZERO <= self.lo <= self.hi <= ONE):
            raise ValueError(f"bad interval [{self.lo}, {self.hi}]")

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def degenerate(self):
        return self.lo == self.hi

    def contains(self, x, open=False):
        if open:
            return self.lo < x < self.hi
        return self.lo <= x <= self.hi

    def __str__(self):
        return f"[{format_rational(self.lo)},{format_rational(self.hi)}]"


def interval(lo, hi) -> Interval:
    return Interval(parse_rational(lo), parse_rational(hi))


@dataclass(frozen=True)
class Rect:
    """Axis-aligned closed box ``[a_1,b_1] x ... x [a_n,b_n]`` inside the unit cube."""

    intervals: Tuple[Interval, ...]

    @property
    def dim(self):
        return len(self.intervals)

    @property
    def los(self):
        return tuple(iv.lo for iv in self.intervals)

    @property
    def his(self):
        return tuple(iv.hi for iv in self.intervals)

    @property
    def is_point(self):
        return all(iv.degenerate for iv in self.intervals)

    @classmethod
    def from_bounds(cls, los, his):
        return cls(tuple(Interval(a, b) for a, b in zip(los, his)))

    @classmethod
    def point(cls, coords):
        return cls.from_bounds(coords, coords)

    def contains(self, p, open=False):
        return all(iv.contains(x, open) for iv, x in zip(self.intervals, p))

    def __str__(self):
        return "x".join(str(iv) for iv in self.intervals)


def rect(*pairs) -> Rect:
    """``rect(("0","1/2"), ("1/4", 1))`` builds ``[0,1/2]x[1/4,1]``."""
    return Rect(tuple(interval(lo, hi) for lo, hi in pairs))


def interval_intersect(a: Interval, b: Interval) -> Optional[Interval]:
    lo = max(a.lo, b.lo)
    hi = min(a.hi, b.hi)
    if lo > hi:
        return None
    return Interval(lo, hi)


def rect_intersect(a: Rect, b: Rect) -> Optional[Rect]:
    if a.dim != b.dim:
        raise DimensionMismatch(f"{a.dim} != {b.dim}")
    out = kernels.intersect(a.los, a.his, b.los, b.his)
    if out is None:
        return None
    return Rect.from_bounds(*out)


def rect_center(r: Rect) -> Tuple[Fraction, ...]:
    return tuple((iv.lo + iv.hi) / 2 for iv in r.intervals)


@dataclass(frozen=True)
class AffineComponent:
    """One coordinate ``t -> scale*t + offset`` of a little cube."""

    scale: Fraction
    offset: Fraction

    def __post_init__(self):
        if self.scale <= 0:
            raise ValueError("affine component must have positive scale")
        if self.offset < 0 or self.offset + self.scale > 1:
            raise ValueError("affine component image leaves [0,1]")

    @classmethod
    def from_image(cls, lo, hi):
        lo, hi = parse_rational(lo), parse_rational(hi)
        return cls(hi - lo, lo)

    @property
    def image(self) -> Interval:
        return Interval(self.offset, self.offset + self.scale)


IDENTITY_COMPONENT = AffineComponent(ONE, ZERO)


def affine_apply(c: AffineComponent, t):
    return c.scale * t + c.offset


def affine_invert(c: AffineComponent, t):
    if not c.image.contains(t):
        raise NotInImage(t)
    return (t - c.offset) / c.scale


def affine_compose(c: AffineComponent, d: AffineComponent) -> AffineComponent:
    """``x -> c(d(x))``."""
    return AffineComponent(c.scale * d.scale, c.scale * d.offset + c.offset)
