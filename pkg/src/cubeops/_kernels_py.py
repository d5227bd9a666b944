"""Pure-Python rational kernels.

Every function works coordinate-wise on tuples of :class:`fractions.Fraction`.
A little cube is passed as two tuples ``(scales, offsets)`` so that the
coordinate ``i`` acts as ``x -> scales[i] * x + offsets[i]``.

The compiled twin in ``_kernels.pyx`` must agree with these functions on every
input; the test-suite cross-checks the two.
"""

from fractions import Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def apply(scales, offsets, x):
    return tuple(s * xi + o for s, o, xi in zip(scales, offsets, x))


def invert(scales, offsets, y):
    return tuple((yi - o) / s for s, o, yi in zip(scales, offsets, y))


def compose(sa, oa, sb, ob):
    """Coefficients of ``a o b`` (apply ``b`` first)."""
    return (
        tuple(x * y for x, y in zip(sa, sb)),
        tuple(x * o2 + o1 for x, o1, o2 in zip(sa, oa, ob)),
    )


def contains_open(scales, offsets, y):
    for s, o, yi in zip(scales, offsets, y):
        if not (o < yi < o + s):
            return False
    return True


def contains_closed(scales, offsets, y):
    for s, o, yi in zip(scales, offsets, y):
        if not (o <= yi <= o + s):
            return False
    return True


def interiors_overlap(sa, oa, sb, ob):
    for s1, o1, s2, o2 in zip(sa, oa, sb, ob):
        if max(o1, o2) >= min(o1 + s1, o2 + s2):
            return False
    return True


def intersect(los_a, his_a, los_b, his_b):
    """Closed box intersection; ``None`` when empty."""
    los = []
    his = []
    for a0, a1, b0, b1 in zip(los_a, his_a, los_b, his_b):
        lo = a0 if a0 > b0 else b0
        hi = a1 if a1 < b1 else b1
        if lo > hi:
            return None
        los.append(lo)
        his.append(hi)
    return tuple(los), tuple(his)


def cube_st(s, t):
    """Boundary-touching cube sending ``s`` to ``t``.

    ``t`` must be strictly interior. ``s_i`` may sit on a face: ``s_i = 0``
    takes the right-anchored branch and ``s_i = 1`` the left-anchored one.
    """
    scales = []
    offsets = []
    for si, ti in zip(s, t):
        if ti == si:
            scales.append(_ONE)
            offsets.append(_ZERO)
        elif ti < si:
            scales.append(ti / si)
            offsets.append(_ZERO)
        else:
            k = (_ONE - ti) / (_ONE - si)
            scales.append(k)
            offsets.append(_ONE - k)
    return tuple(scales), tuple(offsets)


def interpolate(sa, oa, sb, ob, tau):
    """Endpoint-wise linear interpolation from cube ``a`` (tau=0) to ``b`` (tau=1)."""
    u = _ONE - tau
    scales = []
    offsets = []
    for s1, o1, s2, o2 in zip(sa, oa, sb, ob):
        lo = u * o1 + tau * o2
        hi = u * (o1 + s1) + tau * (o2 + s2)
        scales.append(hi - lo)
        offsets.append(lo)
    return tuple(scales), tuple(offsets)
