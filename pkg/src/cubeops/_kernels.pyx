# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled rational kernels.

Same contract as ``_kernels_py``. Arithmetic is carried out on the raw
numerator/denominator integers of each Fraction and reduced once per output
coordinate, which skips the per-operation normalisation that dominates the
cost of ``Fraction`` arithmetic.
"""

from fractions import Fraction
from math import gcd

cdef object _Fraction = Fraction
cdef object _new = object.__new__


cdef inline object _mk(object n, object d):
    # d > 0 is guaranteed by every caller
    cdef object g = gcd(n, d)
    if g != 1:
        n = n // g
        d = d // g
    f = _new(_Fraction)
    f._numerator = n
    f._denominator = d
    return f


def apply(tuple scales, tuple offsets, x):
    cdef Py_ssize_t i, k = len(scales)
    cdef list out = [None] * k
    cdef object s, o, xi
    for i in range(k):
        s = scales[i]; o = offsets[i]; xi = x[i]
        out[i] = _mk(
            s._numerator * xi._numerator * o._denominator
            + o._numerator * s._denominator * xi._denominator,
            s._denominator * xi._denominator * o._denominator,
        )
    return tuple(out)


def invert(tuple scales, tuple offsets, y):
    cdef Py_ssize_t i, k = len(scales)
    cdef list out = [None] * k
    cdef object s, o, yi
    for i in range(k):
        s = scales[i]; o = offsets[i]; yi = y[i]
        out[i] = _mk(
            (yi._numerator * o._denominator - o._numerator * yi._denominator)
            * s._denominator,
            yi._denominator * o._denominator * s._numerator,
        )
    return tuple(out)


def compose(tuple sa, tuple oa, tuple sb, tuple ob):
    cdef Py_ssize_t i, k = len(sa)
    cdef list scales = [None] * k
    cdef list offsets = [None] * k
    cdef object s1, o1, s2, o2
    for i in range(k):
        s1 = sa[i]; o1 = oa[i]; s2 = sb[i]; o2 = ob[i]
        scales[i] = _mk(s1._numerator * s2._numerator, s1._denominator * s2._denominator)
        offsets[i] = _mk(
            s1._numerator * o2._numerator * o1._denominator
            + o1._numerator * s1._denominator * o2._denominator,
            s1._denominator * o2._denominator * o1._denominator,
        )
    return tuple(scales), tuple(offsets)


cdef inline bint _lt(object an, object ad, object bn, object bd):
    return an * bd < bn * ad


cdef inline bint _le(object an, object ad, object bn, object bd):
    return an * bd <= bn * ad


def contains_open(tuple scales, tuple offsets, y):
    cdef Py_ssize_t i, k = len(scales)
    cdef object s, o, yi, hn, hd
    for i in range(k):
        s = scales[i]; o = offsets[i]; yi = y[i]
        if not _lt(o._numerator, o._denominator, yi._numerator, yi._denominator):
            return False
        hn = o._numerator * s._denominator + s._numerator * o._denominator
        hd = o._denominator * s._denominator
        if not _lt(yi._numerator, yi._denominator, hn, hd):
            return False
    return True


def contains_closed(tuple scales, tuple offsets, y):
    cdef Py_ssize_t i, k = len(scales)
    cdef object s, o, yi, hn, hd
    for i in range(k):
        s = scales[i]; o = offsets[i]; yi = y[i]
        if not _le(o._numerator, o._denominator, yi._numerator, yi._denominator):
            return False
        hn = o._numerator * s._denominator + s._numerator * o._denominator
        hd = o._denominator * s._denominator
        if not _le(yi._numerator, yi._denominator, hn, hd):
            return False
    return True


def interiors_overlap(tuple sa, tuple oa, tuple sb, tuple ob):
    cdef Py_ssize_t i, k = len(sa)
    cdef object s1, o1, s2, o2, h1n, h1d, h2n, h2d
    for i in range(k):
        s1 = sa[i]; o1 = oa[i]; s2 = sb[i]; o2 = ob[i]
        h1n = o1._numerator * s1._denominator + s1._numerator * o1._denominator
        h1d = o1._denominator * s1._denominator
        h2n = o2._numerator * s2._denominator + s2._numerator * o2._denominator
        h2d = o2._denominator * s2._denominator
        # max(lo) < min(hi)  <=>  lo1 < hi2 and lo2 < hi1
        if not _lt(o1._numerator, o1._denominator, h2n, h2d):
            return False
        if not _lt(o2._numerator, o2._denominator, h1n, h1d):
            return False
    return True


def intersect(tuple los_a, tuple his_a, tuple los_b, tuple his_b):
    cdef Py_ssize_t i, k = len(los_a)
    cdef list los = [None] * k
    cdef list his = [None] * k
    cdef object a0, a1, b0, b1, lo, hi
    for i in range(k):
        a0 = los_a[i]; a1 = his_a[i]; b0 = los_b[i]; b1 = his_b[i]
        lo = a0 if _lt(b0._numerator, b0._denominator, a0._numerator, a0._denominator) else b0
        hi = a1 if _lt(a1._numerator, a1._denominator, b1._numerator, b1._denominator) else b1
        if _lt(hi._numerator, hi._denominator, lo._numerator, lo._denominator):
            return None
        los[i] = lo
        his[i] = hi
    return tuple(los), tuple(his)


cdef object _ONE = Fraction(1)
cdef object _ZERO = Fraction(0)


def cube_st(s, t):
    cdef Py_ssize_t i, k = len(s)
    cdef list scales = [None] * k
    cdef list offsets = [None] * k
    cdef object si, ti, sn, sd, tn, td, kn, kd
    for i in range(k):
        si = s[i]; ti = t[i]
        sn = si._numerator; sd = si._denominator
        tn = ti._numerator; td = ti._denominator
        if sn == tn and sd == td:
            scales[i] = _ONE
            offsets[i] = _ZERO
        elif tn * sd < sn * td:
            scales[i] = _mk(tn * sd, td * sn)
            offsets[i] = _ZERO
        else:
            kn = (td - tn) * sd
            kd = td * (sd - sn)
            scales[i] = _mk(kn, kd)
            offsets[i] = _mk(kd - kn, kd)
    return tuple(scales), tuple(offsets)


def interpolate(tuple sa, tuple oa, tuple sb, tuple ob, tau):
    cdef Py_ssize_t i, k = len(sa)
    cdef list scales = [None] * k
    cdef list offsets = [None] * k
    cdef object tn = tau._numerator, td = tau._denominator
    cdef object un = td - tn
    cdef object s1, o1, s2, o2, lon, lod, hin, hid, h1n, h1d, h2n, h2d
    for i in range(k):
        s1 = sa[i]; o1 = oa[i]; s2 = sb[i]; o2 = ob[i]
        # lo = ((td - tn) * o1 + tn * o2) / td
        lon = un * o1._numerator * o2._denominator + tn * o2._numerator * o1._denominator
        lod = td * o1._denominator * o2._denominator
        h1n = o1._numerator * s1._denominator + s1._numerator * o1._denominator
        h1d = o1._denominator * s1._denominator
        h2n = o2._numerator * s2._denominator + s2._numerator * o2._denominator
        h2d = o2._denominator * s2._denominator
        hin = un * h1n * h2d + tn * h2n * h1d
        hid = td * h1d * h2d
        offsets[i] = _mk(lon, lod)
        scales[i] = _mk(hin * lod - lon * hid, hid * lod)
    return tuple(scales), tuple(offsets)
