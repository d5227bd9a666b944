"""The compiled kernels must agree exactly with the pure-Python fallback."""

import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from cubeops import _kernels_py as py

from strategies import closed_points, cubes, points, times

cy = pytest.importorskip("cubeops._kernels", reason="extension not built")

DIMS = st.integers(1, 3)


def _pair(n):
    return st.tuples(cubes(n), cubes(n))


@given(DIMS.flatmap(lambda n: st.tuples(_pair(n), closed_points(n), points(n))))
def test_pointwise_kernels(args):
    (a, b), s, t = args
    for name in ("apply",):
        assert getattr(py, name)(a.scales, a.offsets, s) == getattr(cy, name)(a.scales, a.offsets, s)
    for name in ("contains_open", "contains_closed"):
        assert getattr(py, name)(a.scales, a.offsets, t) == getattr(cy, name)(a.scales, a.offsets, t)
    y = py.apply(a.scales, a.offsets, s)
    assert py.invert(a.scales, a.offsets, y) == cy.invert(a.scales, a.offsets, y) == s
    assert py.compose(a.scales, a.offsets, b.scales, b.offsets) == cy.compose(a.scales, a.offsets, b.scales, b.offsets)
    assert py.interiors_overlap(a.scales, a.offsets, b.scales, b.offsets) == cy.interiors_overlap(
        a.scales, a.offsets, b.scales, b.offsets
    )
    assert py.intersect(a.los, a.his, b.los, b.his) == cy.intersect(a.los, a.his, b.los, b.his)
    assert py.cube_st(s, t) == cy.cube_st(s, t)


@given(DIMS.flatmap(lambda n: st.tuples(_pair(n), times())))
def test_interpolation(args):
    (a, b), tau = args
    assert py.interpolate(a.scales, a.offsets, b.scales, b.offsets, tau) == cy.interpolate(
        a.scales, a.offsets, b.scales, b.offsets, tau
    )


def test_outputs_are_fractions():
    from fractions import Fraction

    scales, offsets = cy.compose((Fraction(1, 2),), (Fraction(0),), (Fraction(1, 3),), (Fraction(1, 3),))
    assert all(type(x) is Fraction for x in scales + offsets)
    assert scales == (Fraction(1, 6),) and offsets == (Fraction(1, 6),)


def test_pure_python_switch():
    code = "import cubeops; print(cubeops.BACKEND)"
    out = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True, env={"CUBEOPS_PURE_PYTHON": "1"}, check=True
    )
    assert out.stdout.strip() == "python"
