"""Compiled kernels against the pure-Python fallback on identical inputs.

    python benchmarks/bench_kernels.py [--repeat 5] [--size 2000]

Prints one row per kernel with the best-of-``repeat`` time for each backend
and the speed-up. Exits nonzero if the two backends ever disagree.
"""

import argparse
import sys
import timeit

from cubeops import _kernels_py as py
from cubeops.rng import SplitMix64

try:
    from cubeops import _kernels as cy
except ImportError:
    cy = None


def cube(rng, n):
    scales, offsets = [], []
    for _ in range(n):
        a, b = rng.rational(12), rng.rational(12)
        while a == b:
            b = rng.rational(12)
        lo, hi = min(a, b), max(a, b)
        scales.append(hi - lo)
        offsets.append(lo)
    return tuple(scales), tuple(offsets)


def workload(size, n, seed=1):
    rng = SplitMix64(seed)
    cubes = [cube(rng, n) for _ in range(size)]
    pts = [tuple(rng.rational(12) for _ in range(n)) for _ in range(size)]
    return cubes, pts


def cases(cubes, pts):
    pairs = list(zip(cubes, cubes[1:] + cubes[:1], pts))
    half = pts[0][0]
    return {
        "apply": lambda k: [k.apply(s, o, x) for (s, o), _, x in pairs],
        "invert": lambda k: [k.invert(s, o, x) for (s, o), _, x in pairs],
        "compose": lambda k: [k.compose(a[0], a[1], b[0], b[1]) for a, b, _ in pairs],
        "contains_open": lambda k: [k.contains_open(s, o, x) for (s, o), _, x in pairs],
        "interiors_overlap": lambda k: [k.interiors_overlap(a[0], a[1], b[0], b[1]) for a, b, _ in pairs],
        "cube_st": lambda k: [k.cube_st(x, y) for (_, _, x), (_, _, y) in zip(pairs, pairs[1:])],
        "interpolate": lambda k: [k.interpolate(a[0], a[1], b[0], b[1], half) for a, b, _ in pairs],
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--size", type=int, default=2000)
    ap.add_argument("--dim", type=int, default=2)
    args = ap.parse_args(argv)
    if cy is None:
        print("compiled extension not built; nothing to compare")
        return 0
    cubes, pts = workload(args.size, args.dim)
    print(f"{'kernel':<18} {'python ms':>10} {'cython ms':>10} {'speed-up':>9}")
    for name, fn in cases(cubes, pts).items():
        if fn(py) != fn(cy):
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        t_py = min(timeit.repeat(lambda: fn(py), number=1, repeat=args.repeat))
        t_cy = min(timeit.repeat(lambda: fn(cy), number=1, repeat=args.repeat))
        print(f"{name:<18} {t_py * 1e3:>10.2f} {t_cy * 1e3:>10.2f} {t_py / t_cy:>8.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
