"""``cubeops`` command line.

Rationals are ``"p/q"`` strings everywhere. Commands that take a term or a
configuration read JSON from standard input; point and cube options accept
either JSON (``'["1/4","1/2"]'``) or a comma list (``1/4,1/2``).
"""

import argparse
import json
import os
import sys

from . import codec
from .approximation import (
    UnsupportedTerm,
    center,
    csupp,
    csupp_oracle,
    cube_st,
    expansion,
)
from .geometry import format_rational, parse_rational
from .harness.laws import EXTRA_SUITES, SUITES, SuiteConfig, report_json, run_suite
from .operad import (
    OperadError,
    config_from_json,
    config_to_json,
    cube_from_json,
    cube_to_json,
    full_compose,
    partial_compose,
)
from .render import RenderError, render_svg, value_from_json

DEFAULT_SEED = 42


def _emit(obj):
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _read_stdin():
    text = sys.stdin.read()
    if not text.strip():
        raise ValueError("expected JSON on standard input")
    return json.loads(text)


def _point(text):
    text = text.strip()
    if text.startswith("["):
        values = json.loads(text)
    else:
        values = [v for v in text.split(",") if v.strip()]
    return tuple(parse_rational(v) for v in values)


def _cube(text):
    data = json.loads(text)
    if isinstance(data, dict):
        data = data["cube"]
    return cube_from_json(data)


def _elem(data):
    if "elem" in data:
        data = data["elem"]
    return codec.elem_from_json(data)


def _coords(xs):
    return [format_rational(x) for x in xs]


def _rect(r):
    return None if r is None else codec.rect_to_json(r)


# -- commands -----------------------------------------------------------------


def cmd_compose(args):
    data = _read_stdin()
    outer = config_from_json(data["outer"])
    if "i" in data:
        out = partial_compose(outer, int(data["i"]), config_from_json(data["inner"]))
    else:
        out = full_compose(outer, [config_from_json(d) for d in data["inner"]])
    _emit(config_to_json(out))
    return 0


def cmd_csupp(args):
    f = _elem(_read_stdin())
    if args.oracle:
        _emit({"csupp": _rect(csupp_oracle(f, args.budget)), "method": "oracle"})
        return 0
    try:
        _emit({"csupp": _rect(csupp(f)), "method": "exact"})
    except UnsupportedTerm:
        _emit({"csupp": _rect(csupp_oracle(f, args.budget)), "method": "oracle"})
    return 0


def cmd_center(args):
    f = _elem(_read_stdin())
    t = center(f)
    _emit({"center": None if t is None else _coords(t)})
    return 0


def cmd_cube_st(args):
    if args.s is None or args.t is None:
        data = _read_stdin()
        s, t = _point(json.dumps(data["s"])), _point(json.dumps(data["t"]))
    else:
        s, t = _point(args.s), _point(args.t)
    _emit({"cube": cube_to_json(cube_st(s, t))})
    return 0


def cmd_expand(args):
    if args.c is None or args.p is None:
        data = _read_stdin()
        c, p = cube_from_json(data["c"]), _point(json.dumps(data["p"]))
        times = args.time or data.get("time", ["1"])
        if not isinstance(times, list):
            times = [times]
    else:
        c, p = _cube(args.c), _point(args.p)
        times = args.time or ["1"]
    path = expansion(c, p)
    frames = [{"time": format_rational(parse_rational(t)), "cube": cube_to_json(path(t))} for t in times]
    _emit({"fixed": _coords(path.fixed), "point": _coords(path.point), "frames": frames})
    return 0


def cmd_check(args):
    seed = args.seed
    if seed is None:
        env = os.environ.get("CUBEOPS_SEED")
        seed = int(env, 0) if env else DEFAULT_SEED
    known = set(SUITES) | set(EXTRA_SUITES)
    names = args.suite or []
    unknown = [s for s in names if s not in known]
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(unknown)}")
    config = SuiteConfig(dim=args.n, seed=seed, samples=args.samples)
    reports = run_suite(names, config)
    sys.stdout.write(report_json(reports, config, timing=args.timing) + "\n")
    return 0 if all(r.passed for r in reports) else 1


def cmd_render(args):
    if args.input == "-":
        data = _read_stdin()
    else:
        with open(args.input, encoding="utf-8") as fh:
            data = json.load(fh)
    render_svg(value_from_json(data), args.out)
    return 0


def cmd_suites(args):
    _emit({"default": sorted(SUITES), "extra": sorted(EXTRA_SUITES)})
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="cubeops", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compose", help="operad composition of JSON configurations on stdin")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("csupp", help="cubical support of a term on stdin")
    p.add_argument("--oracle", action="store_true", help="force the brute-force oracle")
    p.add_argument("--budget", type=int, default=10_000)
    p.set_defaults(func=cmd_csupp)

    p = sub.add_parser("center", help="centre of the cubical support of a term on stdin")
    p.set_defaults(func=cmd_center)

    p = sub.add_parser("cube-st", help="boundary-touching cube sending s to t")
    p.add_argument("--s")
    p.add_argument("--t")
    p.set_defaults(func=cmd_cube_st)

    p = sub.add_parser("expand", help="rectilinear expansion of a cube about a point")
    p.add_argument("--c", help="cube image as JSON [[lo,hi],...]")
    p.add_argument("--p")
    p.add_argument("--time", action="append", help="repeat for several frames")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("check", help="run law suites and print a JSON report")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--seed", type=lambda s: int(s, 0), default=None)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--suite", action="append", help="suite name; repeatable (default: all)")
    p.add_argument("--timing", action="store_true", help="include wall times (breaks byte-identity)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("render", help="write an SVG picture (n <= 2)")
    p.add_argument("--input", required=True, help="JSON file, or - for stdin")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("suites", help="list suite names")
    p.set_defaults(func=cmd_suites)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, TypeError, KeyError, OperadError, RenderError) as exc:
        sys.stderr.write(f"cubeops {args.command}: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
