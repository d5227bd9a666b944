"""JSON forms for everything that appears in reports and on the command line.

Rationals are ``"p/q"`` strings. Terms, loops and pointed maps that wrap
Python callables serialize only when they come from a registry: named pointed
maps in :data:`MAPS`, and named ``Custom`` element factories in
:data:`FIXTURES`. Anything else raises :class:`TypeError`.
"""

from fractions import Fraction

from .approximation import Expanded
from .comonad import CnElem, Custom, Peaked, PostMapped, Precomposed, Threshold, Trivial
from .geometry import Rect, format_rational, parse_rational
from .operad import (
    Configuration,
    LittleCube,
    Permutation,
    config_from_json,
    config_to_json,
    cube_from_json,
    cube_to_json,
)
from .spaces import (
    BASE,
    IDENTITY,
    TO_BASE,
    Bar,
    ConstantLoop,
    Generator,
    IdentityLoop,
    LoopMap,
    MappedLoop,
    PointedMap,
    SpherePoint,
    StepLoop,
    SuspensionPoint,
    WedgePoint,
    sphere_point,
    suspension_point,
    wedge_include,
)

MAPS = {"id": IDENTITY, "to_base": TO_BASE}
FIXTURES = {}


def register_map(phi: PointedMap):
    MAPS[phi.name] = phi
    return phi


def register_fixture(name):
    """Decorator for ``Custom`` element factories taking JSON-ready keyword params."""

    def wrap(factory):
        def build(**params):
            elem = factory(**params)
            elem.recipe = {"term": "Custom", "fixture": name, "params": params}
            return elem

        FIXTURES[name] = build
        return build

    return wrap


def fixture(name, **params):
    return FIXTURES[name](**params)


def _q(x):
    return format_rational(x)


def _coords(xs):
    return [_q(x) for x in xs]


def _uncoords(xs):
    return tuple(parse_rational(x) for x in xs)


def rect_to_json(r: Rect):
    return [[_q(iv.lo), _q(iv.hi)] for iv in r.intervals]


def rect_from_json(data):
    return Rect.from_bounds(tuple(parse_rational(a) for a, _ in data), tuple(parse_rational(b) for _, b in data))


# -- points ---------------------------------------------------------------------


def point_to_json(p):
    if p is BASE:
        return {"base": True}
    if isinstance(p, SpherePoint):
        return {"coords": _coords(p.coords)}
    if isinstance(p, SuspensionPoint):
        return {"t": _coords(p.t), "x": encode(p.x)}
    if isinstance(p, WedgePoint):
        return {"arity": p.arity, "slot": p.slot, "x": encode(p.x)}
    if isinstance(p, bool):
        raise TypeError("booleans are not points")
    if isinstance(p, Fraction):
        return {"q": _q(p)}
    if isinstance(p, int):
        return {"label": p}
    raise TypeError(f"no JSON form for point {p!r}")


def point_from_json(data):
    if data.get("base"):
        return BASE
    if "coords" in data:
        return sphere_point(_uncoords(data["coords"]))
    if "t" in data:
        return suspension_point(_uncoords(data["t"]), decode(data["x"]))
    if "slot" in data:
        return wedge_include(decode(data["x"]), int(data["slot"]), int(data["arity"]))
    if "q" in data:
        q = parse_rational(data["q"])
        return BASE if q == 0 else q
    if "label" in data:
        k = int(data["label"])
        return BASE if k == 0 else k
    raise ValueError(f"unrecognised point JSON {data!r}")


# -- loops ----------------------------------------------------------------------


def _map_name(phi):
    if MAPS.get(phi.name) is not phi:
        raise TypeError(f"pointed map {phi.name!r} is not registered")
    return phi.name


def loop_to_json(loop: LoopMap):
    if isinstance(loop, ConstantLoop):
        return {"loop": "constant", "dim": loop.dim}
    if isinstance(loop, IdentityLoop):
        return {"loop": "identity", "dim": loop.dim}
    if isinstance(loop, Bar):
        return {"loop": "bar", "of": loop_to_json(loop.x)}
    if isinstance(loop, Generator):
        return {"loop": "generator", "dim": loop.dim, "x": encode(loop.x)}
    if isinstance(loop, MappedLoop):
        return {"loop": "mapped", "of": loop_to_json(loop.loop), "phi": _map_name(loop.phi)}
    if isinstance(loop, StepLoop):
        return {
            "loop": "step",
            "dim": loop.dim,
            "pieces": [{"box": rect_to_json(box), "x": encode(v)} for box, v in loop.pieces],
        }
    raise TypeError(f"loop {loop!r} has no JSON form")


def loop_from_json(data) -> LoopMap:
    kind = data["loop"]
    if kind == "constant":
        return ConstantLoop(int(data["dim"]))
    if kind == "identity":
        return IdentityLoop(int(data["dim"]))
    if kind == "bar":
        return Bar(loop_from_json(data["of"]))
    if kind == "generator":
        return Generator(int(data["dim"]), decode(data["x"]))
    if kind == "mapped":
        return MappedLoop(loop_from_json(data["of"]), MAPS[data["phi"]])
    if kind == "step":
        pieces = [(rect_from_json(p["box"]), decode(p["x"])) for p in data["pieces"]]
        return StepLoop(int(data["dim"]), pieces)
    raise ValueError(f"unknown loop kind {kind!r}")


# -- elements -------------------------------------------------------------------


def elem_to_json(f: CnElem):
    if isinstance(f, Trivial):
        return {"term": "Trivial", "dim": f.dim}
    if isinstance(f, Peaked):
        return {"term": "Peaked", "t": _coords(f.t), "loop": loop_to_json(f.loop)}
    if isinstance(f, Precomposed):
        return {"term": "Precomposed", "base": elem_to_json(f.base), "cube": cube_to_json(f.cube)}
    if isinstance(f, PostMapped):
        return {"term": "PostMapped", "base": elem_to_json(f.base), "phi": _map_name(f.phi)}
    if isinstance(f, Threshold):
        return {"term": "Threshold", "a": _q(f.a)}
    if isinstance(f, Expanded):
        return {"term": "Expanded", "base": elem_to_json(f.base), "time": _q(f.time)}
    if isinstance(f, Custom) and hasattr(f, "recipe"):
        return f.recipe
    raise TypeError(f"element {f!r} has no JSON form")


def elem_from_json(data) -> CnElem:
    term = data["term"]
    if term == "Trivial":
        return Trivial(int(data["dim"]))
    if term == "Peaked":
        return Peaked(_uncoords(data["t"]), loop_from_json(data["loop"]))
    if term == "Precomposed":
        return Precomposed(elem_from_json(data["base"]), cube_from_json(data["cube"]))
    if term == "PostMapped":
        return PostMapped(elem_from_json(data["base"]), MAPS[data["phi"]])
    if term == "Threshold":
        return Threshold(parse_rational(data["a"]))
    if term == "Expanded":
        return Expanded(elem_from_json(data["base"]), parse_rational(data["time"]))
    if term == "Custom":
        return fixture(data["fixture"], **data.get("params", {}))
    raise ValueError(f"unknown term {term!r}")


# -- generic values ---------------------------------------------------------------


def encode(v):
    """Tagged JSON for any value that can appear in a counterexample."""
    if isinstance(v, LittleCube):
        return {"cube": cube_to_json(v)}
    if isinstance(v, Configuration):
        return {"config": config_to_json(v)}
    if isinstance(v, Permutation):
        return {"perm": list(v.images)}
    if isinstance(v, CnElem):
        return {"elem": elem_to_json(v)}
    if isinstance(v, LoopMap):
        return loop_to_json(v)
    if isinstance(v, Rect):
        return {"rect": rect_to_json(v)}
    if isinstance(v, (tuple, list)):
        if v and all(isinstance(x, Fraction) for x in v):
            return {"point": _coords(v)}
        return {"seq": [encode(x) for x in v]}
    if v is None:
        return {"none": True}
    if isinstance(v, bool):
        raise TypeError("booleans have no tagged form")
    if isinstance(v, str):
        return {"str": v}
    if isinstance(v, Fraction):
        return {"rational": _q(v)}
    if isinstance(v, int):
        return {"int": v}
    return point_to_json(v)


def decode(data):
    if "cube" in data:
        return cube_from_json(data["cube"])
    if "config" in data:
        return config_from_json(data["config"])
    if "perm" in data:
        return Permutation(tuple(int(k) for k in data["perm"]))
    if "elem" in data:
        return elem_from_json(data["elem"])
    if "loop" in data:
        return loop_from_json(data)
    if "rect" in data:
        return rect_from_json(data["rect"])
    if "point" in data:
        return _uncoords(data["point"])
    if "seq" in data:
        return tuple(decode(x) for x in data["seq"])
    if "none" in data:
        return None
    if "str" in data:
        return data["str"]
    if "rational" in data:
        return parse_rational(data["rational"])
    if "int" in data:
        return int(data["int"])
    return point_from_json(data)


# -- shipped fixtures -----------------------------------------------------------


@register_fixture("inside")
def _inside(t, label):
    """``c -> label`` when the interior of ``c`` holds ``t``: a Custom twin of Peaked."""
    t = _uncoords(t)

    def fn(c):
        return label if c.contains(t, open=True) else BASE

    return Custom(len(t), fn, name="inside", support=Rect.point(t))


@register_fixture("broken")
def _broken(dim=1):
    """Non-base on every cube: violates property (D) on any disjoint pair."""
    return Custom(int(dim), lambda c: 1, name="broken")


@register_fixture("wide")
def _wide(a):
    """``c -> 1`` on intervals wider than ``a``; like Threshold but support left to the oracle."""
    a = parse_rational(a)

    def fn(c):
        return 1 if c.scales[0] > a else BASE

    return Custom(1, fn, name="wide")


def _swap12(x):
    return {1: 2, 2: 1}.get(x, x) if isinstance(x, int) else x


SWAP12 = register_map(PointedMap(_swap12, name="swap12", reflects_base=True))
KILL2 = register_map(PointedMap(lambda x: BASE if x == 2 else x, name="kill2"))
