"""SVG pictures of configurations, expansion paths and cubical supports (n <= 2).

Output is a pure function of the input: coordinates are exact rationals
printed with a fixed number of decimals and elements are emitted in a fixed
order, so the same value always yields the same bytes. One-dimensional cubes
are drawn as bars across a strip; two-dimensional ones as rectangles in the
unit square with the second coordinate pointing up.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple
from xml.sax.saxutils import escape

from .approximation import UnsupportedTerm, csupp, csupp_oracle, expansion
from .comonad import CnElem
from .geometry import Rect, format_rational, parse_rational
from .operad import Configuration, LittleCube, config_from_json, cube_from_json

SIDE = 240
MARGIN = 24
STRIP = 48
GAP = 32
FILLS = ("#8ecae6", "#ffb703", "#90be6d", "#f28482", "#b8b8ff", "#f6bd60")


class RenderError(ValueError):
    pass


@dataclass(frozen=True)
class Frames:
    """Snapshots of an expansion path at the given times."""

    cubes: Tuple[LittleCube, ...]
    times: Tuple[Fraction, ...]
    point: Tuple[Fraction, ...]

    @property
    def dim(self):
        return len(self.point)


@dataclass(frozen=True)
class Support:
    rect: Optional[Rect]
    dim: int
    label: str = "csupp"


def expansion_frames(c: LittleCube, p, times: Sequence) -> Frames:
    path = expansion(c, p)
    times = tuple(parse_rational(t) for t in times)
    return Frames(tuple(path(t) for t in times), times, path.point)


def support_of(f: CnElem, budget=10_000) -> Support:
    try:
        return Support(csupp(f), f.dim)
    except UnsupportedTerm:
        return Support(csupp_oracle(f, budget), f.dim, "csupp (oracle)")


# -- drawing ------------------------------------------------------------------------------


def _n(x):
    return f"{float(x):.3f}"


class _Canvas:
    def __init__(self, dim):
        self.dim = dim
        self.height = SIDE if dim == 2 else STRIP
        self.parts = []

    def box(self, x0, los, his):
        """Screen rectangle for the closed box ``[los, his]`` in a panel starting at ``x0``."""
        x = x0 + los[0] * SIDE
        w = (his[0] - los[0]) * SIDE
        if self.dim == 1:
            return x, MARGIN, w, Fraction(self.height)
        y = MARGIN + (1 - his[1]) * SIDE
        h = (his[1] - los[1]) * SIDE
        return x, y, w, h

    def rect(self, x0, los, his, fill, stroke="#222", opacity="0.55", dash=None):
        x, y, w, h = self.box(x0, los, his)
        extra = f' stroke-dasharray="{dash}"' if dash else ""
        self.parts.append(
            f'<rect x="{_n(x)}" y="{_n(y)}" width="{_n(w)}" height="{_n(h)}" '
            f'fill="{fill}" fill-opacity="{opacity}" stroke="{stroke}" stroke-width="1"{extra}/>'
        )

    def text(self, x, y, s, size=12, anchor="middle"):
        self.parts.append(
            f'<text x="{_n(x)}" y="{_n(y)}" font-family="monospace" font-size="{size}" '
            f'text-anchor="{anchor}">{escape(s)}</text>'
        )

    def dot(self, x0, point):
        if self.dim == 1:
            cx, cy = x0 + point[0] * SIDE, MARGIN + Fraction(self.height, 2)
        else:
            cx, cy = x0 + point[0] * SIDE, MARGIN + (1 - point[1]) * SIDE
        self.parts.append(f'<circle cx="{_n(cx)}" cy="{_n(cy)}" r="3" fill="#d00000"/>')

    def frame(self, x0, caption):
        self.rect(x0, (Fraction(0),) * self.dim, (Fraction(1),) * self.dim, "none", stroke="#555", opacity="0")
        self.text(x0 + Fraction(SIDE, 2), MARGIN + self.height + 18, caption)

    def label_box(self, x0, los, his, s):
        x, y, w, h = self.box(x0, los, his)
        self.text(x + w / 2, y + h / 2 + 4, s)


def _config_panel(cv, x0, theta: Configuration, caption):
    cv.frame(x0, caption)
    for k, c in enumerate(theta.cubes, start=1):
        cv.rect(x0, c.los, c.his, FILLS[(k - 1) % len(FILLS)])
        cv.label_box(x0, c.los, c.his, str(k))


def _support_panel(cv, x0, sup: Support):
    if sup.rect is None:
        cv.frame(x0, f"{sup.label} = empty")
        return
    los = tuple(iv.lo for iv in sup.rect.intervals)
    his = tuple(iv.hi for iv in sup.rect.intervals)
    bounds = " x ".join(f"[{format_rational(a)},{format_rational(b)}]" for a, b in zip(los, his))
    cv.frame(x0, f"{sup.label} {bounds}")
    if sup.rect.is_point:
        cv.dot(x0, los)
    else:
        cv.rect(x0, los, his, "#6c757d", stroke="#343a40", opacity="0.45", dash="4 2")


def _panels(value):
    """Flatten ``value`` into ``(kind, payload, caption)`` panels."""
    if isinstance(value, Configuration):
        return [("config", value, f"arity {value.arity}")]
    if isinstance(value, LittleCube):
        return [("config", Configuration(value.dim, (value,), validate=False), "cube")]
    if isinstance(value, Frames):
        return [
            ("frame", (c, value.point), f"time {format_rational(t)}")
            for c, t in zip(value.cubes, value.times)
        ]
    if isinstance(value, Support):
        return [("support", value, "")]
    if isinstance(value, Rect):
        return [("support", Support(value, len(value.intervals)), "")]
    if isinstance(value, CnElem):
        return [("support", support_of(value), "")]
    if isinstance(value, (list, tuple)):
        out = []
        for v in value:
            out.extend(_panels(v))
        return out
    raise TypeError(f"cannot render {type(value).__name__}")


def _dim_of(kind, payload):
    if kind == "config":
        return payload.dim
    if kind == "frame":
        return len(payload[1])
    return payload.dim


def svg(value) -> str:
    panels = _panels(value)
    if not panels:
        raise RenderError("nothing to render")
    dims = {_dim_of(k, p) for k, p, _ in panels}
    if len(dims) != 1:
        raise RenderError("all panels must share one dimension")
    (dim,) = dims
    if dim > 2:
        raise RenderError(f"rendering needs n <= 2, got n = {dim}")
    cv = _Canvas(dim)
    for i, (kind, payload, caption) in enumerate(panels):
        x0 = MARGIN + i * (SIDE + GAP)
        if kind == "config":
            _config_panel(cv, x0, payload, caption)
        elif kind == "frame":
            cube, point = payload
            cv.frame(x0, caption)
            cv.rect(x0, cube.los, cube.his, FILLS[0])
            cv.dot(x0, point)
        else:
            _support_panel(cv, x0, payload)
    width = 2 * MARGIN + len(panels) * SIDE + (len(panels) - 1) * GAP
    height = cv.height + 2 * MARGIN + 16
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    )
    body = "\n".join(["  " + p for p in cv.parts])
    return f'{head}\n  <rect width="100%" height="100%" fill="white"/>\n{body}\n</svg>\n'


def render_svg(value, path=None) -> str:
    """Write the SVG for ``value`` to ``path`` (if given) and return it."""
    text = svg(value)
    if path is not None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return text


def value_from_json(data):
    """Renderable value from the ``render`` command's JSON input.

    Accepts a configuration (``{"dim", "cubes"}``), ``{"config": ...}``,
    ``{"cube": ...}``, ``{"expansion": {"c", "p", "times"}}``,
    ``{"elem": term}`` for a shaded support, or a list of these.
    """
    from .codec import elem_from_json

    if isinstance(data, list):
        return [value_from_json(d) for d in data]
    if "cubes" in data:
        return config_from_json(data)
    if "config" in data:
        return config_from_json(data["config"])
    if "cube" in data:
        return cube_from_json(data["cube"])
    if "expansion" in data:
        e = data["expansion"]
        times = e.get("times", ["0", "1/2", "1"])
        p = e["p"] if isinstance(e["p"], list) else [e["p"]]
        return expansion_frames(cube_from_json(e["c"]), p, times)
    if "elem" in data:
        return elem_from_json(data["elem"])
    raise ValueError("unrecognised render input")
