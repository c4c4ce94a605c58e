"""Translations, rotations and the xy-plane reflection in 2D and 3D.

Rotations by a multiple of pi/2 are stored as a quarter-turn count and use an
integer cos/sin table, so they never leave exact arithmetic.  Any other angle
is kept in float radians.  3D rotations are about the z-axis.
"""

import math
import re
from dataclasses import dataclass
from typing import Optional

from .errors import ParseError, ShapeError
from .geometry import Point
from .matrix import Matrix
from .scalar import as_scalar, format_scalar, parse_scalar

# (cos, sin) for 0, pi/2, pi, 3pi/2
_QUARTER = ((1, 0), (0, 1), (-1, 0), (0, -1))


class Transform:
    dim: int

    def __call__(self, p):
        return apply(self, p)


@dataclass(frozen=True)
class Translation(Transform):
    offset: tuple

    def __post_init__(self):
        off = tuple(as_scalar(x) for x in self.offset)
        if len(off) not in (2, 3):
            raise ShapeError("translation vector needs 2 or 3 components")
        object.__setattr__(self, "offset", off)

    @property
    def dim(self):
        return len(self.offset)


@dataclass(frozen=True)
class Rotation(Transform):
    """Counter-clockwise rotation; in 3D, about the z-axis."""

    dim: int = 2
    quarter_turns: Optional[int] = 0
    radians: Optional[float] = None

    def __post_init__(self):
        if self.dim not in (2, 3):
            raise ShapeError("rotations are 2D or 3D")
        if self.radians is None:
            object.__setattr__(self, "quarter_turns", self.quarter_turns % 4)
        else:
            object.__setattr__(self, "quarter_turns", None)
            object.__setattr__(self, "radians", float(self.radians))

    @classmethod
    def quarter(cls, k, dim=2):
        return cls(dim, k % 4, None)

    @classmethod
    def by_radians(cls, theta, dim=2):
        return cls(dim, None, theta)

    @property
    def exact(self):
        return self.quarter_turns is not None

    @property
    def angle(self):
        if self.exact:
            return self.quarter_turns * math.pi / 2
        return self.radians

    def cos_sin(self):
        if self.exact:
            return _QUARTER[self.quarter_turns]
        return math.cos(self.radians), math.sin(self.radians)


@dataclass(frozen=True)
class ReflectionXY(Transform):
    """s(x, y, z) = (x, y, -z)."""

    @property
    def dim(self):
        return 3


@dataclass(frozen=True)
class Composite(Transform):
    """outer after inner."""

    outer: Transform
    inner: Transform

    @property
    def dim(self):
        return self.outer.dim


def parse_angle(text: str, dim=2) -> Rotation:
    """``0``, ``pi/2``, ``pi``, ``3pi/2`` (any k*pi/d) or plain float radians."""
    s = text.strip().replace(" ", "").replace("*", "")
    m = re.fullmatch(r"([+-]?\d*)pi(?:/(\d+))?", s)
    if m:
        k = m.group(1)
        k = 1 if k in ("", "+") else -1 if k == "-" else int(k)
        d = int(m.group(2) or 1)
        if d == 0:
            raise ParseError(f"zero divisor in angle {text!r}")
        if (2 * k) % d == 0:
            return Rotation.quarter(2 * k // d, dim)
        return Rotation.by_radians(k * math.pi / d, dim)
    try:
        theta = float(s)
    except ValueError:
        raise ParseError(f"malformed angle {text!r}") from None
    if theta == 0:
        return Rotation.quarter(0, dim)
    return Rotation.by_radians(theta, dim)


def format_angle(r: Rotation) -> str:
    if r.exact:
        return ("0", "pi/2", "pi", "3pi/2")[r.quarter_turns]
    return repr(r.radians)


def apply(t: Transform, p):
    """Image of a point; the label is kept."""
    if not isinstance(p, Point):
        p = Point(tuple(p))
    if p.dim != t.dim:
        raise ShapeError(f"{t.dim}D transform applied to a {p.dim}D point")
    c = p.coords
    if isinstance(t, Translation):
        out = tuple(x + d for x, d in zip(c, t.offset))
    elif isinstance(t, Rotation):
        cos, sin = t.cos_sin()
        x, y = c[0], c[1]
        out = (x * cos - y * sin, x * sin + y * cos) + c[2:]
    elif isinstance(t, ReflectionXY):
        out = (c[0], c[1], -c[2])
    elif isinstance(t, Composite):
        return apply(t.outer, apply(t.inner, p))
    else:
        raise TypeError(f"unknown transform {t!r}")
    return Point(out, p.label)


def apply2(t: Transform, p) -> Point:
    if t.dim != 2:
        raise ShapeError("apply2 needs a 2D transform")
    return apply(t, p)


def apply3(t: Transform, p) -> Point:
    if t.dim != 3:
        raise ShapeError("apply3 needs a 3D transform")
    return apply(t, p)


def compose(outer: Transform, inner: Transform) -> Transform:
    """Transform equivalent to applying ``inner`` then ``outer``."""
    if outer.dim != inner.dim:
        raise ShapeError(f"cannot compose {outer.dim}D with {inner.dim}D")
    if isinstance(outer, Translation) and isinstance(inner, Translation):
        return Translation(tuple(a + b for a, b in zip(outer.offset, inner.offset)))
    if isinstance(outer, Rotation) and isinstance(inner, Rotation):
        if outer.exact and inner.exact:
            return Rotation.quarter(outer.quarter_turns + inner.quarter_turns, outer.dim)
        return Rotation.by_radians(outer.angle + inner.angle, outer.dim)
    return Composite(outer, inner)


def linear_part(t: Transform):
    """Matrix of the linear part (exact Matrix unless a float rotation is involved)."""
    n = t.dim
    if isinstance(t, Translation):
        return Matrix.identity(n)
    if isinstance(t, ReflectionXY):
        return Matrix([[1, 0, 0], [0, 1, 0], [0, 0, -1]])
    if isinstance(t, Rotation):
        cos, sin = t.cos_sin()
        rows = [[cos, -sin], [sin, cos]]
        if n == 3:
            rows = [rows[0] + [0], rows[1] + [0], [0, 0, 1]]
        if t.exact:
            return Matrix(rows)
        return tuple(tuple(float(x) for x in r) for r in rows)
    if isinstance(t, Composite):
        a, b = linear_part(t.outer), linear_part(t.inner)
        if isinstance(a, Matrix) and isinstance(b, Matrix):
            return a @ b
        a = a.rows() if isinstance(a, Matrix) else a
        b = b.rows() if isinstance(b, Matrix) else b
        return tuple(
            tuple(sum(float(a[i][k]) * float(b[k][j]) for k in range(n)) for j in range(n))
            for i in range(n)
        )
    raise TypeError(f"unknown transform {t!r}")


@dataclass(frozen=True)
class Polytope:
    """Labeled vertices plus an edge list of index pairs."""

    dimension: int
    vertices: tuple
    edges: tuple = ()

    def __post_init__(self):
        verts = tuple(v if isinstance(v, Point) else Point(tuple(v)) for v in self.vertices)
        if self.dimension not in (2, 3):
            raise ShapeError("polytopes are 2D or 3D")
        if any(v.dim != self.dimension for v in verts):
            raise ShapeError("vertex dimension does not match the polytope")
        edges = tuple((int(i), int(j)) for i, j in self.edges)
        for i, j in edges:
            if i == j:
                raise ShapeError(f"self-loop edge {i}-{j}")
            if not (0 <= i < len(verts) and 0 <= j < len(verts)):
                raise ShapeError(f"edge {i}-{j} out of range")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", edges)

    @classmethod
    def polygon(cls, points):
        """Closed 2D polygon: consecutive vertices joined, last back to first."""
        pts = tuple(p if isinstance(p, Point) else Point(tuple(p)) for p in points)
        n = len(pts)
        edges = tuple((i, (i + 1) % n) for i in range(n)) if n > 2 else ((0, 1),) if n == 2 else ()
        return cls(2, pts, edges)


def apply_polytope(t: Transform, shape: Polytope) -> Polytope:
    if t.dim != shape.dimension:
        raise ShapeError(f"{t.dim}D transform applied to a {shape.dimension}D shape")
    return Polytope(shape.dimension, tuple(apply(t, v) for v in shape.vertices), shape.edges)


def parse_vector(text: str) -> tuple:
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    try:
        return tuple(parse_scalar(x) for x in s.split(","))
    except ParseError:
        raise ParseError(f"malformed vector {text!r}") from None


def format_transform(t: Transform) -> str:
    if isinstance(t, Translation):
        return "translate (" + ",".join(format_scalar(x) for x in t.offset) + ")"
    if isinstance(t, Rotation):
        return f"rotate {format_angle(t)}"
    if isinstance(t, ReflectionXY):
        return "reflectxy"
    return f"{format_transform(t.outer)} after {format_transform(t.inner)}"
