"""Line-oriented scene descriptions.

One directive per line, ``#`` starts a comment::

    dim 2
    polygon P A(1,1) B(2,3) C(4,3) D(5,1)
    translate P by (3,2) as Q
    measure area P
    render P Q

Points may carry a label prefix (``A(1,1)``).  Polytope edges are given as
1-based vertex index pairs (``edges 1-2,2-3``); without an ``edges`` clause
every pair of vertices is joined.  Objects produced by a transform get their
vertex labels primed.
"""

import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .errors import LinappsError, ParseError
from .geometry import (
    MeasureResult,
    Point,
    parallelepiped_volume,
    parallelogram_area_from_vertices,
    tetrahedron_volume,
    triangle_area,
)
from .scalar import format_scalar, parse_scalar
from .transforms import (
    Polytope,
    ReflectionXY,
    Rotation,
    Transform,
    Translation,
    apply_polytope,
    format_angle,
    parse_angle,
)

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_TOKEN = re.compile(r"[A-Za-z_][A-Za-z0-9_']*\([^)]*\)|\([^)]*\)|\S+")
_POINT = re.compile(r"([A-Za-z_][A-Za-z0-9_']*)?\(([^)]*)\)")


@dataclass(frozen=True)
class SceneObject:
    kind: str  # "point", "polygon" or "polytope"
    shape: Polytope
    derived: bool = False


@dataclass(frozen=True)
class TransformDirective:
    source: str
    transform: Transform
    target: str


@dataclass(frozen=True)
class MeasureDirective:
    kind: str  # "area" or "volume"
    name: str


@dataclass(frozen=True)
class RenderDirective:
    names: tuple


@dataclass
class Scene:
    dimension: Optional[int] = None
    objects: dict = field(default_factory=dict)
    directives: list = field(default_factory=list)

    def rendered_names(self):
        """Objects named by render directives, or every object if there are none."""
        names = [n for d in self.directives if isinstance(d, RenderDirective) for n in d.names]
        if not any(isinstance(d, RenderDirective) for d in self.directives):
            names = list(self.objects)
        return list(dict.fromkeys(names))

    def measurements(self):
        """[(directive, MeasureResult)] in directive order."""
        return [
            (d, measure(self.objects[d.name], d.kind))
            for d in self.directives
            if isinstance(d, MeasureDirective)
        ]


def _parse_point_token(tok, lineno):
    m = _POINT.fullmatch(tok)
    if not m:
        raise ParseError(f"expected a point like (x,y), got {tok!r}", lineno)
    parts = [p.strip() for p in m.group(2).split(",")]
    if len(parts) not in (2, 3):
        raise ParseError(f"points need 2 or 3 coordinates: {tok!r}", lineno)
    try:
        coords = tuple(parse_scalar(p) for p in parts)
    except (ParseError, ZeroDivisionError) as exc:
        raise ParseError(f"bad number in {tok!r}: {exc}", lineno) from None
    return Point(coords, m.group(1))


def _parse_vector_token(tok, lineno):
    m = _POINT.fullmatch(tok)
    if not m or m.group(1):
        raise ParseError(f"expected a vector like (p,q), got {tok!r}", lineno)
    try:
        return tuple(parse_scalar(p.strip()) for p in m.group(2).split(","))
    except (ParseError, ZeroDivisionError) as exc:
        raise ParseError(f"bad number in {tok!r}: {exc}", lineno) from None


def _parse_edges(spec, n, lineno):
    edges = []
    for item in spec.split(","):
        m = re.fullmatch(r"(\d+)-(\d+)", item.strip())
        if not m:
            raise ParseError(f"malformed edge {item!r}", lineno)
        i, j = int(m.group(1)) - 1, int(m.group(2)) - 1
        if not (0 <= i < n and 0 <= j < n) or i == j:
            raise ParseError(f"edge {item!r} does not join two distinct vertices 1..{n}", lineno)
        edges.append((i, j))
    return tuple(edges)


def _prime(shape):
    verts = tuple(v.relabel(v.label + "'") if v.label else v for v in shape.vertices)
    return Polytope(shape.dimension, verts, shape.edges)


def measure(obj: SceneObject, kind: str) -> MeasureResult:
    """Area of a triangle/parallelogram or volume of a tetrahedron/parallelepiped."""
    v = obj.shape.vertices
    if kind == "area":
        if obj.kind != "polygon":
            raise LinappsError("area is measured on polygons")
        if len(v) == 3:
            return triangle_area(*v)
        if len(v) == 4 and _is_parallelogram(v):
            # sides from v[0] to its neighbours v[1] and v[3]
            return parallelogram_area_from_vertices(v[1], v[3], v[0])
        raise LinappsError("area is supported for triangles and parallelograms")
    if kind == "volume":
        if obj.kind != "polytope":
            raise LinappsError("volume is measured on polytopes")
        if len(v) == 4:
            return tetrahedron_volume(*v)
        if len(v) == 8:
            edges = _parallelepiped_edges(obj.shape)
            if edges is not None:
                return parallelepiped_volume(*edges)
        raise LinappsError("volume is supported for tetrahedra and parallelepipeds")
    raise LinappsError(f"unknown measure {kind!r}")


def _is_parallelogram(v):
    return all(a + c == b + d for a, b, c, d in zip(*(p.coords for p in v)))


def _parallelepiped_edges(shape):
    """Edge vectors at vertex 1 if the 8 vertices form a parallelepiped."""
    v = [p.coords for p in shape.vertices]
    nbrs = [j for i, j in shape.edges if i == 0] + [i for i, j in shape.edges if j == 0]
    if len(nbrs) != 3:
        return None
    e = [tuple(a - b for a, b in zip(v[j], v[0])) for j in nbrs]
    expected = set()
    for a in (0, 1):
        for b in (0, 1):
            for c in (0, 1):
                expected.add(tuple(o + a * x + b * y + c * z for o, x, y, z in zip(v[0], *e)))
    return e if expected == set(v) else None


def parse_scene(text: str) -> Scene:
    scene = Scene()

    def need_dim(d, lineno):
        if scene.dimension is None:
            scene.dimension = d
        elif scene.dimension != d:
            raise ParseError(f"{d}D object in a {scene.dimension}D scene", lineno)

    def new_name(name, lineno):
        if not _NAME.fullmatch(name):
            raise ParseError(f"invalid object name {name!r}", lineno)
        if name in scene.objects:
            raise ParseError(f"object {name!r} already defined", lineno)
        return name

    def lookup(name, lineno):
        if name not in scene.objects:
            raise ParseError(f"undefined object {name!r}", lineno)
        return scene.objects[name]

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = _TOKEN.findall(line)
        kw, args = toks[0], toks[1:]

        if kw == "dim":
            if len(args) != 1 or args[0] not in ("2", "3"):
                raise ParseError("usage: dim 2|3", lineno)
            if scene.objects or scene.dimension is not None:
                raise ParseError("dim must come first and only once", lineno)
            scene.dimension = int(args[0])

        elif kw in ("point", "polygon", "polytope"):
            if len(args) < 2:
                raise ParseError(f"usage: {kw} NAME (x,y) ...", lineno)
            name = new_name(args[0], lineno)
            rest = args[1:]
            edges = None
            if kw == "polytope" and "edges" in rest:
                k = rest.index("edges")
                if k != len(rest) - 2:
                    raise ParseError("usage: polytope NAME (x,y,z) ... edges i-j,...", lineno)
                edges, rest = rest[k + 1], rest[:k]
            pts = [_parse_point_token(t, lineno) for t in rest]
            if not pts:
                raise ParseError(f"{kw} {name} has no vertices", lineno)
            dims = {p.dim for p in pts}
            if len(dims) != 1:
                raise ParseError("mixed 2D and 3D coordinates", lineno)
            d = dims.pop()
            if kw == "polygon" and d != 2:
                raise ParseError("polygons are 2D; use polytope", lineno)
            if kw == "polytope" and d != 3:
                raise ParseError("polytopes are 3D; use polygon", lineno)
            need_dim(d, lineno)
            if kw == "polygon":
                shape = Polytope.polygon(pts)
            elif kw == "polytope":
                e = (
                    _parse_edges(edges, len(pts), lineno)
                    if edges is not None
                    else tuple(combinations(range(len(pts)), 2))
                )
                shape = Polytope(3, tuple(pts), e)
            else:
                shape = Polytope(d, tuple(pts), ())
            scene.objects[name] = SceneObject(kw, shape)

        elif kw in ("translate", "rotate"):
            if args:
                lookup(args[0], lineno)
            if len(args) != 5 or args[1] != "by" or args[3] != "as":
                raise ParseError(f"usage: {kw} SRC by ... as DST", lineno)
            src = lookup(args[0], lineno)
            dim = src.shape.dimension
            if kw == "translate":
                vec = _parse_vector_token(args[2], lineno)
                if len(vec) != dim:
                    raise ParseError(f"{len(vec)}-component vector in a {dim}D scene", lineno)
                t = Translation(vec)
            else:
                try:
                    t = parse_angle(args[2], dim)
                except ParseError as exc:
                    raise ParseError(str(exc), lineno) from None
            dst = new_name(args[4], lineno)
            scene.objects[dst] = SceneObject(src.kind, _prime(apply_polytope(t, src.shape)), True)
            scene.directives.append(TransformDirective(args[0], t, dst))

        elif kw == "reflectxy":
            if args:
                lookup(args[0], lineno)
            if len(args) != 3 or args[1] != "as":
                raise ParseError("usage: reflectxy SRC as DST", lineno)
            src = lookup(args[0], lineno)
            if src.shape.dimension != 3:
                raise ParseError("reflectxy needs a 3D object", lineno)
            t = ReflectionXY()
            dst = new_name(args[2], lineno)
            scene.objects[dst] = SceneObject(src.kind, _prime(apply_polytope(t, src.shape)), True)
            scene.directives.append(TransformDirective(args[0], t, dst))

        elif kw == "measure":
            if len(args) != 2 or args[0] not in ("area", "volume"):
                raise ParseError("usage: measure area|volume NAME", lineno)
            obj = lookup(args[1], lineno)
            try:
                measure(obj, args[0])
            except LinappsError as exc:
                raise ParseError(str(exc), lineno) from None
            scene.directives.append(MeasureDirective(args[0], args[1]))

        elif kw == "render":
            if not args:
                raise ParseError("usage: render NAME ...", lineno)
            for n in args:
                lookup(n, lineno)
            scene.directives.append(RenderDirective(tuple(args)))

        else:
            raise ParseError(f"unknown keyword {kw!r}", lineno)
    return scene


def _fmt_point(p):
    return (p.label or "") + "(" + ",".join(format_scalar(c) for c in p.coords) + ")"


def serialize_scene(scene: Scene) -> str:
    """Scene text that parses back to an equal Scene."""
    lines = []
    if scene.dimension is not None:
        lines.append(f"dim {scene.dimension}")
    for name, obj in scene.objects.items():
        if obj.derived:
            continue
        pts = " ".join(_fmt_point(p) for p in obj.shape.vertices)
        line = f"{obj.kind} {name} {pts}"
        if obj.kind == "polytope":
            line += " edges " + ",".join(f"{i + 1}-{j + 1}" for i, j in obj.shape.edges)
        lines.append(line)
    for d in scene.directives:
        if isinstance(d, TransformDirective):
            t = d.transform
            if isinstance(t, Translation):
                vec = "(" + ",".join(format_scalar(x) for x in t.offset) + ")"
                lines.append(f"translate {d.source} by {vec} as {d.target}")
            elif isinstance(t, Rotation):
                lines.append(f"rotate {d.source} by {format_angle(t)} as {d.target}")
            else:
                lines.append(f"reflectxy {d.source} as {d.target}")
        elif isinstance(d, MeasureDirective):
            lines.append(f"measure {d.kind} {d.name}")
        else:
            lines.append("render " + " ".join(d.names))
    return "\n".join(lines) + "\n"
