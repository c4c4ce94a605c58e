"""Determinants and the areas and volumes built on them."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import ParseError, ShapeError
from .matrix import Matrix
from .scalar import as_scalar, format_scalar, parse_scalar


@dataclass(frozen=True)
class Point:
    """A labeled point in 2 or 3 dimensions."""

    coords: tuple
    label: Optional[str] = None

    def __post_init__(self):
        coords = tuple(as_scalar(c) for c in self.coords)
        if len(coords) not in (2, 3):
            raise ShapeError(f"points have 2 or 3 coordinates, got {len(coords)}")
        object.__setattr__(self, "coords", coords)

    @property
    def dim(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __add__(self, other):
        return Point(tuple(a + b for a, b in zip(self, _coords(other, self.dim))), self.label)

    def __sub__(self, other):
        return Point(tuple(a - b for a, b in zip(self, _coords(other, self.dim))), self.label)

    def relabel(self, label):
        return Point(self.coords, label)

    def __str__(self):
        return format_point(self)


def _coords(p, dim=None):
    c = p.coords if isinstance(p, Point) else tuple(as_scalar(x) for x in p)
    if dim is not None and len(c) != dim:
        raise ShapeError(f"expected a {dim}D point, got {len(c)} coordinates")
    return c


def parse_point(text: str, label=None) -> Point:
    """Parse ``"(x,y)"`` or ``"(x,y,z)"``; parentheses are optional."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    elif s.startswith("(") or s.endswith(")"):
        raise ParseError(f"unbalanced parentheses in {text!r}")
    parts = s.split(",")
    if len(parts) not in (2, 3):
        raise ParseError(f"expected 2 or 3 coordinates in {text!r}")
    return Point(tuple(parse_scalar(p) for p in parts), label)


def format_point(p) -> str:
    return "(" + ",".join(format_scalar(c) for c in _coords(p)) + ")"


@dataclass(frozen=True)
class MeasureResult:
    kind: str  # "area" or "volume"
    signed_value: Fraction

    @property
    def value(self):
        return abs(self.signed_value)

    def __str__(self):
        return format_scalar(self.value)


def det(a: Matrix):
    """Exact determinant by cofactor expansion along the first row (n <= 4)."""
    if not a.is_square:
        raise ShapeError(f"determinant of non-square {a.shape} matrix")
    if a.nrows > 4:
        raise ShapeError("determinants are limited to order 4")
    return _cofactor(a.rows())


def _cofactor(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = Fraction(0)
    for j, a in enumerate(rows[0]):
        if a == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = a * _cofactor(minor)
        total = total - term if j % 2 else total + term
    return total


def parallelogram_area_from_vectors(u, v) -> MeasureResult:
    """Area spanned by two adjacent side vectors."""
    u, v = _coords(u, 2), _coords(v, 2)
    return MeasureResult("area", det(Matrix([u, v])))


def parallelogram_area_from_vertices(a, b, c) -> MeasureResult:
    """Area of the parallelogram with sides CA and CB, via the bordered 3x3 determinant."""
    rows = [(*_coords(p, 2), 1) for p in (a, b, c)]
    return MeasureResult("area", det(Matrix(rows)))


def triangle_area(a, b, c) -> MeasureResult:
    par = parallelogram_area_from_vertices(a, b, c)
    return MeasureResult("area", par.signed_value / 2)


def parallelepiped_volume(u, v, w) -> MeasureResult:
    return MeasureResult("volume", det(Matrix([_coords(p, 3) for p in (u, v, w)])))


def tetrahedron_volume(a, b, c, d) -> MeasureResult:
    d = _coords(d, 3)
    edges = [[x - y for x, y in zip(_coords(p, 3), d)] for p in (a, b, c)]
    return MeasureResult("volume", det(Matrix(edges)) / 6)
