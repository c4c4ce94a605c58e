"""Exact linear algebra for small matrices: products, areas and volumes,
eigenvalues, a growth-optimal investment model, rigid transforms, and a
scene language rendered to SVG."""

from .eigen import char_poly, eigenpairs, eigenspace, numeric_roots, rational_roots
from .errors import (
    DomainError,
    ExactnessUnavailableError,
    InfeasibleError,
    InvalidOperationError,
    LinappsError,
    NotAnEigenvalueError,
    ParseError,
    ShapeError,
)
from .geometry import (
    Point,
    det,
    parallelepiped_volume,
    parallelogram_area_from_vectors,
    parallelogram_area_from_vertices,
    tetrahedron_volume,
    triangle_area,
)
from .invest import build_transition, evolve, optimal_allocation, sectors_from_factors
from .matrix import Matrix, mat_mul, row_replace, transpose
from .render import render_scene
from .scene import parse_scene, serialize_scene
from .transforms import ReflectionXY, Rotation, Translation, apply, compose

__version__ = "0.1.0"
