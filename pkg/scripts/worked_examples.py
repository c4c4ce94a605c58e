"""Walk through the standard worked examples and print each result next to
the value it should have."""

from fractions import Fraction as F

from linapps import (
    Matrix,
    ReflectionXY,
    Rotation,
    Translation,
    apply,
    build_transition,
    char_poly,
    eigenpairs,
    evolve,
    mat_mul,
    optimal_allocation,
    parallelepiped_volume,
    parallelogram_area_from_vectors,
    parallelogram_area_from_vertices,
    row_replace,
    sectors_from_factors,
    tetrahedron_volume,
    triangle_area,
)
from linapps.matrix import format_matrix
from linapps.scalar import format_scalar


def _fmt(x):
    if isinstance(x, (tuple, list)):
        return "(" + ", ".join(_fmt(v) for v in x) + ")"
    return format_scalar(x) if isinstance(x, (int, F)) else str(x)


def show(label, got, want):
    mark = "ok " if got == want else "!! "
    print(f"{mark}{label}: {_fmt(got)}" + ("" if got == want else f"  (expected {_fmt(want)})"))


def products():
    print("== training plan x calorie table")
    a = Matrix([[30, 20, 100], [25, 30, 60], [20, 45, 55]])
    m = Matrix([["10.1", "9.2", "12.2"], ["7.2", "6.5", "8.7"], ["5.3", "4.6", "6.4"]])
    c = mat_mul(a, m)
    print(format_matrix(c))
    show("diagonal", c.diagonal(), (977, 701, F("987.5")))
    show("entry (2,3)", c[1, 2], 950)


def areas_and_volumes():
    print("== areas and volumes")
    show("parallelogram (1,5),(6,2)", parallelogram_area_from_vectors((1, 5), (6, 2)).value, 28)
    show("sheared (4,6),(6,2)", parallelogram_area_from_vectors((4, 6), (6, 2)).value, 28)
    show("translated to (1,1)", parallelogram_area_from_vertices((2, 6), (7, 3), (1, 1)).value, 28)
    show("triangle", triangle_area((1, 5), (6, 2), (7, 7)).value, 14)
    box = Matrix([[1, 5, 0], [6, 2, 0], [3, 2, 4]])
    show("parallelepiped", parallelepiped_volume(*box.rows()).value, 112)
    show("after R3 + 2 R1", parallelepiped_volume(*row_replace(box, 3, 1, 2).rows()).value, 112)
    show("tetrahedron", tetrahedron_volume((1, 5, 0), (6, 2, 0), (3, 2, 4), (0, 0, 0)).value, F(56, 3))


def investment():
    print("== three-sector investment")
    model = build_transition(sectors_from_factors([4, 2, F(2, 3)]))
    print(format_matrix(model.transition))
    print("p(x) =", char_poly(model.transition).format("x"))
    for pair in eigenpairs(model.transition):
        basis = ", ".join(str(tuple(format_scalar(x) for x in v)) for v in pair.basis)
        print(f"   eigenvalue {format_scalar(pair.eigenvalue)}: {basis}")
    alloc = optimal_allocation(model, 4200)
    show("allocation", alloc.amounts, (1500, 1500, 1200))
    show("growth rate", alloc.growth_rate, F(7, 3))
    show("after one year", evolve(model, alloc.amounts, 1), (3500, 3500, 2800))


def transforms():
    print("== transforms")
    quad = [(1, 1), (2, 3), (4, 3), (5, 1)]
    tet = [(1, 5, 0), (6, 2, 0), (3, 2, 4), (0, 0, 0)]
    cases = [
        ("translate by (3,2)", Translation((3, 2)), quad, [(4, 3), (5, 5), (7, 5), (8, 3)]),
        ("rotate by pi/2", Rotation.quarter(1), quad, [(-1, 1), (-3, 2), (-3, 4), (-1, 5)]),
        ("translate by (4,3,-2)", Translation((4, 3, -2)), tet,
         [(5, 8, -2), (10, 5, -2), (7, 5, 2), (4, 3, -2)]),
        ("rotate about z by pi/2", Rotation.quarter(1, 3), tet,
         [(-5, 1, 0), (-2, 6, 0), (-2, 3, 4), (0, 0, 0)]),
        ("reflect in xy", ReflectionXY(), tet, [(1, 5, 0), (6, 2, 0), (3, 2, -4), (0, 0, 0)]),
    ]
    for label, t, pts, want in cases:
        show(label, [apply(t, p).coords for p in pts], want)


if __name__ == "__main__":
    products()
    areas_and_volumes()
    investment()
    transforms()
