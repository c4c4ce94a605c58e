"""Command-line interface.

Every subcommand is exact by default; ``--float`` switches reports to
decimals rounded to ``--precision`` places.  Exit status is 0 on success,
1 on bad input and 2 when no feasible (or exact) answer exists.
"""

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import geometry
from .eigen import char_poly, eigenpairs, float_eigenvalues
from .errors import ExactnessUnavailableError, InfeasibleError, LinappsError
from .geometry import format_point, parse_point
from .invest import (
    build_transition,
    evolve,
    model_from_transition,
    optimal_allocation,
    sectors_from_factors,
)
from .matrix import format_matrix, mat_mul, parse_matrix
from .render import emit_svg, layout_project
from .scalar import format_decimal, format_scalar, parse_scalar
from .scene import parse_scene
from .transforms import ReflectionXY, Translation, apply, parse_angle, parse_vector


@dataclass(frozen=True)
class CliConfig:
    mode: str = "exact"  # or "float"
    precision: int = 2
    output: Optional[str] = None

    def __post_init__(self):
        if self.precision < 0:
            raise ValueError("precision must be >= 0")

    def fmt(self, x):
        if isinstance(x, complex):
            sign = "+" if x.imag >= 0 else "-"
            return f"{self.fmt(x.real)}{sign}{self.fmt(abs(x.imag))}i"
        if self.mode == "float":
            return format_decimal(x, self.precision)
        return format_scalar(x)

    def fmt_matrix(self, m):
        if self.mode == "exact":
            return format_matrix(m)
        return ";".join(",".join(self.fmt(x) for x in r) for r in m.rows())

    def fmt_point(self, p):
        if self.mode == "exact":
            return format_point(p)
        return "(" + ",".join(self.fmt(x) for x in p) + ")"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _points(texts):
    return [parse_point(t) for t in texts]


def cmd_matmul(args, cfg):
    product = parse_matrix(args.a)
    for text in args.b:
        product = mat_mul(product, parse_matrix(text))
    return [cfg.fmt_matrix(product)]


def cmd_det(args, cfg):
    return [cfg.fmt(geometry.det(parse_matrix(args.matrix)))]


def _measure(result, args, cfg):
    return [cfg.fmt(result.signed_value if args.signed else result.value)]


def cmd_area(args, cfg):
    pts = _points(args.points)
    if args.shape == "triangle":
        if len(pts) != 3:
            raise UsageError("triangle area needs three vertices")
        return _measure(geometry.triangle_area(*pts), args, cfg)
    how = args.how or ("vectors" if len(pts) == 2 else "vertices")
    if how == "vectors" and len(pts) == 2:
        return _measure(geometry.parallelogram_area_from_vectors(*pts), args, cfg)
    if how == "vertices" and len(pts) == 3:
        return _measure(geometry.parallelogram_area_from_vertices(*pts), args, cfg)
    raise UsageError("parallelogram area needs two side vectors or three vertices")


def cmd_volume(args, cfg):
    return _measure(geometry.parallelepiped_volume(*_points(args.vectors)), args, cfg)


def cmd_tetvolume(args, cfg):
    return _measure(geometry.tetrahedron_volume(*_points(args.vertices)), args, cfg)


def cmd_eigen(args, cfg):
    a = parse_matrix(args.matrix)
    lines = [f"characteristic polynomial: {char_poly(a)}"]
    if cfg.mode == "float":
        for root in float_eigenvalues(a):
            lines.append(f"eigenvalue {cfg.fmt(root.value)}")
        return lines
    for pair in eigenpairs(a):
        tag = "" if pair.exact else " (approximate)"
        basis = " ".join("(" + ",".join(cfg.fmt(x) for x in v) + ")" for v in pair.basis)
        lines.append(
            f"eigenvalue {cfg.fmt(pair.eigenvalue)}{tag} "
            f"[multiplicity {pair.algebraic_multiplicity}]: {basis}"
        )
    return lines


def cmd_invest(args, cfg):
    names = args.names.split(",") if args.names else None
    if args.transition:
        model = model_from_transition(parse_matrix(args.transition), names)
    else:
        factors = [parse_scalar(t) for t in args.growth.split(",")]
        model = build_transition(sectors_from_factors(factors, names))
    alloc = optimal_allocation(model, parse_scalar(args.budget))
    after = evolve(model, alloc.amounts, args.years)
    lines = [
        f"{s.name}: {cfg.fmt(x)} → {cfg.fmt(y)}"
        for s, x, y in zip(model.sectors, alloc.amounts, after)
    ]
    lines.append(f"growth rate: {format_scalar(alloc.growth_rate)} per year")
    return lines


def cmd_transform(args, cfg):
    pts = _points(args.points)
    dims = {p.dim for p in pts}
    if len(dims) != 1:
        raise UsageError("all points must have the same dimension")
    dim = dims.pop()
    if args.kind == "translate":
        if args.by is None:
            raise UsageError("translate needs --by (p,q[,r])")
        t = Translation(parse_vector(args.by))
    elif args.kind == "rotate":
        t = parse_angle(args.angle, dim)
    else:
        t = ReflectionXY()
    return [cfg.fmt_point(apply(t, p)) for p in pts]


def cmd_render(args, cfg):
    scene = parse_scene(Path(args.scene).read_text())
    fig = layout_project(scene)
    svg = emit_svg(fig)
    notes = fig.comments
    if cfg.output:
        Path(cfg.output).write_text(svg)
        return notes
    sys.stdout.write(svg)
    for n in notes:
        print(n, file=sys.stderr)
    return []


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--float", dest="mode", action="store_const", const="float",
                        default="exact", help="decimal output instead of exact fractions")
    common.add_argument("--precision", type=int, default=2, help="decimal places for --float")

    parser = _Parser(prog="linapps", description="Exact linear algebra and geometry toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("matmul", parents=[common], help="matrix product")
    p.add_argument("a", help='matrix literal, e.g. "1,2;3,4"')
    p.add_argument("b", nargs="+")
    p.set_defaults(func=cmd_matmul)

    p = sub.add_parser("det", parents=[common], help="determinant (order <= 4)")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("area", parents=[common], help="triangle or parallelogram area")
    p.add_argument("shape", choices=["triangle", "parallelogram"])
    g = p.add_mutually_exclusive_group()
    g.add_argument("--vectors", dest="how", action="store_const", const="vectors")
    g.add_argument("--vertices", dest="how", action="store_const", const="vertices")
    p.add_argument("--signed", action="store_true")
    p.add_argument("points", nargs="+")
    p.set_defaults(func=cmd_area)

    p = sub.add_parser("volume", parents=[common], help="parallelepiped volume from three edge vectors")
    p.add_argument("--signed", action="store_true")
    p.add_argument("vectors", nargs=3)
    p.set_defaults(func=cmd_volume)

    p = sub.add_parser("tetvolume", parents=[common], help="tetrahedron volume from four vertices")
    p.add_argument("--signed", action="store_true")
    p.add_argument("vertices", nargs=4)
    p.set_defaults(func=cmd_tetvolume)

    p = sub.add_parser("eigen", parents=[common], help="eigenvalues and eigenspaces (order 1-3)")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_eigen)

    p = sub.add_parser("invest", parents=[common], help="proportional-growth investment allocation")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--growth", help="growth factors, e.g. 4,2,2/3")
    g.add_argument("--transition", help="explicit transition matrix instead of growth factors")
    p.add_argument("--budget", required=True)
    p.add_argument("--years", type=int, default=1)
    p.add_argument("--names", help="sector names, default A,B,C,...")
    p.set_defaults(func=cmd_invest)

    p = sub.add_parser("transform", parents=[common], help="translate, rotate or reflect points")
    p.add_argument("kind", choices=["translate", "rotate", "reflectxy"])
    p.add_argument("--by", help="translation vector (p,q[,r])")
    p.add_argument("--angle", default="0", help="0, pi/2, pi, 3pi/2 or radians")
    p.add_argument("points", nargs="+")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("render", parents=[common], help="render a scene file to SVG")
    p.add_argument("scene")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_render)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = CliConfig(args.mode, args.precision, getattr(args, "output", None))
        if args.command == "invest" and args.years < 0:
            raise UsageError("--years must be >= 0")
        lines = args.func(args, cfg)
    except SystemExit as exc:  # --help
        return 0 if exc.code in (0, None) else 1
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except (InfeasibleError, ExactnessUnavailableError) as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 2
    except (LinappsError, ValueError, ZeroDivisionError, IndexError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for line in lines:
        print(line)
    return 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
