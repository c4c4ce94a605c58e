"""Render every scene file to SVG and print its measurements.

    python scripts/render_figures.py [--scenes scenes] [--out figures]
"""

import argparse
from pathlib import Path

from linapps.render import render_scene
from linapps.scalar import format_scalar
from linapps.scene import parse_scene

ROOT = Path(__file__).resolve().parent.parent


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--scenes", type=Path, default=ROOT / "scenes")
    ap.add_argument("--out", type=Path, default=ROOT / "figures")
    args = ap.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    for path in sorted(args.scenes.glob("*.scene")):
        text = path.read_text()
        target = args.out / (path.stem + ".svg")
        target.write_text(render_scene(text))
        notes = [
            f"{d.kind} {d.name} = {format_scalar(r.value)}"
            for d, r in parse_scene(text).measurements()
        ]
        print(f"{path.name:32s} -> {target.name}  {'; '.join(notes)}")


if __name__ == "__main__":
    main()
