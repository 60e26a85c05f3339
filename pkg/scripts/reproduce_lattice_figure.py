"""Render the A2 preradical lattice, its idempotent part and the dual lattice.

Writes DOT files (and PNG/SVG when graphviz's ``dot`` is on PATH) to --out.
"""

import argparse
import shutil
import subprocess
from dataclasses import dataclass
from pathlib import Path

from preradicals.builtins import load_quiver
from preradicals.lattice import build_poset, sublattice, to_dot, to_table
from preradicals.preradical import Category, enumerate_preradicals


@dataclass
class FigureConfig:
    quiver: str = "a2"
    p: int = 2
    out: Path = Path("figures")
    image_format: str = "svg"


def lattices(cfg: FigureConfig) -> dict:
    C = Category.type_a(load_quiver(cfg.quiver), cfg.p)
    h = build_poset(enumerate_preradicals(C))
    h_op = build_poset(enumerate_preradicals(C.opposite()))
    return {
        "lattice": h,
        "idempotent": sublattice(h, "idempotent"),
        "radical": sublattice(h, "radical"),
        "opposite": h_op,
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--quiver", default=FigureConfig.quiver)
    ap.add_argument("--field", type=int, default=FigureConfig.p)
    ap.add_argument("--out", type=Path, default=FigureConfig.out)
    ap.add_argument("--image-format", default=FigureConfig.image_format, choices=("svg", "png", "pdf"))
    args = ap.parse_args()
    cfg = FigureConfig(args.quiver, args.field, args.out, args.image_format)

    cfg.out.mkdir(parents=True, exist_ok=True)
    dot_bin = shutil.which("dot")
    for name, h in lattices(cfg).items():
        path = cfg.out / f"{name}.dot"
        path.write_text(to_dot(h))
        print(f"== {name}: {len(h)} nodes, {len(h.covers)} covers -> {path}")
        print(to_table(h))
        if dot_bin:
            img = path.with_suffix("." + cfg.image_format)
            subprocess.run([dot_bin, f"-T{cfg.image_format}", str(path), "-o", str(img)], check=True)
    if not dot_bin:
        print("graphviz not found; only DOT files were written")


if __name__ == "__main__":
    main()
