"""Count preradicals, idempotents, radicals and covers for small path quivers.

    python scripts/lattice_sizes.py --quivers a2 a3 a3:<> a4 --fields 2 3
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass, field

from preradicals.builtins import builtin_quiver
from preradicals.lattice import build_poset
from preradicals.preradical import Category, enumerate_preradicals, is_idempotent, is_radical


@dataclass
class SizesConfig:
    quivers: list[str] = field(default_factory=lambda: ["a1", "a2", "a3", "a3:<>", "a3:><", "a4"])
    fields: list[int] = field(default_factory=lambda: [2, 3])
    # Hasse diagrams are cubic in the node count; larger lattices only get counts.
    max_cover_nodes: int = 200


@dataclass
class Row:
    quiver: str
    p: int
    preradicals: int
    idempotent: int
    radical: int
    covers: int | None
    seconds: float


def measure(name: str, p: int, max_cover_nodes: int) -> Row:
    t0 = time.perf_counter()
    prs = enumerate_preradicals(Category.type_a(builtin_quiver(name), p))
    if len(prs) <= max_cover_nodes:
        h = build_poset(prs)
        idem, rad, ncov = len(h.idempotent), len(h.radical), len(h.covers)
    else:
        idem, rad, ncov = sum(map(is_idempotent, prs)), sum(map(is_radical, prs)), None
    return Row(name, p, len(prs), idem, rad, ncov, round(time.perf_counter() - t0, 3))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--quivers", nargs="+", default=SizesConfig().quivers)
    ap.add_argument("--fields", nargs="+", type=int, default=SizesConfig().fields)
    ap.add_argument("--max-cover-nodes", type=int, default=SizesConfig.max_cover_nodes,
                    help="compute covers only for lattices up to this size")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    cfg = SizesConfig(args.quivers, args.fields, args.max_cover_nodes)

    rows = [measure(q, p, cfg.max_cover_nodes) for q in cfg.quivers for p in cfg.fields]
    if args.json:
        print(json.dumps([asdict(r) for r in rows], indent=2))
        return
    print(f"{'quiver':8} {'p':>2} {'#Pr':>6} {'#idem':>6} {'#rad':>6} {'#covers':>8} {'sec':>7}")
    for r in rows:
        cov = "-" if r.covers is None else str(r.covers)
        print(f"{r.quiver:8} {r.p:>2} {r.preradicals:>6} {r.idempotent:>6} {r.radical:>6} {cov:>8} {r.seconds:>7.3f}")


if __name__ == "__main__":
    main()
