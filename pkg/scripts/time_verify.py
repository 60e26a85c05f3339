"""Time each verification suite separately on a list of quivers.

    python scripts/time_verify.py --quivers a2 a3 --field 2
"""

import argparse
import json
from dataclasses import dataclass, field

from preradicals.builtins import builtin_quiver
from preradicals.verify import SUITES, run_suite


@dataclass
class TimingConfig:
    quivers: list[str] = field(default_factory=lambda: ["a2", "a3"])
    p: int = 2
    suites: tuple[str, ...] = SUITES


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--quivers", nargs="+", default=TimingConfig().quivers)
    ap.add_argument("--field", type=int, default=TimingConfig.p)
    ap.add_argument("--suites", nargs="+", choices=SUITES, default=list(SUITES))
    args = ap.parse_args()
    cfg = TimingConfig(args.quivers, args.field, tuple(args.suites))

    quivers = [(name, builtin_quiver(name)) for name in cfg.quivers]
    rows = []
    for suite in cfg.suites:
        run = run_suite(suite, quivers, cfg.p)
        d = run.to_dict()
        rows.append({
            "suite": suite,
            "ok": run.ok,
            "checks": sum(r["checks"] for r in d["runs"]),
            "failed": sum(r["failed"] for r in d["runs"]),
            "seconds": round(run.seconds, 2),
        })
        print(f"{suite:12} {'ok' if run.ok else 'FAILED':6} {rows[-1]['checks']:>8} checks  {run.seconds:6.2f}s")
    total = sum(r["seconds"] for r in rows)
    print(f"{'total':12} {'':6} {sum(r['checks'] for r in rows):>8} checks  {total:6.2f}s")
    print(json.dumps(rows))
    return 0 if all(r["ok"] for r in rows) else 1


if __name__ == "__main__":
    raise SystemExit(main())
