"""Command-line interface: ``preradicals {enumerate,lattice,op,galois,verify}``.

Exit codes: 0 success, 1 usage or input error, 2 work bound exceeded,
3 a verification check failed.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass

from .builtins import builtin_quiver, check_shape, load_quiver, parse_adjunction
from .config import Limits
from .errors import CapacityError, PreradicalError
from .galois import check_adjunction, check_equivalence, check_galois, check_squares
from .labels import display_name, label_preradical, resolve_indecomposable, resolve_label, structural_dictionary
from .lattice import build_poset, sublattice, to_dot, to_json, to_table
from .linalg import FieldSpec
from .preradical import (
    Category,
    Preradical,
    alpha,
    coproduct,
    delta,
    enumerate_preradicals,
    is_idempotent,
    is_radical,
    join,
    meet,
    omega,
    product,
)
from .quiver import Quiver, RepMorphism
from .report import Report
from .serialize import preradical_from_json, preradical_to_json
from .verify import SUITES, run_suite

EXIT_OK, EXIT_INPUT, EXIT_CAPACITY, EXIT_VERIFY = 0, 1, 2, 3

log = logging.getLogger("preradicals")


@dataclass(frozen=True)
class CliConfig:
    p: int
    limits: Limits
    quiver: Quiver
    fmt: str
    verbosity: int


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiver", help="builtin name (a2, a3, a3:<>, a2op), inline JSON or a JSON file")
    common.add_argument("--field", type=int, default=2, metavar="P", help="prime field size (default 2)")
    common.add_argument("--format", choices=("json", "dot", "table"), default=None)
    common.add_argument("--limits", metavar="FILE", help="JSON work bounds (overrides $PRERADICAL_LIMITS)")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = _Parser(prog="preradicals", description="Preradical lattices of type-A quiver representations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("enumerate", parents=[common], help="list every preradical")
    p.add_argument("--opposite", action="store_true", help="use the opposite quiver")

    p = sub.add_parser("lattice", parents=[common], help="Hasse diagram as DOT, JSON or a table")
    p.add_argument("--only", choices=("idempotent", "radical"))
    p.add_argument("--opposite", action="store_true", help="lattice of the opposite category")

    p = sub.add_parser("op", parents=[common], help="apply one operation to named preradicals")
    p.add_argument("operation", choices=("product", "coproduct", "join", "meet", "alpha", "omega", "delta", "show"))
    p.add_argument("operands", nargs="*", help="preradical names, bracket tables or JSON files")
    p.add_argument("--identity", metavar="N", help="for alpha/omega: use the identity of indecomposable N")

    p = sub.add_parser("galois", parents=[common], help="check the Galois connection of an adjoint pair")
    p.add_argument("--adjunction", default="lan-res:1", metavar="SPEC",
                   help="lan-res:LABELS, iso:identity, iso:reverse, iso:LABELS or a JSON descriptor")
    p.add_argument("--opposite", action="store_true", help="also check the duality squares and the opposite pair")

    p = sub.add_parser("verify", parents=[common], help="run an exhaustive verification suite")
    p.add_argument("suite", choices=SUITES + ("all",))
    return parser


def _config(args) -> CliConfig:
    FieldSpec(args.field)
    limits = Limits.from_file(args.limits) if args.limits else Limits.from_env()
    q = load_quiver(args.quiver) if args.quiver else builtin_quiver("a2")
    check_shape(q)
    return CliConfig(args.field, limits, q, args.format or "table", args.verbose)


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _flags(pr: Preradical) -> str:
    marks = [m for m, ok in (("idempotent", is_idempotent(pr)), ("radical", is_radical(pr))) if ok]
    return ", ".join(marks) if marks else "neither idempotent nor radical"


def cmd_enumerate(args, cfg: CliConfig) -> int:
    q = cfg.quiver.opposite() if args.opposite else cfg.quiver
    prs = enumerate_preradicals(Category.type_a(q, cfg.p), cfg.limits)
    if cfg.fmt == "json":
        _emit(json.dumps({
            "count": len(prs),
            "preradicals": [
                {"name": display_name(pr), "table": label_preradical(pr), "idempotent": is_idempotent(pr),
                 "radical": is_radical(pr), "value": preradical_to_json(pr)}
                for pr in prs
            ],
        }, indent=2, ensure_ascii=False))
    else:
        h = build_poset(prs)
        _emit(f"{len(prs)} preradicals\n" + to_table(h))
    return EXIT_OK


def cmd_lattice(args, cfg: CliConfig) -> int:
    q = cfg.quiver.opposite() if args.opposite else cfg.quiver
    h = build_poset(enumerate_preradicals(Category.type_a(q, cfg.p), cfg.limits))
    if args.only:
        h = sublattice(h, args.only)
    fmt = args.format or "dot"
    if fmt == "dot":
        _emit(to_dot(h))
    elif fmt == "json":
        _emit(json.dumps(to_json(h), indent=2, ensure_ascii=False))
    else:
        _emit(to_table(h))
    return EXIT_OK


def _operand(text: str, prs: list[Preradical], p: int) -> Preradical:
    stripped = text.strip()
    if stripped.startswith("{") or stripped.endswith(".json"):
        return preradical_from_json(stripped, p)
    return resolve_label(stripped, prs)


def _morphism_arg(args, C: Category) -> RepMorphism:
    name = args.identity or (args.operands[0] if args.operands else None)
    if name is None:
        raise ValueError(f"{args.operation} needs --identity N or a morphism JSON file")
    if name.strip().startswith("{") or name.endswith(".json"):
        from .serialize import load_json

        return RepMorphism.from_json(load_json(name), C.quiver, C.p)
    return C.indecs[resolve_indecomposable(name, C)].identity()


def cmd_op(args, cfg: CliConfig) -> int:
    C = Category.type_a(cfg.quiver, cfg.p)
    prs = enumerate_preradicals(C, cfg.limits)
    op = args.operation
    if op in ("alpha", "omega"):
        h = _morphism_arg(args, C)
        result = alpha(h, C) if op == "alpha" else omega(h, C)
    else:
        xs = [_operand(t, prs, cfg.p) for t in args.operands]
        arity = {"product": 2, "coproduct": 2, "delta": 1, "show": 1}
        if op in arity and len(xs) != arity[op]:
            raise ValueError(f"{op} takes {arity[op]} operand(s), got {len(xs)}")
        if op == "product":
            result = product(xs[0], xs[1])
        elif op == "coproduct":
            result = coproduct(xs[0], xs[1])
        elif op == "join":
            result = join(xs, C)
        elif op == "meet":
            result = meet(xs, C)
        elif op == "delta":
            result = delta(xs[0])
        else:
            result = xs[0]
    if cfg.fmt == "json":
        _emit(json.dumps({"name": display_name(result), "table": label_preradical(result),
                          "idempotent": is_idempotent(result), "radical": is_radical(result),
                          "value": preradical_to_json(result)}, indent=2, ensure_ascii=False))
    else:
        table, name = label_preradical(result), display_name(result)
        _emit(table if name == table else f"{table}  ({name})")
        if op == "delta":
            d = structural_dictionary(result.category)
            _emit("over the opposite quiver; slots " + ", ".join(d.names[i] for i in d.slots))
        _emit(_flags(result))
    return EXIT_OK


def cmd_galois(args, cfg: CliConfig) -> int:
    adj = parse_adjunction(args.adjunction, cfg.quiver, cfg.p)
    PrA = enumerate_preradicals(adj.source_category, cfg.limits)
    PrB = enumerate_preradicals(adj.target_category, cfg.limits)
    reports: list[Report] = [check_adjunction(adj), check_galois(adj, PrA, PrB)]
    if adj.kind in ("iso",):
        eq = check_equivalence(adj, PrA, PrB)
        if eq.ok:
            eq.notes.append("phi and psi are mutually inverse lattice isomorphisms")
        reports.append(eq)
    if args.opposite:
        from .adjunction import opposite_adjunction

        reports.append(check_squares(adj, PrA, PrB))
        op = opposite_adjunction(adj)
        reports.append(check_galois(op, title="galois (opposite pair)"))
    ok = all(r.ok for r in reports)
    if cfg.fmt == "json":
        _emit(json.dumps({"adjunction": adj.descriptor, "ok": ok, "reports": [r.to_dict() for r in reports]},
                         indent=2, ensure_ascii=False))
    else:
        _emit(f"adjunction {args.adjunction}: {len(PrA)} x {len(PrB)} preradicals")
        for r in reports:
            _emit(r.render())
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_verify(args, cfg: CliConfig) -> int:
    if args.quiver:
        quivers = [(args.quiver, cfg.quiver)]
    else:
        quivers = [("a2", builtin_quiver("a2")), ("a3", builtin_quiver("a3"))]
    run = run_suite(args.suite, quivers, cfg.p)
    summary = run.to_dict()
    if cfg.fmt == "json":
        _emit(json.dumps(summary, indent=2, ensure_ascii=False))
    else:
        _emit(run.render())
        compact = {k: summary[k] for k in ("suite", "field", "ok", "seconds")}
        compact["checks"] = sum(r["checks"] for r in summary["runs"])
        compact["failed"] = sum(r["failed"] for r in summary["runs"])
        _emit("SUMMARY " + json.dumps(compact))
    return EXIT_OK if run.ok else EXIT_VERIFY


COMMANDS = {
    "enumerate": cmd_enumerate,
    "lattice": cmd_lattice,
    "op": cmd_op,
    "galois": cmd_galois,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2), format="%(levelname)s %(message)s")
    try:
        cfg = _config(args)
        return COMMANDS[args.command](args, cfg)
    except CapacityError as exc:
        print(f"capacity exceeded: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (PreradicalError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
