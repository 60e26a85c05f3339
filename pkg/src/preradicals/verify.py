"""Exhaustive verification suites over the enumerated preradical lattices.

Each suite takes a type-A quiver and a prime and returns a :class:`Report`.
``run_suite`` runs one suite (or ``all``) over several quivers and adds timing.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from .builtins import builtin_adjunctions
from .galois import check_adjunction, check_equivalence, check_galois, check_generators, check_squares
from .labels import display_name
from .lattice import build_poset, sublattice, verify_lattice_laws
from .preradical import (
    Category,
    alpha,
    coproduct,
    delta,
    delta_inverse,
    enumerate_preradicals,
    evaluate,
    f_class,
    idempotent_closure_from_t_class,
    is_idempotent,
    is_radical,
    join,
    leq,
    meet,
    omega,
    product,
    radical_closure_from_f_class,
    reconstruct_from_alpha,
    reconstruct_from_omega,
    t_class,
)
from .quiver import Quiver, RepMorphism, direct_sum, dual_morphism, hom_basis, image_of_subrep, subrep_sum
from .report import Report

SUITES = ("order", "delta", "alpha-omega", "joins", "galois")
MAX_SUBSET = 3


def _lattice(q: Quiver, p: int):
    C = Category.type_a(q, p)
    return C, enumerate_preradicals(C)


def _sample_morphisms(C: Category) -> list[RepMorphism]:
    sample = [N.identity() for N in C.indecs]
    for N, M in itertools.product(C.indecs, repeat=2):
        sample.extend(hom_basis(N, M))
    return sample


def suite_order(q: Quiver, p: int) -> Report:
    """Partial-order and lattice laws, product/coproduct inequalities, closure of binary operations."""
    C, prs = _lattice(q, p)
    rep = Report("order")
    index = set(prs)
    n = len(prs)
    le = [[leq(a, b) for b in prs] for a in prs]
    for a in range(n):
        rep.record("leq reflexive", le[a][a], display_name(prs[a]))
        for b in range(n):
            if a != b and le[a][b]:
                rep.record("leq antisymmetric", not le[b][a], f"{a},{b}")
                for c in range(n):
                    if le[b][c]:
                        rep.record("leq transitive", le[a][c], f"{a},{b},{c}")
    rep.record("0 and 1 enumerated", C.zero() in index and C.one() in index)
    pos = {t: i for i, t in enumerate(prs)}
    for (a, s), (b, t) in itertools.product(enumerate(prs), repeat=2):
        pair = f"({display_name(s)}, {display_name(t)})"
        prod, cop = product(t, s), coproduct(s, t)
        rep.record("product lands in Pr", prod in index, pair)
        rep.record("coproduct lands in Pr", cop in index, pair)
        rep.record("(tau . sigma) <= sigma", leq(prod, s), pair)
        rep.record("sigma <= (sigma : tau)", leq(s, cop), pair)
        j, m = pos.get(join([s, t])), pos.get(meet([s, t]))
        rep.record("join lands in Pr", j is not None, pair)
        rep.record("meet lands in Pr", m is not None, pair)
        if j is not None:
            uppers = [u for u in range(n) if le[a][u] and le[b][u]]
            rep.record("join is least upper bound", j in uppers and all(le[j][u] for u in uppers), pair)
        if m is not None:
            lowers = [u for u in range(n) if le[u][a] and le[u][b]]
            rep.record("meet is greatest lower bound", m in lowers and all(le[u][m] for u in lowers), pair)
    h = build_poset(prs)
    rep.merge(verify_lattice_laws(h), "hasse: ")
    for which in ("idempotent", "radical"):
        rep.merge(verify_lattice_laws(sublattice(h, which)), f"{which} sublattice: ")
    rep.notes.append(f"{q.vertex_count} vertices over F_{p}: {n} preradicals, {len(h.covers)} covers, "
                     f"{len(h.idempotent)} idempotent, {len(h.radical)} radical")
    return rep


def suite_delta(q: Quiver, p: int) -> Report:
    """Duality to the opposite lattice: bijection, order reversal, product/coproduct exchange."""
    C, prs = _lattice(q, p)
    Cop = C.opposite()
    prs_op = enumerate_preradicals(Cop)
    rep = Report("delta")
    images = [delta(t) for t in prs]
    rep.record("delta is a bijection onto Pr(op)", sorted(images, key=lambda x: x.sort_key()) == prs_op)
    rep.record("delta(0) = 1", delta(C.zero()) == Cop.one())
    rep.record("delta(1) = 0", delta(C.one()) == Cop.zero())
    for t, d in zip(prs, images):
        rep.record("delta_inverse delta = id", delta_inverse(d) == t, display_name(t))
        rep.record("radical iff delta idempotent", is_radical(t) == is_idempotent(d), display_name(t))
        rep.record("idempotent iff delta radical", is_idempotent(t) == is_radical(d), display_name(t))
    for (s, ds), (t, dt) in itertools.product(zip(prs, images), repeat=2):
        pair = f"({display_name(s)}, {display_name(t)})"
        rep.record("order reversing", leq(s, t) == leq(dt, ds), pair)
        rep.record("delta(s : t) = delta(t) . delta(s)", delta(coproduct(s, t)) == product(dt, ds), pair)
        rep.record("delta(t . s) = (delta(s) : delta(t))", delta(product(t, s)) == coproduct(ds, dt), pair)
        rep.record("delta(s v t) = delta(s) ^ delta(t)", delta(join([s, t])) == meet([ds, dt]), pair)
    for k in _sample_morphisms(C):
        kop = dual_morphism(k)
        rep.record("delta(alpha_k) = omega_{k op}", delta(alpha(k, C)) == omega(kop, Cop), f"{k.source.dims}->{k.target.dims}")
        rep.record("delta(omega_k) = alpha_{k op}", delta(omega(k, C)) == alpha(kop, Cop), f"{k.source.dims}->{k.target.dims}")
    return rep


def suite_alpha_omega(q: Quiver, p: int) -> Report:
    """Generation by alphas, cogeneration by omegas, and the trace formula on direct sums."""
    C, prs = _lattice(q, p)
    rep = Report("alpha-omega")
    index = set(prs)
    for t in prs:
        name = display_name(t)
        rep.record("tau = join of alpha of its values", reconstruct_from_alpha(t) == t, name)
        rep.record("tau = meet of omega of its quotients", reconstruct_from_omega(t) == t, name)
        rep.record("idempotent iff join over T-class of alpha(1_N)",
                   is_idempotent(t) == (idempotent_closure_from_t_class(t) == t), name)
        rep.record("radical iff meet over F-class of omega(1_N)",
                   is_radical(t) == (radical_closure_from_f_class(t) == t), name)
        rep.record("T-class and F-class disjoint", not set(t_class(t)) & set(f_class(t)), name)
    for i, N in enumerate(C.indecs):
        one = N.identity()
        a1, w1 = alpha(one, C), omega(one, C)
        rep.record("alpha(1_N) idempotent", is_idempotent(a1), C.name(i))
        rep.record("omega(1_N) radical", is_radical(w1), C.name(i))
        for c in range(2, p):
            rep.record("alpha(c 1_N) = alpha(1_N)", alpha(one.scale(c), C) == a1, f"{C.name(i)}, c={c}")
            rep.record("omega(c 1_N) = omega(1_N)", omega(one.scale(c), C) == w1, f"{C.name(i)}, c={c}")
    for h in _sample_morphisms(C):
        rep.record("alpha lands in Pr", alpha(h, C) in index, f"{h.source.dims}->{h.target.dims}")
        rep.record("omega lands in Pr", omega(h, C) in index, f"{h.source.dims}->{h.target.dims}")
    # Swapping two copies of N is an automorphism of N + N.
    for i, N in enumerate(C.indecs):
        S, incs, projs = direct_sum([N, N])
        swap = incs[0] @ projs[1] + incs[1] @ projs[0]
        rep.record("alpha(swap) = alpha(1)", alpha(swap, C) == alpha(S.identity(), C), C.name(i))
        rep.record("omega(swap) = omega(1)", omega(swap, C) == omega(S.identity(), C), C.name(i))
    S, incs, _ = direct_sum(C.indecs)
    for t in prs:
        expect = subrep_sum([image_of_subrep(inc, w) for inc, w in zip(incs, t.values)], S)
        rep.record("evaluate on a direct sum is the sum of values", evaluate(t, S) == expect, display_name(t))
    return rep


def suite_joins(q: Quiver, p: int) -> Report:
    """Closure under join/meet; joins of idempotents and meets of radicals, over small subsets."""
    C, prs = _lattice(q, p)
    rep = Report("joins")
    index = set(prs)
    for s, t in itertools.combinations(prs, 2):
        rep.record("join closed", join([s, t]) in index)
        rep.record("meet closed", meet([s, t]) in index)
    idem = [t for t in prs if is_idempotent(t)]
    rad = [t for t in prs if is_radical(t)]
    rep.record("empty join is 0", join([], C) == C.zero())
    rep.record("empty meet is 1", meet([], C) == C.one())
    for k in range(1, MAX_SUBSET + 1):
        for fam in itertools.combinations(idem, k):
            rep.record("join of idempotents is idempotent", is_idempotent(join(fam)),
                       ", ".join(map(display_name, fam)))
        for fam in itertools.combinations(rad, k):
            rep.record("meet of radicals is radical", is_radical(meet(fam)), ", ".join(map(display_name, fam)))
    return rep


def suite_galois(q: Quiver, p: int) -> Report:
    """Every built-in adjunction on ``q``: adjunction data, Galois laws, generators, squares."""
    rep = Report("galois")
    for name, adj in builtin_adjunctions(q, p):
        PrA = enumerate_preradicals(adj.source_category)
        PrB = enumerate_preradicals(adj.target_category)
        rep.merge(check_adjunction(adj), f"{name}: ")
        rep.merge(check_galois(adj, PrA, PrB), f"{name}: ")
        rep.merge(check_generators(adj), f"{name}: ")
        if not name.startswith("opposite"):
            rep.merge(check_squares(adj, PrA, PrB), f"{name}: ")
        if name.startswith("iso"):
            rep.merge(check_equivalence(adj, PrA, PrB), f"{name}: ")
    return rep


SUITE_FUNCTIONS = {
    "order": suite_order,
    "delta": suite_delta,
    "alpha-omega": suite_alpha_omega,
    "joins": suite_joins,
    "galois": suite_galois,
}


@dataclass
class SuiteRun:
    suite: str
    quivers: list[str]
    p: int
    reports: list[tuple[str, Report]] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(r.ok for _, r in self.reports)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "field": self.p,
            "ok": self.ok,
            "seconds": round(self.seconds, 3),
            "runs": [
                {
                    "quiver": qname,
                    "suite": r.title,
                    "ok": r.ok,
                    "checks": sum(c.total for c in r.checks.values()),
                    "failed": sum(c.failed for c in r.checks.values()),
                    "failures": [c.to_dict() for c in r.failures()],
                    "notes": r.notes,
                }
                for qname, r in self.reports
            ],
        }

    def render(self) -> str:
        lines = []
        for qname, r in self.reports:
            total = sum(c.total for c in r.checks.values())
            failed = sum(c.failed for c in r.checks.values())
            lines.append(f"{'PASS' if r.ok else 'FAIL'}  {r.title:<12} {qname:<10} {total - failed}/{total} checks")
            for c in r.failures():
                lines.append(f"      {c.name}: {c.failed} failures, e.g. {c.examples[:1]}")
            lines.extend(f"      {note}" for note in r.notes)
        lines.append(f"{'PASS' if self.ok else 'FAIL'}  {self.suite} in {self.seconds:.1f}s")
        return "\n".join(lines)


def run_suite(suite: str, quivers: list[tuple[str, Quiver]], p: int = 2) -> SuiteRun:
    if suite != "all" and suite not in SUITE_FUNCTIONS:
        raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES + ('all',))}")
    names = list(SUITES) if suite == "all" else [suite]
    run = SuiteRun(suite, [n for n, _ in quivers], p)
    start = time.perf_counter()
    for qname, q in quivers:
        for s in names:
            run.reports.append((qname, SUITE_FUNCTIONS[s](q, p)))
    run.seconds = time.perf_counter() - start
    return run
