"""Exhaustive checks of the Galois connection induced by an adjoint pair."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .adjunction import AdjointPair, check_triangles, hom_bijection_holds, opposite_adjunction, phi, psi
from .labels import display_name
from .preradical import (
    Preradical,
    alpha,
    delta,
    enumerate_preradicals,
    is_idempotent,
    is_radical,
    join,
    leq,
    meet,
    omega,
)
from .quiver import direct_sum, hom_basis
from .report import Report

GROUPS = {
    "order": ["phi monotone", "psi monotone"],
    "closure": ["tau <= psi phi tau"],
    "interior": ["phi psi sigma <= sigma"],
    "quasi-inverse": ["phi psi phi = phi", "psi phi psi = psi"],
    "bounds": ["phi(0) = 0", "psi(1) = 1"],
    "adjunction": ["tau <= psi sigma iff phi tau <= sigma"],
    "fixed points": ["psi phi tau = tau iff tau in psi(Pr B)", "phi psi sigma = sigma iff sigma in phi(Pr A)"],
    "preservation": [
        "phi preserves joins",
        "psi preserves meets",
        "phi maps idempotents to idempotents",
        "psi maps radicals to radicals",
    ],
    "closure of values": ["phi lands in Pr B", "psi lands in Pr A"],
}


@dataclass
class GaloisReport(Report):
    """Outcome of :func:`check_galois`, grouped by the property being tested."""

    phi_table: list[Preradical] = field(default_factory=list)
    psi_table: list[Preradical] = field(default_factory=list)

    def group(self, name: str) -> list:
        return [self.checks[c] for c in GROUPS[name] if c in self.checks]

    def group_ok(self, name: str) -> bool:
        return all(c.ok for c in self.group(name))


def check_galois(adj: AdjointPair, PrA: list[Preradical] | None = None,
                 PrB: list[Preradical] | None = None, title: str = "galois") -> GaloisReport:
    """Every Galois-connection property over the full finite lattices."""
    PrA = PrA if PrA is not None else enumerate_preradicals(adj.source_category)
    PrB = PrB if PrB is not None else enumerate_preradicals(adj.target_category)
    rep = GaloisReport(title)
    ia = {t: i for i, t in enumerate(PrA)}
    ib = {s: i for i, s in enumerate(PrB)}
    ph = [phi(adj, t) for t in PrA]
    ps = [psi(adj, s) for s in PrB]
    rep.phi_table, rep.psi_table = ph, ps

    def name(pr: Preradical) -> str:
        return display_name(pr)

    def phi_of(t: Preradical) -> Preradical:
        return ph[ia[t]] if t in ia else phi(adj, t)

    def psi_of(s: Preradical) -> Preradical:
        return ps[ib[s]] if s in ib else psi(adj, s)

    for t, f in zip(PrA, ph):
        rep.record("phi lands in Pr B", f in ib, name(t))
    for s, g in zip(PrB, ps):
        rep.record("psi lands in Pr A", g in ia, name(s))

    for a, b in itertools.product(range(len(PrA)), repeat=2):
        if leq(PrA[a], PrA[b]):
            rep.record("phi monotone", leq(ph[a], ph[b]), f"{name(PrA[a])} <= {name(PrA[b])}")
    for a, b in itertools.product(range(len(PrB)), repeat=2):
        if leq(PrB[a], PrB[b]):
            rep.record("psi monotone", leq(ps[a], ps[b]), f"{name(PrB[a])} <= {name(PrB[b])}")

    for t, f in zip(PrA, ph):
        back = psi_of(f)
        rep.record("tau <= psi phi tau", leq(t, back), name(t))
        rep.record("phi psi phi = phi", phi_of(back) == f, name(t))
    for s, g in zip(PrB, ps):
        fwd = phi_of(g)
        rep.record("phi psi sigma <= sigma", leq(fwd, s), name(s))
        rep.record("psi phi psi = psi", psi_of(fwd) == g, name(s))

    A0, B1 = adj.source_category.zero(), adj.target_category.one()
    rep.record("phi(0) = 0", phi_of(A0) == adj.target_category.zero())
    rep.record("psi(1) = 1", psi_of(B1) == adj.source_category.one())

    for (t, f), (s, g) in itertools.product(zip(PrA, ph), zip(PrB, ps)):
        rep.record("tau <= psi sigma iff phi tau <= sigma", leq(t, g) == leq(f, s), f"{name(t)}, {name(s)}")

    image_psi, image_phi = set(ps), set(ph)
    for t, f in zip(PrA, ph):
        rep.record("psi phi tau = tau iff tau in psi(Pr B)", (psi_of(f) == t) == (t in image_psi), name(t))
    for s, g in zip(PrB, ps):
        rep.record("phi psi sigma = sigma iff sigma in phi(Pr A)", (phi_of(g) == s) == (s in image_phi), name(s))

    for a, b in itertools.combinations(range(len(PrA)), 2):
        rep.record("phi preserves joins", phi_of(join([PrA[a], PrA[b]])) == join([ph[a], ph[b]]),
                   f"{name(PrA[a])}, {name(PrA[b])}")
    for a, b in itertools.combinations(range(len(PrB)), 2):
        rep.record("psi preserves meets", psi_of(meet([PrB[a], PrB[b]])) == meet([ps[a], ps[b]]),
                   f"{name(PrB[a])}, {name(PrB[b])}")
    for t, f in zip(PrA, ph):
        if is_idempotent(t):
            rep.record("phi maps idempotents to idempotents", is_idempotent(f), name(t))
    for s, g in zip(PrB, ps):
        if is_radical(s):
            rep.record("psi maps radicals to radicals", is_radical(g), name(s))
    return rep


def check_adjunction(adj: AdjointPair, title: str = "adjunction") -> Report:
    """Triangle identities and hom bijection on indecomposables and a direct sum."""
    rep = Report(title)
    A, B = adj.source_category, adj.target_category
    samples_a = list(A.indecs) + [direct_sum(A.indecs)[0]]
    samples_b = list(B.indecs) + [direct_sum(B.indecs)[0]]
    for X in samples_a:
        rep.record("triangle (eps F)(F eta) = 1", check_triangles(adj, [X], []), f"dims {X.dims}")
    for Y in samples_b:
        rep.record("triangle (G eps)(eta G) = 1", check_triangles(adj, [], [Y]), f"dims {Y.dims}")
    for X, Y in itertools.product(A.indecs, B.indecs):
        rep.record("hom bijection", hom_bijection_holds(adj, X, Y), f"dims {X.dims}, {Y.dims}")
    return rep


def check_generators(adj: AdjointPair, title: str = "generators") -> Report:
    """``phi(alpha_h) = alpha_{F h}`` and ``psi(omega_k) = omega_{G k}`` on identities and hom bases."""
    rep = Report(title)
    A, B = adj.source_category, adj.target_category
    for h in _sample_morphisms(A):
        rep.record("phi alpha_h = alpha_Fh", phi(adj, alpha(h, A)) == alpha(adj.F(h), B),
                   f"{h.source.dims} -> {h.target.dims}")
    for k in _sample_morphisms(B):
        rep.record("psi omega_k = omega_Gk", psi(adj, omega(k, B)) == omega(adj.G(k), A),
                   f"{k.source.dims} -> {k.target.dims}")
    return rep


def _sample_morphisms(C) -> list:
    sample = [N.identity() for N in C.indecs]
    for N, M in itertools.product(C.indecs, repeat=2):
        sample.extend(hom_basis(N, M))
    return sample


def check_squares(adj: AdjointPair, PrA: list[Preradical] | None = None,
                  PrB: list[Preradical] | None = None, title: str = "duality squares") -> Report:
    """Duality intertwines ``(phi, psi)`` with the pair induced by the opposite adjunction."""
    PrA = PrA if PrA is not None else enumerate_preradicals(adj.source_category)
    PrB = PrB if PrB is not None else enumerate_preradicals(adj.target_category)
    op = opposite_adjunction(adj)
    rep = Report(title)
    for t in PrA:
        rep.record("delta phi = psi-bar delta", delta(phi(adj, t)) == psi(op, delta(t)), display_name(t))
    for s in PrB:
        rep.record("delta psi = phi-bar delta", delta(psi(adj, s)) == phi(op, delta(s)), display_name(s))
    return rep


def check_equivalence(adj: AdjointPair, PrA: list[Preradical] | None = None,
                      PrB: list[Preradical] | None = None, title: str = "equivalence") -> Report:
    """For an equivalence, ``phi`` and ``psi`` are mutually inverse."""
    PrA = PrA if PrA is not None else enumerate_preradicals(adj.source_category)
    PrB = PrB if PrB is not None else enumerate_preradicals(adj.target_category)
    rep = Report(title)
    for t in PrA:
        rep.record("psi phi = id", psi(adj, phi(adj, t)) == t, display_name(t))
    for s in PrB:
        rep.record("phi psi = id", phi(adj, psi(adj, s)) == s, display_name(s))
    return rep
