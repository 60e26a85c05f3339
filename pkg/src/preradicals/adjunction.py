"""Concrete adjoint pairs between representation categories and the Galois
connection they induce on preradical lattices.

Built-in family: restriction to a full subquiver with its left Kan extension,
relabelling equivalences from quiver isomorphisms, composites and opposites.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Sequence

from .errors import MismatchError, UnsupportedShapeError
from .indecomposables import is_type_a
from .linalg import Matrix, Subspace, block_diagonal, hstack
from .preradical import (
    Category,
    Preradical,
    _checked,
    evaluate,
)
from .quiver import (
    Quiver,
    Rep,
    RepMorphism,
    _quotient_projection,
    _quotient_section,
    dual_morphism,
    dual_rep,
    hom_basis,
    image_subrep,
    kernel_subrep,
    quotient_rep,
    sub_to_rep,
)


@dataclass(frozen=True, eq=False)
class AdditiveFunctor:
    """An additive functor rep(source) -> rep(target) given by its two actions."""

    source: Quiver
    target: Quiver
    on_object: Callable[[Rep], Rep]
    on_morphism: Callable[[RepMorphism], RepMorphism]
    kind: str

    def __call__(self, x):
        if isinstance(x, RepMorphism):
            if x.source.quiver != self.source:
                raise MismatchError(f"{self.kind} functor applied to a morphism of another quiver")
            return self.on_morphism(x)
        if x.quiver != self.source:
            raise MismatchError(f"{self.kind} functor applied to an object of another quiver")
        return self.on_object(x)


@dataclass(frozen=True, eq=False)
class AdjointPair:
    """``F`` left adjoint to ``G`` with unit ``A -> G F A`` and counit ``F G B -> B``."""

    F: AdditiveFunctor
    G: AdditiveFunctor
    unit: Callable[[Rep], RepMorphism]
    counit: Callable[[Rep], RepMorphism]
    p: int
    kind: str
    descriptor: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.F.source != self.G.target or self.F.target != self.G.source:
            raise MismatchError("functors of an adjoint pair must go in opposite directions")

    @property
    def source_category(self) -> Category:
        return Category.type_a(self.F.source, self.p)

    @property
    def target_category(self) -> Category:
        return Category.type_a(self.F.target, self.p)


def _cached(fn):
    return lru_cache(maxsize=4096)(fn)


# --- restriction and left Kan extension --------------------------------------


def _subquiver(q: Quiver, subset: Sequence[int]) -> tuple[Quiver, list[int], list[int]]:
    subset = sorted(set(subset))
    if not subset or any(not 0 <= v < q.vertex_count for v in subset):
        raise UnsupportedShapeError(f"vertex subset {subset} is empty or out of range")
    index = {v: i for i, v in enumerate(subset)}
    kept = [a for a, (s, t) in enumerate(q.arrows) if s in index and t in index]
    sub = Quiver(
        len(subset),
        tuple((index[q.arrows[a][0]], index[q.arrows[a][1]]) for a in kept),
        tuple(q.label(v) for v in subset),
    )
    if is_type_a(q) and not is_type_a(sub):
        raise UnsupportedShapeError(f"vertex subset {subset} does not induce a type-A subquiver")
    return sub, subset, kept


def restriction_functor(q: Quiver, vertex_subset: Sequence[int]) -> AdditiveFunctor:
    """Forget everything outside a full subquiver."""
    sub, subset, kept = _subquiver(q, vertex_subset)

    @_cached
    def on_object(X: Rep) -> Rep:
        return Rep(sub, tuple(X.dims[v] for v in subset), tuple(X.arrow_maps[a] for a in kept), X.p)

    def on_morphism(f: RepMorphism) -> RepMorphism:
        return RepMorphism(on_object(f.source), on_object(f.target), tuple(f.components[v] for v in subset))

    return AdditiveFunctor(q, sub, on_object, on_morphism, "restriction")


@dataclass(frozen=True)
class _Colimit:
    rep: Rep
    objects: tuple[tuple[tuple[int, tuple[int, ...]], ...], ...]  # per vertex: (sub vertex, path)
    projections: tuple[Matrix, ...]  # direct sum of object spaces -> colimit
    sections: tuple[Matrix, ...]  # colimit -> direct sum, right inverse of projection


class _Lan:
    """Pointwise left Kan extension along a full subquiver inclusion.

    ``(Lan V)(x)`` is the colimit of ``V`` over the comma category of subquiver
    vertices with a path to ``x``: a cokernel of the difference map built from
    generating comma morphisms (subquiver arrows).
    """

    def __init__(self, q: Quiver, vertex_subset: Sequence[int]):
        self.q = q
        self.sub, self.subset, self.kept = _subquiver(q, vertex_subset)
        n = q.vertex_count
        self.objects = []
        for x in range(n):
            objs = [(u, path) for u, v in enumerate(self.subset) for path in q.paths(v, x)]
            self.objects.append(tuple(objs))
        # generating morphisms at x: sub arrow a: u -> u2 and object (u2, path2)
        # relate (u, (a_Q,) + path2) with (u2, path2)
        self.relations = []
        for x in range(n):
            rels = []
            idx = {o: i for i, o in enumerate(self.objects[x])}
            for sa, a in enumerate(self.kept):
                u, u2 = self.sub.arrows[sa]
                for (w, path2) in self.objects[x]:
                    if w == u2:
                        rels.append((sa, idx[(u, (a,) + path2)], idx[(u2, path2)]))
            self.relations.append(rels)

    def _offsets(self, V: Rep, x: int) -> list[int]:
        out, o = [], 0
        for u, _ in self.objects[x]:
            out.append(o)
            o += V.dims[u]
        return out

    def colimit(self, V: Rep) -> _Colimit:
        return _lan_colimit(self, V)

    def build(self, V: Rep) -> _Colimit:
        p, q = V.p, self.q
        projs, secs = [], []
        for x in range(q.vertex_count):
            objs = self.objects[x]
            offs = self._offsets(V, x)
            total = sum(V.dims[u] for u, _ in objs)
            gens = []
            for sa, i, j in self.relations[x]:
                u = objs[i][0]
                A = V.arrow_maps[sa]
                for col in range(V.dims[u]):
                    vec = [0] * total
                    for r in range(A.rows):
                        vec[offs[j] + r] = (vec[offs[j] + r] + A.data[r][col]) % p
                    vec[offs[i] + col] = (vec[offs[i] + col] - 1) % p
                    gens.append(vec)
            D = Subspace.span(gens, total, p)
            projs.append(_quotient_projection(D))
            secs.append(_quotient_section(D))
        maps = []
        for b, (x, y) in enumerate(q.arrows):
            E = self._extend_by_arrow(V, b, x, y)
            maps.append(projs[y] @ E @ secs[x])
        rep = Rep(q, tuple(m.rows for m in projs), tuple(maps), p)
        return _Colimit(rep, tuple(self.objects), tuple(projs), tuple(secs))

    def _extend_by_arrow(self, V: Rep, b: int, x: int, y: int) -> Matrix:
        """Block matrix sending object ``(u, path)`` at ``x`` to ``(u, path + b)`` at ``y``."""
        p = V.p
        src, dst = self.objects[x], self.objects[y]
        so, do = self._offsets(V, x), self._offsets(V, y)
        rows = sum(V.dims[u] for u, _ in dst)
        cols = sum(V.dims[u] for u, _ in src)
        data = [[0] * cols for _ in range(rows)]
        didx = {o: i for i, o in enumerate(dst)}
        for i, (u, path) in enumerate(src):
            j = didx[(u, path + (b,))]
            for k in range(V.dims[u]):
                data[do[j] + k][so[i] + k] = 1
        return Matrix(rows, cols, tuple(tuple(r) for r in data), p)

    def blocks(self, f: RepMorphism, x: int) -> Matrix:
        return block_diagonal([f.components[u] for u, _ in self.objects[x]], f.p)


@lru_cache(maxsize=4096)
def _lan_colimit(lan: _Lan, V: Rep) -> _Colimit:
    return lan.build(V)


def lan_functor(q: Quiver, vertex_subset: Sequence[int]) -> AdditiveFunctor:
    return _lan_pair(q, tuple(sorted(set(vertex_subset))))[0]


def _lan_functor_from(lan: _Lan) -> AdditiveFunctor:
    def on_object(V: Rep) -> Rep:
        return lan.colimit(V).rep

    def on_morphism(f: RepMorphism) -> RepMorphism:
        cs, ct = lan.colimit(f.source), lan.colimit(f.target)
        comps = tuple(
            ct.projections[x] @ lan.blocks(f, x) @ cs.sections[x] for x in range(lan.q.vertex_count)
        )
        return RepMorphism(cs.rep, ct.rep, comps)

    return AdditiveFunctor(lan.sub, lan.q, on_object, on_morphism, "lan")


@lru_cache(maxsize=None)
def _lan_pair(q: Quiver, subset: tuple[int, ...]):
    lan = _Lan(q, subset)
    F = _lan_functor_from(lan)
    G = restriction_functor(q, subset)

    def unit(V: Rep) -> RepMorphism:
        c = lan.colimit(V)
        comps = []
        for u, v in enumerate(lan.subset):
            objs = lan.objects[v]
            i = objs.index((u, ()))
            offs = lan._offsets(V, v)
            total = sum(V.dims[w] for w, _ in objs)
            ins = Matrix.from_rows(
                [[int(r == offs[i] + k) for k in range(V.dims[u])] for r in range(total)], V.p, V.dims[u]
            )
            comps.append(c.projections[v] @ ins)
        return RepMorphism(V, G(c.rep), tuple(comps))

    def counit(B: Rep) -> RepMorphism:
        V = G(B)
        c = lan.colimit(V)
        comps = []
        for x in range(q.vertex_count):
            blocks = []
            for u, path in lan.objects[x]:
                v = lan.subset[u]
                blocks.append(B.path_map(path) if path else Matrix.identity(B.dims[v], B.p))
            action = hstack(blocks, B.dims[x], B.p) if blocks else Matrix.zeros(B.dims[x], 0, B.p)
            comps.append(action @ c.sections[x])
        return RepMorphism(c.rep, B, tuple(comps))

    return F, G, unit, counit


def lan_res_adjunction(q: Quiver, vertex_subset: Sequence[int], p: int) -> AdjointPair:
    """``(Lan, res)`` between rep(full subquiver) and rep(q)."""
    subset = tuple(sorted(set(vertex_subset)))
    F, G, unit, counit = _lan_pair(q, subset)
    return AdjointPair(F, G, unit, counit, p, "lan-res",
                       {"kind": "lan-res", "quiver": q.to_json(), "subset": list(subset)})


def unit(adj: AdjointPair, A: Rep) -> RepMorphism:
    if A.quiver != adj.F.source:
        raise MismatchError("unit evaluated at an object of the wrong category")
    return adj.unit(A)


def counit(adj: AdjointPair, B: Rep) -> RepMorphism:
    if B.quiver != adj.G.source:
        raise MismatchError("counit evaluated at an object of the wrong category")
    return adj.counit(B)


def check_triangles(adj: AdjointPair, samples_a: Sequence[Rep], samples_b: Sequence[Rep]) -> bool:
    """``(G eps) o (eta G) = 1_G`` on ``samples_b`` and ``(eps F) o (F eta) = 1_F`` on ``samples_a``."""
    for B in samples_b:
        GB = adj.G(B)
        if adj.G(adj.counit(B)) @ adj.unit(GB) != GB.identity():
            return False
    for A in samples_a:
        FA = adj.F(A)
        if adj.counit(FA) @ adj.F(adj.unit(A)) != FA.identity():
            return False
    return True


def hom_bijection_holds(adj: AdjointPair, A: Rep, B: Rep) -> bool:
    """``f -> G(f) o eta_A`` maps a basis of Hom(FA, B) onto a basis of Hom(A, GB)."""
    src = hom_basis(adj.F(A), B)
    dst = hom_basis(A, adj.G(B))
    if len(src) != len(dst):
        return False
    if not src:
        return True
    eta = adj.unit(A)
    vecs = [tuple((adj.G(f) @ eta).components[v].entries for v in range(len(A.dims))) for f in src]
    flat = [tuple(x for part in vec for x in part) for vec in vecs]
    return Matrix.from_rows(flat, A.p).rank() == len(src)


# --- equivalences, composites, opposites --------------------------------------


def _relabel(q1: Quiver, q2: Quiver, bijection: Sequence[int]) -> list[int]:
    n = q1.vertex_count
    if sorted(bijection) != list(range(n)) or q2.vertex_count != n:
        raise ValueError("vertex map is not a bijection onto the target quiver")
    used = set()
    arrow_map = []
    for s, t in q1.arrows:
        img = (bijection[s], bijection[t])
        cand = next((b for b, a in enumerate(q2.arrows) if a == img and b not in used), None)
        if cand is None:
            raise ValueError("vertex map does not carry arrows to arrows")
        used.add(cand)
        arrow_map.append(cand)
    if len(used) != len(q2.arrows):
        raise ValueError("vertex map is not a quiver isomorphism")
    return arrow_map


def _relabel_functor(q1: Quiver, q2: Quiver, vmap: Sequence[int], amap: Sequence[int]) -> AdditiveFunctor:
    n = q1.vertex_count
    inv_v = [0] * n
    for v, w in enumerate(vmap):
        inv_v[w] = v
    inv_a = [0] * len(amap)
    for a, b in enumerate(amap):
        inv_a[b] = a

    def on_object(X: Rep) -> Rep:
        return Rep(q2, tuple(X.dims[inv_v[w]] for w in range(n)),
                   tuple(X.arrow_maps[inv_a[b]] for b in range(len(amap))), X.p)

    def on_morphism(f: RepMorphism) -> RepMorphism:
        return RepMorphism(on_object(f.source), on_object(f.target), tuple(f.components[inv_v[w]] for w in range(n)))

    return AdditiveFunctor(q1, q2, on_object, on_morphism, "iso-equivalence")


def image_quiver(q1: Quiver, bijection: Sequence[int]) -> Quiver:
    labels = [None] * q1.vertex_count
    for v, w in enumerate(bijection):
        labels[w] = q1.label(v)
    return Quiver(q1.vertex_count, tuple((bijection[s], bijection[t]) for s, t in q1.arrows), tuple(labels))


def equivalence_from_iso(q1: Quiver, q2: Quiver | None, vertex_bijection: Sequence[int], p: int) -> AdjointPair:
    """Relabelling equivalence ``rep(q1) -> rep(q2)``; unit and counit are identities."""
    vmap = list(vertex_bijection)
    if q2 is None:
        q2 = image_quiver(q1, vmap)
    amap = _relabel(q1, q2, vmap)
    F = _relabel_functor(q1, q2, vmap, amap)
    inv = [0] * len(vmap)
    for v, w in enumerate(vmap):
        inv[w] = v
    G = _relabel_functor(q2, q1, inv, _relabel(q2, q1, inv))
    return AdjointPair(F, G, lambda A: A.identity(), lambda B: B.identity(), p, "iso",
                       {"kind": "iso", "quiver": q1.to_json(), "map": vmap})


def identity_adjunction(q: Quiver, p: int) -> AdjointPair:
    return equivalence_from_iso(q, q, list(range(q.vertex_count)), p)


def compose_adjunctions(first: AdjointPair, second: AdjointPair) -> AdjointPair:
    """``(F2 F1, G1 G2)`` for ``first: A -> B`` and ``second: B -> C``."""
    if first.F.target != second.F.source:
        raise MismatchError("adjunctions are not composable")
    F1, G1, F2, G2 = first.F, first.G, second.F, second.G
    F = AdditiveFunctor(F1.source, F2.target, lambda X: F2(F1(X)), lambda f: F2(F1(f)), "composite")
    G = AdditiveFunctor(G2.source, G1.target, lambda X: G1(G2(X)), lambda f: G1(G2(f)), "composite")

    def unit_(A: Rep) -> RepMorphism:
        return G1(second.unit(F1(A))) @ first.unit(A)

    def counit_(C: Rep) -> RepMorphism:
        return second.counit(C) @ F2(first.counit(G2(C)))

    return AdjointPair(F, G, unit_, counit_, first.p, "composite",
                       {"kind": "composite", "parts": [first.descriptor, second.descriptor]})


def opposite_adjunction(adj: AdjointPair) -> AdjointPair:
    """``(G^op, F^op)`` realized on rep of the opposite quivers through duality.

    The unit of the new pair is the dual of the old counit and vice versa.
    """
    F, G = adj.F, adj.G

    def lift(functor: AdditiveFunctor) -> AdditiveFunctor:
        return AdditiveFunctor(
            functor.source.opposite(),
            functor.target.opposite(),
            lambda Y: dual_rep(functor(dual_rep(Y))),
            lambda g: dual_morphism(functor(dual_morphism(g))),
            "opposite-lift",
        )

    Gop, Fop = lift(G), lift(F)

    def unit_(Y: Rep) -> RepMorphism:
        return dual_morphism(adj.counit(dual_rep(Y)))

    def counit_(X: Rep) -> RepMorphism:
        return dual_morphism(adj.unit(dual_rep(X)))

    return AdjointPair(Gop, Fop, unit_, counit_, adj.p, "opposite",
                       {"kind": "opposite", "of": adj.descriptor})


# --- the induced Galois connection -------------------------------------------


def phi(adj: AdjointPair, tau: Preradical) -> Preradical:
    """``Im(eps o F tau G)`` evaluated on the target's indecomposables."""
    A, B = adj.source_category, adj.target_category
    if tau.category != A:
        raise MismatchError("preradical is not over the left adjoint's source")
    values = []
    for N in B.indecs:
        W = evaluate(tau, adj.G(N))
        _, incl = sub_to_rep(W)
        values.append(image_subrep(adj.counit(N) @ adj.F(incl)))
    return _checked(Preradical(B, tuple(values)))


def psi(adj: AdjointPair, sigma: Preradical) -> Preradical:
    """``Ker(G sigma* F o eta)`` evaluated on the source's indecomposables."""
    A, B = adj.source_category, adj.target_category
    if sigma.category != B:
        raise MismatchError("preradical is not over the right adjoint's source")
    values = []
    for N in A.indecs:
        FA = adj.F(N)
        _, q = quotient_rep(FA, evaluate(sigma, FA))
        values.append(kernel_subrep(adj.G(q) @ adj.unit(N)))
    return _checked(Preradical(A, tuple(values)))
