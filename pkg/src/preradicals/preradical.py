"""Preradicals on a category with finitely many indecomposables.

A preradical is stored as the table of its values on the indecomposables:
one subrepresentation per indecomposable, closed under every morphism between
indecomposables. Values on arbitrary objects are recovered by the trace
formula in :func:`evaluate`, so no decomposition is ever needed.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .config import DEFAULT_LIMITS, Limits
from .errors import CapacityError, MismatchError, NaturalityError
from .indecomposables import (
    Interval,
    is_indecomposable,
    is_isomorphic,
    type_a_intervals,
)
from .linalg import Subspace, annihilator, cached_hash, image_of_subspace, unchecked, subspace_contains
from .quiver import (
    Quiver,
    Rep,
    RepMorphism,
    Subrep,
    dual_rep,
    enumerate_subreps,
    hom_basis,
    image_of_subrep,
    kernel_subrep,
    preimage_of_subrep,
    quotient_rep,
    sub_to_rep,
    subrep_contains,
    subrep_intersect,
    subrep_sum,
)

# Every operation re-checks naturality of its output while this is on.
CHECK_NATURALITY = True


@cached_hash
@dataclass(frozen=True)
class Category:
    """rep(Q) over F_p together with an ordered, complete list of indecomposables."""

    quiver: Quiver
    p: int
    indecs: tuple[Rep, ...]
    intervals: tuple[Interval, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "indecs", tuple(self.indecs))
        for N in self.indecs:
            if N.quiver != self.quiver or N.p != self.p:
                raise MismatchError("indecomposable over a different quiver or field")

    @classmethod
    def type_a(cls, quiver: Quiver, p: int) -> "Category":
        return _type_a_category(quiver, p)

    @classmethod
    def from_indecomposables(cls, quiver: Quiver, p: int, indecs: Sequence[Rep],
                             limits: Limits = DEFAULT_LIMITS) -> "Category":
        """User-supplied list, checked for indecomposability and pairwise non-isomorphism.

        Completeness of the list cannot be checked and is the caller's responsibility.
        """
        for N in indecs:
            if not is_indecomposable(N, limits):
                raise ValueError(f"representation with dims {N.dims} is not indecomposable")
        for N, M in itertools.combinations(indecs, 2):
            if is_isomorphic(N, M, limits):
                raise ValueError(f"two isomorphic entries with dims {N.dims}")
        return cls(quiver, p, tuple(indecs))

    def __len__(self) -> int:
        return len(self.indecs)

    def opposite(self) -> "Category":
        ivs = self.intervals
        return Category(self.quiver.opposite(), self.p, tuple(dual_rep(N) for N in self.indecs), ivs)

    def name(self, i: int) -> str:
        if self.intervals is not None:
            return self.intervals[i].name(self.quiver)
        return f"N{i}"

    def zero(self) -> "Preradical":
        return Preradical(self, tuple(Subrep.zero(N) for N in self.indecs))

    def one(self) -> "Preradical":
        return Preradical(self, tuple(Subrep.full(N) for N in self.indecs))


@lru_cache(maxsize=None)
def _type_a_category(quiver: Quiver, p: int) -> Category:
    pairs = type_a_intervals(quiver, p)
    return Category(quiver, p, tuple(r for _, r in pairs), tuple(iv for iv, _ in pairs))


@cached_hash
@dataclass(frozen=True)
class Preradical:
    """A natural assignment of a subrepresentation to every indecomposable."""

    category: Category
    values: tuple[Subrep, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) != len(self.category.indecs):
            raise MismatchError("one value per indecomposable is required")
        for w, N in zip(self.values, self.category.indecs):
            if w.ambient != N:
                raise MismatchError("value is not a subrepresentation of its indecomposable")

    def sort_key(self) -> tuple:
        return tuple(w.sort_key() for w in self.values)

    def __le__(self, other: "Preradical") -> bool:
        return leq(self, other)

    def __lt__(self, other: "Preradical") -> bool:
        return leq(self, other) and self != other

    def dims_table(self) -> tuple[tuple[int, ...], ...]:
        return tuple(w.dims for w in self.values)

    def to_json(self) -> dict:
        from .serialize import preradical_to_json

        return preradical_to_json(self)


def _same(a: Preradical, b: Preradical) -> None:
    if a.category != b.category:
        raise MismatchError("preradicals of different categories")


@lru_cache(maxsize=1 << 16)
def validate_naturality(pr: Preradical) -> bool:
    """Every basis morphism between indecomposables maps values into values."""
    C = pr.category
    for (i, N), (j, M) in itertools.product(enumerate(C.indecs), repeat=2):
        src, dst = pr.values[i].spaces, pr.values[j].spaces
        for f in hom_basis(N, M):
            for c, a, b in zip(f.components, src, dst):
                if not subspace_contains(b, image_of_subspace(c, a)):
                    return False
    return True


def _checked(pr: Preradical) -> Preradical:
    if CHECK_NATURALITY and not validate_naturality(pr):
        raise NaturalityError("operation produced a non-natural value table")
    return pr


def enumerate_preradicals(category: Category, limits: Limits = DEFAULT_LIMITS) -> list[Preradical]:
    """All preradicals, sorted by their canonical value tables.

    Values are assigned indecomposable by indecomposable; a partial table is
    abandoned as soon as a morphism between already-assigned indecomposables
    breaks containment.
    """
    C = category
    options = [enumerate_subreps(N, limits) for N in C.indecs]
    total = math.prod(len(o) for o in options)
    if total > limits.preradical_candidates:
        raise CapacityError(f"{total} candidate tables exceed preradical_candidates={limits.preradical_candidates}")
    homs = {(i, j): hom_basis(N, M) for (i, N), (j, M) in itertools.product(enumerate(C.indecs), repeat=2)}
    n = len(C.indecs)
    out: list[Preradical] = []

    def compatible(chosen: list[Subrep], j: int, w: Subrep) -> bool:
        for i in range(j + 1):
            wi = w if i == j else chosen[i]
            for f in homs[(i, j)]:
                if not subrep_contains(w, image_of_subrep(f, wi)):
                    return False
            if i < j:
                for f in homs[(j, i)]:
                    if not subrep_contains(chosen[i], image_of_subrep(f, w)):
                        return False
        return True

    def extend(chosen: list[Subrep]) -> None:
        j = len(chosen)
        if j == n:
            out.append(Preradical(C, tuple(chosen)))
            return
        for w in options[j]:
            if compatible(chosen, j, w):
                chosen.append(w)
                extend(chosen)
                chosen.pop()

    extend([])
    out.sort(key=Preradical.sort_key)
    return out


def evaluate(pr: Preradical, X: Rep) -> Subrep:
    """Value on an arbitrary object: the sum of ``f(pr(N))`` over indecomposables
    ``N`` and a basis of ``Hom(N, X)``."""
    C = pr.category
    if X.quiver != C.quiver or X.p != C.p:
        raise MismatchError("object is not in the preradical's category")
    return _evaluate(pr, X)


@lru_cache(maxsize=65536)
def _evaluate(pr: Preradical, X: Rep) -> Subrep:
    spaces = [[] for _ in X.dims]
    for N, w in zip(pr.category.indecs, pr.values):
        if w.is_zero():
            continue
        for f in hom_basis(N, X):
            for v, (c, s) in enumerate(zip(f.components, w.spaces)):
                spaces[v].extend(c.apply(x) for x in s.vectors)
    return unchecked(Subrep, X, tuple(Subspace.span(vs, d, X.p) for vs, d in zip(spaces, X.dims)))


def leq(a: Preradical, b: Preradical) -> bool:
    _same(a, b)
    return all(subrep_contains(y, x) for x, y in zip(a.values, b.values))


def eq(a: Preradical, b: Preradical) -> bool:
    _same(a, b)
    return a.values == b.values


def product(tau: Preradical, sigma: Preradical) -> Preradical:
    """``tau . sigma``: apply ``tau`` to the subobject ``sigma(N)`` of each ``N``."""
    _same(tau, sigma)
    return _product(tau, sigma)


@lru_cache(maxsize=None)
def _product(tau: Preradical, sigma: Preradical) -> Preradical:
    values = []
    for w in sigma.values:
        R, incl = sub_to_rep(w)
        values.append(image_of_subrep(incl, evaluate(tau, R)))
    return _checked(Preradical(tau.category, tuple(values)))


def coproduct(sigma: Preradical, tau: Preradical) -> Preradical:
    """``(sigma : tau)``: pull back ``tau(N / sigma(N))`` along the projection."""
    _same(sigma, tau)
    return _coproduct(sigma, tau)


@lru_cache(maxsize=None)
def _coproduct(sigma: Preradical, tau: Preradical) -> Preradical:
    values = []
    for N, w in zip(sigma.category.indecs, sigma.values):
        Q, q = quotient_rep(N, w)
        values.append(preimage_of_subrep(q, evaluate(tau, Q)))
    return _checked(Preradical(sigma.category, tuple(values)))


def is_idempotent(pr: Preradical) -> bool:
    return product(pr, pr) == pr


def is_radical(pr: Preradical) -> bool:
    return coproduct(pr, pr) == pr


def join(prs: Iterable[Preradical], category: Category | None = None) -> Preradical:
    """Vertexwise sum of values; the empty join is 0."""
    prs = list(prs)
    if len(prs) == 2 and category is None:
        return _join2(prs[0], prs[1])
    C = _category_of(prs, category)
    values = tuple(subrep_sum([pr.values[i] for pr in prs], N) for i, N in enumerate(C.indecs))
    return _checked(Preradical(C, values))


def meet(prs: Iterable[Preradical], category: Category | None = None) -> Preradical:
    """Vertexwise intersection of values; the empty meet is 1."""
    prs = list(prs)
    if len(prs) == 2 and category is None:
        return _meet2(prs[0], prs[1])
    C = _category_of(prs, category)
    values = tuple(subrep_intersect([pr.values[i] for pr in prs], N) for i, N in enumerate(C.indecs))
    return _checked(Preradical(C, values))


@lru_cache(maxsize=1 << 16)
def _join2(a: Preradical, b: Preradical) -> Preradical:
    return join([a, b], a.category)


@lru_cache(maxsize=1 << 16)
def _meet2(a: Preradical, b: Preradical) -> Preradical:
    return meet([a, b], a.category)


def _category_of(prs: list[Preradical], category: Category | None) -> Category:
    if category is None:
        if not prs:
            raise ValueError("an empty family needs an explicit category")
        category = prs[0].category
    for pr in prs:
        if pr.category != category:
            raise MismatchError("preradicals of different categories")
    return category


def _check_morphism(C: Category, h: RepMorphism) -> None:
    if h.source.quiver != C.quiver or h.p != C.p:
        raise MismatchError("morphism is not in the category")


def alpha(h: RepMorphism, category: Category) -> Preradical:
    """Alpha preradical of ``h: N -> M``: at ``L``, the sum of ``Im(f o h)`` over a basis of Hom(M, L)."""
    _check_morphism(category, h)
    return _alpha(h, category)


@lru_cache(maxsize=None)
def _alpha(h: RepMorphism, C: Category) -> Preradical:
    values = []
    for L in C.indecs:
        spaces = [[] for _ in L.dims]
        for f in hom_basis(h.target, L):
            g = f @ h
            for v, c in enumerate(g.components):
                spaces[v].extend(c.columns())
        values.append(unchecked(Subrep, L, tuple(Subspace.span(vs, d, C.p) for vs, d in zip(spaces, L.dims))))
    return _checked(Preradical(C, tuple(values)))


def omega(k: RepMorphism, category: Category) -> Preradical:
    """Omega preradical of ``k: N -> M``: at ``L``, the meet of ``Ker(k o f)`` over a basis of Hom(L, N)."""
    _check_morphism(category, k)
    return _omega(k, category)


@lru_cache(maxsize=None)
def _omega(k: RepMorphism, C: Category) -> Preradical:
    values = []
    for L in C.indecs:
        values.append(subrep_intersect([kernel_subrep(k @ f) for f in hom_basis(L, k.source)], L))
    return _checked(Preradical(C, tuple(values)))


def delta(pr: Preradical) -> Preradical:
    """Duality to the opposite category: value on ``D N`` is the annihilator of ``pr(N)``."""
    C = pr.category
    Cop = C.opposite()
    values = []
    for N, w in zip(Cop.indecs, pr.values):
        values.append(unchecked(Subrep, N, tuple(annihilator(s) for s in w.spaces)))
    return _checked(Preradical(Cop, tuple(values)))


def delta_inverse(pr: Preradical) -> Preradical:
    """Inverse of :func:`delta`; the duality is an involution on value tables."""
    return delta(pr)


def t_class(pr: Preradical) -> list[int]:
    """Indices of indecomposables on which ``pr`` is the whole object."""
    return [i for i, w in enumerate(pr.values) if w.is_full()]


def f_class(pr: Preradical) -> list[int]:
    """Indices of indecomposables on which ``pr`` vanishes."""
    return [i for i, w in enumerate(pr.values) if w.is_zero()]


def inclusion_of_value(pr: Preradical, i: int) -> RepMorphism:
    return sub_to_rep(pr.values[i])[1]


def projection_of_value(pr: Preradical, i: int) -> RepMorphism:
    return quotient_rep(pr.category.indecs[i], pr.values[i])[1]


def reconstruct_from_alpha(pr: Preradical) -> Preradical:
    """Join over indecomposables ``N`` of alpha of the inclusion ``pr(N) -> N``."""
    C = pr.category
    return join([alpha(inclusion_of_value(pr, i), C) for i in range(len(C))], C)


def reconstruct_from_omega(pr: Preradical) -> Preradical:
    """Meet over indecomposables ``N`` of omega of the projection ``N -> N / pr(N)``."""
    C = pr.category
    return meet([omega(projection_of_value(pr, i), C) for i in range(len(C))], C)


def idempotent_closure_from_t_class(pr: Preradical) -> Preradical:
    """Join of ``alpha(1_N)`` over the indecomposables in the T-class."""
    C = pr.category
    return join([alpha(C.indecs[i].identity(), C) for i in t_class(pr)], C)


def radical_closure_from_f_class(pr: Preradical) -> Preradical:
    """Meet of ``omega(1_N)`` over the indecomposables in the F-class."""
    C = pr.category
    return meet([omega(C.indecs[i].identity(), C) for i in f_class(pr)], C)
