"""Indecomposable representations of type-A quivers (interval modules)."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .config import DEFAULT_LIMITS, Limits
from .errors import CapacityError, UnsupportedShapeError
from .linalg import Matrix
from .quiver import Quiver, Rep, hom_basis, linear_combination


@dataclass(frozen=True, order=True)
class Interval:
    """Support ``[lo, hi]`` (0-based, inclusive) of an interval module."""

    lo: int
    hi: int

    def __post_init__(self):
        if not 0 <= self.lo <= self.hi:
            raise ValueError(f"invalid interval [{self.lo}, {self.hi}]")

    def __contains__(self, v: int) -> bool:
        return self.lo <= v <= self.hi

    def to_json(self) -> list[int]:
        return [self.lo, self.hi]

    @classmethod
    def from_json(cls, obj) -> "Interval":
        lo, hi = obj
        return cls(int(lo), int(hi))

    def name(self, quiver: Quiver) -> str:
        return f"M[{quiver.label(self.lo)},{quiver.label(self.hi)}]"


def is_type_a(q: Quiver) -> bool:
    """Path-shaped with vertices numbered along the path (arrow ``i`` joins ``i`` and ``i+1``)."""
    n = q.vertex_count
    if n == 0 or len(q.arrows) != n - 1:
        return False
    return sorted(tuple(sorted(a)) for a in q.arrows) == [(i, i + 1) for i in range(n - 1)]


def _require_type_a(q: Quiver) -> None:
    if not is_type_a(q):
        raise UnsupportedShapeError(
            "type-A quiver required: a path whose vertices are numbered 0..n-1 along it"
        )


def interval_rep(q: Quiver, iv: Interval, p: int) -> Rep:
    _require_type_a(q)
    if iv.hi >= q.vertex_count:
        raise ValueError(f"interval {iv} exceeds the quiver")
    dims = tuple(int(v in iv) for v in range(q.vertex_count))
    maps = tuple(
        Matrix.identity(1, p) if (s in iv and t in iv) else Matrix.zeros(dims[t], dims[s], p)
        for s, t in q.arrows
    )
    return Rep(q, dims, maps, p)


def type_a_intervals(q: Quiver, p: int) -> list[tuple[Interval, Rep]]:
    """All ``n(n+1)/2`` interval modules, ordered by ``(lo, hi)``."""
    _require_type_a(q)
    n = q.vertex_count
    return [(Interval(lo, hi), interval_rep(q, Interval(lo, hi), p)) for lo in range(n) for hi in range(lo, n)]


def _endomorphisms(X: Rep, limits: Limits):
    basis = hom_basis(X, X)
    count = X.p ** len(basis)
    if count > limits.endomorphism_search:
        raise CapacityError(f"End(X) has {count} elements, above endomorphism_search={limits.endomorphism_search}")
    for coeffs in itertools.product(range(X.p), repeat=len(basis)):
        yield linear_combination(basis, coeffs, X, X)


def is_indecomposable(X: Rep, limits: Limits = DEFAULT_LIMITS) -> bool:
    """True iff ``X != 0`` and End(X) has no idempotent besides 0 and 1."""
    if X.is_zero():
        return False
    if len(hom_basis(X, X)) == 1:
        return True
    zero, one = X.zero_morphism(X), X.identity()
    for e in _endomorphisms(X, limits):
        if e != zero and e != one and e @ e == e:
            return False
    return True


def is_isomorphic(X: Rep, Y: Rep, limits: Limits = DEFAULT_LIMITS) -> bool:
    """Brute-force search for an invertible intertwiner."""
    if X.quiver != Y.quiver or X.p != Y.p or X.dims != Y.dims:
        return False
    basis = hom_basis(X, Y)
    count = X.p ** len(basis)
    if count > limits.endomorphism_search:
        raise CapacityError(f"Hom(X, Y) has {count} elements, above endomorphism_search")
    return any(
        linear_combination(basis, c, X, Y).is_iso()
        for c in itertools.product(range(X.p), repeat=len(basis))
    )


def brick_multiplicity(N: Rep, X: Rep) -> int:
    """Number of summands isomorphic to ``N`` in ``X``, for ``End(N) = F_p``.

    Equals the rank of the pairing ``Hom(N, X) x Hom(X, N) -> End(N) = F_p``,
    ``(f, g) -> g o f``.
    """
    end = hom_basis(N, N)
    if len(end) != 1:
        raise ValueError("multiplicity by rank pairing needs End(N) to be the ground field")
    ident = end[0]
    v, i = next((v, (r, c)) for v, m in enumerate(ident.components) for r, row in enumerate(m.data) for c, x in enumerate(row) if x)
    scale = pow(ident.components[v].data[i[0]][i[1]], -1, N.p)
    fs, gs = hom_basis(N, X), hom_basis(X, N)
    if not fs or not gs:
        return 0
    rows = [[(g @ f).components[v].data[i[0]][i[1]] * scale % N.p for g in gs] for f in fs]
    return Matrix.from_rows(rows, N.p).rank()


def barcode_equioriented(X: Rep) -> Counter:
    """Interval multiplicities of ``X`` on an equioriented path, from ranks of composites."""
    q = X.quiver
    _require_type_a(q)
    n = q.vertex_count
    forward = all(t == s + 1 for s, t in q.arrows)
    backward = all(s == t + 1 for s, t in q.arrows)
    if not (forward or backward):
        raise UnsupportedShapeError("barcode_equioriented needs all arrows pointing the same way")

    arrow_at = {tuple(sorted(a)): k for k, a in enumerate(q.arrows)}

    def rank(i: int, j: int) -> int:
        if i < 0 or j >= n:
            return 0
        if i == j:
            return X.dims[i]
        path = [arrow_at[(k, k + 1)] for k in range(i, j)]
        if backward:
            path = path[::-1]
        return X.path_map(path).rank()

    bars: Counter = Counter()
    for i in range(n):
        for j in range(i, n):
            m = rank(i, j) - rank(i - 1, j) - rank(i, j + 1) + rank(i - 1, j + 1)
            if m:
                bars[Interval(i, j)] = m
    return bars


def interval_of(X: Rep) -> Interval | None:
    """The support interval if ``X`` has the dimension vector of an interval module."""
    support = [v for v, d in enumerate(X.dims) if d]
    if not support or any(X.dims[v] != 1 for v in support):
        return None
    if support != list(range(support[0], support[-1] + 1)):
        return None
    return Interval(support[0], support[-1])
