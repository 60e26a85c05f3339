"""Finite acyclic quivers and their representations over F_p.

This is the concrete abelian category everything else works in: objects are
:class:`Rep`, morphisms :class:`RepMorphism`, subobjects :class:`Subrep`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .config import DEFAULT_LIMITS, Limits
from .errors import (
    CapacityError,
    DimensionError,
    IntertwiningError,
    InvalidSubrepError,
    MismatchError,
)
from .linalg import (
    FieldSpec,
    Matrix,
    Subspace,
    block_diagonal,
    cached_hash,
    unchecked,
    enumerate_subspaces,
    image_basis,
    image_of_subspace,
    kernel_basis,
    subspace_contains,
)


@cached_hash
@dataclass(frozen=True)
class Quiver:
    """Vertices ``0..n-1`` and arrows ``(source, target)``; must be acyclic."""

    vertex_count: int
    arrows: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple(tuple(a) for a in self.arrows))
        n = self.vertex_count
        for s, t in self.arrows:
            if not (0 <= s < n and 0 <= t < n):
                raise ValueError(f"arrow ({s}, {t}) leaves the vertex set 0..{n - 1}")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))
            if len(self.labels) != n:
                raise ValueError("one label per vertex is required")
        self.topological_order()

    def topological_order(self) -> list[int]:
        indeg = [0] * self.vertex_count
        for _, t in self.arrows:
            indeg[t] += 1
        ready = [v for v in range(self.vertex_count) if indeg[v] == 0]
        order = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            for s, t in self.arrows:
                if s == v:
                    indeg[t] -= 1
                    if indeg[t] == 0:
                        ready.append(t)
        if len(order) != self.vertex_count:
            raise ValueError("quiver has an oriented cycle")
        return order

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v + 1)

    def vertex_labels(self) -> tuple[str, ...]:
        return tuple(self.label(v) for v in range(self.vertex_count))

    def opposite(self) -> "Quiver":
        op = self.__dict__.get("_opposite")
        if op is None:
            op = Quiver(self.vertex_count, tuple((t, s) for s, t in self.arrows), self.labels)
            object.__setattr__(self, "_opposite", op)
        return op

    def paths(self, start: int, end: int) -> list[tuple[int, ...]]:
        """All oriented paths from ``start`` to ``end`` as tuples of arrow indices."""
        if start == end:
            return [()]
        out = []
        for i, (s, t) in enumerate(self.arrows):
            if s == start:
                out.extend((i,) + rest for rest in self.paths(t, end))
        return out

    def to_json(self) -> dict:
        obj = {"vertices": self.vertex_count, "arrows": [list(a) for a in self.arrows]}
        if self.labels is not None:
            obj["labels"] = list(self.labels)
        return obj

    @classmethod
    def from_json(cls, obj: dict) -> "Quiver":
        return cls(int(obj["vertices"]), tuple(tuple(a) for a in obj["arrows"]), obj.get("labels"))

    @classmethod
    def linear(cls, n: int, orientation: str = "") -> "Quiver":
        """The path quiver on ``n`` vertices.

        ``orientation`` has one character per arrow: ``'>'`` for ``i -> i+1``
        and ``'<'`` for ``i+1 -> i``; default is equioriented ``>``.
        """
        orientation = orientation or ">" * (n - 1)
        if len(orientation) != n - 1 or set(orientation) - {"<", ">"}:
            raise ValueError(f"orientation must be {n - 1} characters of '<' or '>'")
        arrows = tuple((i, i + 1) if c == ">" else (i + 1, i) for i, c in enumerate(orientation))
        return cls(n, arrows, tuple(str(i + 1) for i in range(n)))


@cached_hash
@dataclass(frozen=True)
class Rep:
    """A representation: a vector space F_p^dims[v] per vertex and a matrix per arrow."""

    quiver: Quiver
    dims: tuple[int, ...]
    arrow_maps: tuple[Matrix, ...]
    p: int

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(self.dims))
        object.__setattr__(self, "arrow_maps", tuple(self.arrow_maps))
        q = self.quiver
        if len(self.dims) != q.vertex_count or len(self.arrow_maps) != len(q.arrows):
            raise DimensionError("representation does not match the quiver's vertices and arrows")
        for (s, t), m in zip(q.arrows, self.arrow_maps):
            if m.shape != (self.dims[t], self.dims[s]):
                raise DimensionError(
                    f"arrow {s}->{t} needs a {self.dims[t]}x{self.dims[s]} matrix, got {m.shape}"
                )
            if m.p != self.p:
                raise MismatchError("arrow map over a different field")

    @classmethod
    def zero(cls, quiver: Quiver, p: int) -> "Rep":
        return cls(quiver, (0,) * quiver.vertex_count, tuple(Matrix.zeros(0, 0, p) for _ in quiver.arrows), p)

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def path_map(self, path: Sequence[int]) -> Matrix:
        """Composite linear map along a path of arrow indices."""
        if not path:
            raise ValueError("empty path has no determined vertex; use identity explicitly")
        m = self.arrow_maps[path[0]]
        for a in path[1:]:
            m = self.arrow_maps[a] @ m
        return m

    def identity(self) -> "RepMorphism":
        return RepMorphism(self, self, tuple(Matrix.identity(d, self.p) for d in self.dims))

    def zero_morphism(self, other: "Rep") -> "RepMorphism":
        return RepMorphism(self, other, tuple(Matrix.zeros(e, d, self.p) for d, e in zip(self.dims, other.dims)))

    def to_json(self) -> dict:
        return {"dims": list(self.dims), "arrows": [m.to_json() for m in self.arrow_maps]}

    @classmethod
    def from_json(cls, obj: dict, quiver: Quiver, p: int) -> "Rep":
        return cls(quiver, tuple(obj["dims"]), tuple(Matrix.from_json(m, p) for m in obj["arrows"]), p)


def _same_category(x: Rep, y: Rep) -> None:
    if x.quiver != y.quiver:
        raise MismatchError("representations of different quivers")
    if x.p != y.p:
        raise MismatchError(f"representations over F_{x.p} and F_{y.p}")


@cached_hash
@dataclass(frozen=True)
class RepMorphism:
    """A family of matrices ``components[v]: source_v -> target_v`` commuting with arrows."""

    source: Rep
    target: Rep
    components: tuple[Matrix, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        _same_category(self.source, self.target)
        X, Y = self.source, self.target
        for v, c in enumerate(self.components):
            if c.shape != (Y.dims[v], X.dims[v]):
                raise DimensionError(f"component at vertex {v} has shape {c.shape}")
        for a, (s, t) in enumerate(X.quiver.arrows):
            if Y.arrow_maps[a] @ self.components[s] != self.components[t] @ X.arrow_maps[a]:
                raise IntertwiningError(f"square at arrow {s}->{t} does not commute")

    @property
    def p(self) -> int:
        return self.source.p

    def __matmul__(self, other: "RepMorphism") -> "RepMorphism":
        """Composition ``self o other``."""
        if other.target != self.source:
            raise MismatchError("composable morphisms need matching target/source")
        comps = tuple(a @ b for a, b in zip(self.components, other.components))
        return unchecked(RepMorphism, other.source, self.target, comps)

    def __add__(self, other: "RepMorphism") -> "RepMorphism":
        if (self.source, self.target) != (other.source, other.target):
            raise MismatchError("cannot add morphisms between different objects")
        comps = tuple(a + b for a, b in zip(self.components, other.components))
        return unchecked(RepMorphism, self.source, self.target, comps)

    def scale(self, c: int) -> "RepMorphism":
        return unchecked(RepMorphism, self.source, self.target, tuple(m.scale(c) for m in self.components))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def is_mono(self) -> bool:
        return all(c.rank() == c.cols for c in self.components)

    def is_epi(self) -> bool:
        return all(c.rank() == c.rows for c in self.components)

    def is_iso(self) -> bool:
        return self.is_mono() and self.is_epi()

    def to_json(self) -> dict:
        return {
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "components": [m.to_json() for m in self.components],
        }

    @classmethod
    def from_json(cls, obj: dict, quiver: Quiver, p: int) -> "RepMorphism":
        return cls(
            Rep.from_json(obj["source"], quiver, p),
            Rep.from_json(obj["target"], quiver, p),
            tuple(Matrix.from_json(m, p) for m in obj["components"]),
        )


@cached_hash
@dataclass(frozen=True)
class Subrep:
    """An arrow-invariant family of subspaces of a representation."""

    ambient: Rep
    spaces: tuple[Subspace, ...]

    def __post_init__(self):
        object.__setattr__(self, "spaces", tuple(self.spaces))
        X = self.ambient
        if len(self.spaces) != len(X.dims):
            raise DimensionError("one subspace per vertex is required")
        for v, w in enumerate(self.spaces):
            if w.ambient_dim != X.dims[v]:
                raise DimensionError(f"subspace at vertex {v} lives in the wrong ambient space")
        if not is_invariant(X, self.spaces):
            raise InvalidSubrepError("subspaces are not closed under the arrow maps")

    @classmethod
    def zero(cls, X: Rep) -> "Subrep":
        return cls(X, tuple(Subspace.zero(d, X.p) for d in X.dims))

    @classmethod
    def full(cls, X: Rep) -> "Subrep":
        return cls(X, tuple(Subspace.full(d, X.p) for d in X.dims))

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(w.dim for w in self.spaces)

    def is_zero(self) -> bool:
        return all(w.is_zero() for w in self.spaces)

    def is_full(self) -> bool:
        return all(w.is_full() for w in self.spaces)

    def __le__(self, other: "Subrep") -> bool:
        return subrep_contains(other, self)

    def sort_key(self) -> tuple:
        return tuple(w.sort_key() for w in self.spaces)

    def to_json(self) -> list:
        return [w.to_json() for w in self.spaces]


def is_invariant(X: Rep, spaces: Sequence[Subspace]) -> bool:
    for (s, t), m in zip(X.quiver.arrows, X.arrow_maps):
        if not subspace_contains(spaces[t], image_of_subspace(m, spaces[s])):
            return False
    return True


def subrep_contains(a: Subrep, b: Subrep) -> bool:
    """True iff ``b`` is contained in ``a`` vertexwise."""
    if a.ambient != b.ambient:
        raise MismatchError("subrepresentations of different objects")
    return all(subspace_contains(x, y) for x, y in zip(a.spaces, b.spaces))


def subrep_sum(parts: Sequence[Subrep], ambient: Rep) -> Subrep:
    from .linalg import subspace_sum

    spaces = [Subspace.zero(d, ambient.p) for d in ambient.dims]
    for w in parts:
        if w.ambient != ambient:
            raise MismatchError("subrepresentations of different objects")
        spaces = [subspace_sum(a, b) for a, b in zip(spaces, w.spaces)]
    return unchecked(Subrep, ambient, tuple(spaces))


def subrep_intersect(parts: Sequence[Subrep], ambient: Rep) -> Subrep:
    from .linalg import subspace_intersect

    spaces = [Subspace.full(d, ambient.p) for d in ambient.dims]
    for w in parts:
        if w.ambient != ambient:
            raise MismatchError("subrepresentations of different objects")
        spaces = [subspace_intersect(a, b) for a, b in zip(spaces, w.spaces)]
    return unchecked(Subrep, ambient, tuple(spaces))


# --- hom spaces ---------------------------------------------------------------


@lru_cache(maxsize=65536)
def hom_basis(X: Rep, Y: Rep) -> tuple[RepMorphism, ...]:
    """A basis of Hom(X, Y): the null space of the stacked intertwining equations.

    Unknowns are the entries of every component, vertex by vertex, row-major.
    """
    _same_category(X, Y)
    p = X.p
    offsets = []
    n = 0
    for v in range(len(X.dims)):
        offsets.append(n)
        n += Y.dims[v] * X.dims[v]
    if n == 0:
        return ()
    equations = []
    for a, (s, t) in enumerate(X.quiver.arrows):
        A, B = X.arrow_maps[a], Y.arrow_maps[a]
        # (B phi_s - phi_t A)[i, j] = 0
        for i in range(Y.dims[t]):
            for j in range(X.dims[s]):
                row = [0] * n
                for k in range(Y.dims[s]):
                    c = B.data[i][k]
                    if c:
                        idx = offsets[s] + k * X.dims[s] + j
                        row[idx] = (row[idx] + c) % p
                for k in range(X.dims[t]):
                    c = A.data[k][j]
                    if c:
                        idx = offsets[t] + i * X.dims[t] + k
                        row[idx] = (row[idx] - c) % p
                equations.append(row)
    if equations:
        sol = kernel_basis(Matrix(len(equations), n, tuple(tuple(r) for r in equations), p))
    else:
        sol = Subspace.full(n, p)
    out = []
    for vec in sol.vectors:
        comps = []
        for v in range(len(X.dims)):
            r, c = Y.dims[v], X.dims[v]
            chunk = vec[offsets[v]:offsets[v] + r * c]
            comps.append(Matrix.from_entries(r, c, chunk, p))
        out.append(RepMorphism(X, Y, tuple(comps)))
    return tuple(out)


def hom_dim(X: Rep, Y: Rep) -> int:
    return len(hom_basis(X, Y))


def linear_combination(basis: Sequence[RepMorphism], coeffs: Sequence[int], X: Rep, Y: Rep) -> RepMorphism:
    p = X.p
    comps = [Matrix.zeros(Y.dims[v], X.dims[v], p) for v in range(len(X.dims))]
    for f, c in zip(basis, coeffs):
        if c % p:
            comps = [a + b.scale(c) for a, b in zip(comps, f.components)]
    return RepMorphism(X, Y, tuple(comps))


# --- kernels, images, subobjects and quotients --------------------------------


def kernel_subrep(f: RepMorphism) -> Subrep:
    return unchecked(Subrep, f.source, tuple(kernel_basis(c) for c in f.components))


def image_subrep(f: RepMorphism) -> Subrep:
    return unchecked(Subrep, f.target, tuple(image_basis(c) for c in f.components))


def image_of_subrep(f: RepMorphism, w: Subrep) -> Subrep:
    """``f(w)`` as a subrepresentation of the target."""
    if w.ambient != f.source:
        raise MismatchError("subrepresentation is not of the morphism's source")
    return unchecked(Subrep, f.target, tuple(image_of_subspace(c, s) for c, s in zip(f.components, w.spaces)))


def preimage_of_subrep(f: RepMorphism, w: Subrep) -> Subrep:
    from .linalg import preimage

    if w.ambient != f.target:
        raise MismatchError("subrepresentation is not of the morphism's target")
    return unchecked(Subrep, f.source, tuple(preimage(c, s) for c, s in zip(f.components, w.spaces)))


@lru_cache(maxsize=1 << 15)
def sub_to_rep(w: Subrep) -> tuple[Rep, RepMorphism]:
    """Realize a subobject as an object plus its inclusion.

    Coordinates on ``w_v`` are the canonical basis coordinates, read off at
    pivot columns.
    """
    X = w.ambient
    p = X.p
    maps = []
    for a, (s, t) in enumerate(X.quiver.arrows):
        A = X.arrow_maps[a]
        cols = [w.spaces[t].coordinates(A.apply(b)) for b in w.spaces[s].vectors]
        maps.append(Matrix.from_columns(cols, p, w.spaces[t].dim))
    R = Rep(X.quiver, w.dims, tuple(maps), p)
    incl = RepMorphism(R, X, tuple(s.basis_columns() for s in w.spaces))
    return R, incl


def _complement_coords(s: Subspace) -> list[int]:
    piv = set(s.pivots)
    return [j for j in range(s.ambient_dim) if j not in piv]


def _quotient_projection(s: Subspace) -> Matrix:
    """Matrix of ``F^n -> F^n / s`` in the non-pivot coordinates."""
    n, p = s.ambient_dim, s.p
    free = _complement_coords(s)
    piv = s.pivots
    cols = []
    for j in range(n):
        e = [int(i == j) for i in range(n)]
        for row, pc in zip(s.vectors, piv):
            c = e[pc]
            if c:
                e = [(x - c * y) % p for x, y in zip(e, row)]
        cols.append([e[k] for k in free])
    return Matrix.from_columns(cols, p, len(free))


def _quotient_section(s: Subspace) -> Matrix:
    n, p = s.ambient_dim, s.p
    free = _complement_coords(s)
    return Matrix.from_columns([[int(i == k) for i in range(n)] for k in free], p, n)


@lru_cache(maxsize=1 << 15)
def quotient_rep(X: Rep, w: Subrep) -> tuple[Rep, RepMorphism]:
    """``X / w`` with the canonical projection; quotient coordinates are the
    non-pivot coordinates of each ``w_v``."""
    if w.ambient != X:
        raise InvalidSubrepError("subrepresentation does not belong to this object")
    p = X.p
    projections = [_quotient_projection(s) for s in w.spaces]
    sections = [_quotient_section(s) for s in w.spaces]
    maps = [projections[t] @ A @ sections[s] for (s, t), A in zip(X.quiver.arrows, X.arrow_maps)]
    Q = Rep(X.quiver, tuple(m.rows for m in projections), tuple(maps), p)
    return Q, RepMorphism(X, Q, tuple(projections))


def induced_on_quotients(f: RepMorphism, qx: RepMorphism, qy: RepMorphism) -> RepMorphism:
    """The map ``X/U -> Y/V`` induced by ``f`` given the two projections."""
    comps = []
    for v in range(len(f.components)):
        sec = _right_inverse(qx.components[v])
        comps.append(qy.components[v] @ f.components[v] @ sec)
    return RepMorphism(qx.target, qy.target, tuple(comps))


def _right_inverse(m: Matrix) -> Matrix:
    """A right inverse of a surjective matrix (columns solve ``m x = e_i``)."""
    from .linalg import rref as _rref

    p = m.p
    aug = Matrix(m.rows, m.cols + m.rows, tuple(r + tuple(int(i == j) for j in range(m.rows)) for i, r in enumerate(m.data)), p)
    red, piv = _rref(aug)
    if len(piv) != m.rows or any(c >= m.cols for c in piv):
        raise ValueError("matrix is not surjective")
    cols = []
    for i in range(m.rows):
        x = [0] * m.cols
        for row, pc in zip(red.data, piv):
            if pc < m.cols:
                x[pc] = row[m.cols + i]
        cols.append(x)
    return Matrix.from_columns(cols, p, m.cols)


def direct_sum(parts: Sequence[Rep], quiver: Quiver | None = None, p: int | None = None):
    """Biproduct with its inclusions and projections."""
    parts = list(parts)
    if not parts:
        if quiver is None or p is None:
            raise ValueError("the empty direct sum needs an explicit quiver and field")
        return Rep.zero(quiver, p), [], []
    quiver, p = parts[0].quiver, parts[0].p
    for x in parts[1:]:
        _same_category(parts[0], x)
    dims = tuple(sum(x.dims[v] for x in parts) for v in range(quiver.vertex_count))
    maps = tuple(block_diagonal([x.arrow_maps[a] for x in parts], p) for a in range(len(quiver.arrows)))
    S = Rep(quiver, dims, maps, p)
    inclusions, projections = [], []
    offsets = [0] * quiver.vertex_count
    for x in parts:
        inc, proj = [], []
        for v in range(quiver.vertex_count):
            d, o = x.dims[v], offsets[v]
            inc.append(Matrix.from_rows([[int(i == j + o) for j in range(d)] for i in range(dims[v])], p, d))
            proj.append(Matrix.from_rows([[int(j == i + o) for j in range(dims[v])] for i in range(d)], p, dims[v]))
            offsets[v] += d
        inclusions.append(RepMorphism(x, S, tuple(inc)))
        projections.append(RepMorphism(S, x, tuple(proj)))
    return S, inclusions, projections


def enumerate_subreps(X: Rep, limits: Limits = DEFAULT_LIMITS) -> list[Subrep]:
    """All subrepresentations: product of per-vertex subspace lists, filtered by invariance."""
    return list(_enumerate_subreps(X, limits))


@lru_cache(maxsize=4096)
def _enumerate_subreps(X: Rep, limits: Limits) -> tuple[Subrep, ...]:
    per_vertex = [enumerate_subspaces(d, X.p, limits) for d in X.dims]
    total = math.prod(len(s) for s in per_vertex)
    if total > limits.subrep_tuples:
        raise CapacityError(f"{total} subspace tuples exceed subrep_tuples={limits.subrep_tuples}")
    out = [unchecked(Subrep, X, combo) for combo in itertools.product(*per_vertex) if is_invariant(X, combo)]
    out.sort(key=Subrep.sort_key)
    return tuple(out)


# --- duality ------------------------------------------------------------------


def dual_rep(X: Rep) -> Rep:
    """``Hom(X, F)`` as a representation of the opposite quiver (transposed maps)."""
    return unchecked(Rep, X.quiver.opposite(), X.dims, tuple(m.transpose() for m in X.arrow_maps), X.p)


def dual_morphism(f: RepMorphism) -> RepMorphism:
    """``f: X -> Y`` becomes ``D f: D Y -> D X``."""
    comps = tuple(c.transpose() for c in f.components)
    return unchecked(RepMorphism, dual_rep(f.target), dual_rep(f.source), comps)


def dual_subrep(w: Subrep) -> Subrep:
    """The annihilator of ``w`` inside the dual representation."""
    from .linalg import annihilator

    return unchecked(Subrep, dual_rep(w.ambient), tuple(annihilator(s) for s in w.spaces))


def field_of(X: Rep) -> FieldSpec:
    return FieldSpec(X.p)
