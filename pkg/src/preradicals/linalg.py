"""Exact dense linear algebra over prime fields F_p.

Matrices and subspaces are immutable and hashable. A subspace is stored by
its reduced row-echelon basis, which is the unique representative of the
subspace, so equality of subspaces is equality of dataclasses.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, fields
from functools import lru_cache
from typing import Iterable, Sequence

from .config import DEFAULT_LIMITS, Limits
from .errors import CapacityError, DimensionError, FieldError

Vector = tuple[int, ...]

MAX_PRIME = 97


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


def unchecked(cls, *values):
    """Build a frozen dataclass instance without running ``__post_init__``.

    Only for values that satisfy the class invariants by construction.
    """
    names = _FIELD_NAMES.get(cls)
    if names is None:
        names = _FIELD_NAMES[cls] = tuple(f.name for f in fields(cls))
    obj = object.__new__(cls)
    for name, v in zip(names, values):
        object.__setattr__(obj, name, v)
    return obj


_FIELD_NAMES: dict[type, tuple[str, ...]] = {}


def cached_hash(cls):
    """Class decorator memoizing a frozen dataclass's hash on the instance."""
    names = tuple(f.name for f in fields(cls) if f.compare)

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash(tuple(getattr(self, n) for n in names))
            object.__setattr__(self, "_hash", h)
        return h

    cls.__hash__ = __hash__
    return cls


@dataclass(frozen=True)
class FieldSpec:
    """The prime field F_p, 2 <= p <= 97."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not 2 <= self.p <= MAX_PRIME or not is_prime(self.p):
            raise FieldError(f"field modulus must be a prime in [2, {MAX_PRIME}], got {self.p!r}")

    def inv(self, a: int) -> int:
        return pow(a % self.p, -1, self.p)

    def elements(self) -> range:
        return range(self.p)


def _check_p(p: int) -> None:
    FieldSpec(p)


@cached_hash
@dataclass(frozen=True)
class Matrix:
    """A ``rows x cols`` matrix over F_p, stored as a tuple of row tuples."""

    rows: int
    cols: int
    data: tuple[Vector, ...]
    p: int

    def __post_init__(self):
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise DimensionError(f"matrix data does not have shape {self.rows}x{self.cols}")
        if not (is_prime(self.p) and self.p <= MAX_PRIME):
            _check_p(self.p)
        if any(not 0 <= x < self.p for r in self.data for x in r):
            raise FieldError("matrix entries must be reduced mod p")

    # construction -------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], p: int, cols: int | None = None) -> "Matrix":
        data = tuple(tuple(int(x) % p for x in r) for r in rows)
        if cols is None:
            if not data:
                raise DimensionError("column count is required for a matrix without rows")
            cols = len(data[0])
        return cls(len(data), cols, data, p)

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Sequence[int], p: int) -> "Matrix":
        if len(entries) != rows * cols:
            raise DimensionError(f"{len(entries)} entries cannot fill a {rows}x{cols} matrix")
        flat = [int(x) % p for x in entries]
        return cls(rows, cols, tuple(tuple(flat[i * cols:(i + 1) * cols]) for i in range(rows)), p)

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> "Matrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)), p)

    @classmethod
    def identity(cls, n: int, p: int) -> "Matrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), p)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], p: int, rows: int) -> "Matrix":
        cols = list(columns)
        return cls(rows, len(cols), tuple(tuple(c[i] % p for c in cols) for i in range(rows)), p)

    # views ----------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(x for r in self.data for x in r)

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.data)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.data for x in r)

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": list(self.entries)}

    @classmethod
    def from_json(cls, obj: dict, p: int) -> "Matrix":
        return cls.from_entries(obj["rows"], obj["cols"], obj["entries"], p)

    # arithmetic -----------------------------------------------------------

    def _same_field(self, other: "Matrix") -> None:
        if self.p != other.p:
            raise FieldError(f"matrices over F_{self.p} and F_{other.p}")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._same_field(other)
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        p = self.p
        ocols = other.columns()
        data = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) % p for col in ocols) for row in self.data
        )
        return unchecked(Matrix, self.rows, other.cols, data, p)

    def apply(self, v: Sequence[int]) -> Vector:
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} against {self.shape} matrix")
        return tuple(sum(a * b for a, b in zip(row, v)) % self.p for row in self.data)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_field(other)
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        p = self.p
        return unchecked(
            Matrix,
            self.rows,
            self.cols,
            tuple(tuple((a + b) % p for a, b in zip(r, s)) for r, s in zip(self.data, other.data)),
            p,
        )

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c: int) -> "Matrix":
        p = self.p
        return unchecked(Matrix, self.rows, self.cols, tuple(tuple(c * x % p for x in r) for r in self.data), p)

    def transpose(self) -> "Matrix":
        return unchecked(Matrix, self.cols, self.rows, tuple(self.columns()), self.p)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def rank(self) -> int:
        return len(rref(self)[1])

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows


def hstack(blocks: Sequence[Matrix], rows: int, p: int) -> Matrix:
    data = [tuple(itertools.chain.from_iterable(b.data[i] for b in blocks)) for i in range(rows)]
    cols = sum(b.cols for b in blocks)
    return Matrix(rows, cols, tuple(data), p)


def vstack(blocks: Sequence[Matrix], cols: int, p: int) -> Matrix:
    data = tuple(r for b in blocks for r in b.data)
    return Matrix(len(data), cols, data, p)


def block_diagonal(blocks: Sequence[Matrix], p: int) -> Matrix:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    data = []
    offset = 0
    for b in blocks:
        for r in b.data:
            data.append((0,) * offset + r + (0,) * (cols - offset - b.cols))
        offset += b.cols
    return Matrix(rows, cols, tuple(data), p)


def _rref_rows(rows: Iterable[Sequence[int]], ncols: int, p: int) -> tuple[list[list[int]], list[int]]:
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = pow(m[r][c], -1, p)
        row = [x * inv % p for x in m[r]]
        m[r] = row
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], row)]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form with zero rows dropped, plus pivot columns."""
    rows, pivots = _rref_rows(m.data, m.cols, m.p)
    return Matrix(len(rows), m.cols, tuple(tuple(r) for r in rows), m.p), pivots


@cached_hash
@dataclass(frozen=True)
class Subspace:
    """A subspace of F_p^n given by its canonical (RREF) row basis."""

    ambient_dim: int
    basis: Matrix

    def __post_init__(self):
        b = self.basis
        if b.cols != self.ambient_dim:
            raise DimensionError("basis width differs from ambient dimension")
        last = -1
        for i, row in enumerate(b.data):
            pc = next((j for j, x in enumerate(row) if x), None)
            if pc is None or pc <= last or row[pc] != 1:
                raise ValueError("subspace basis must be in reduced row-echelon form")
            if any(b.data[k][pc] for k in range(b.rows) if k != i):
                raise ValueError("subspace basis must be in reduced row-echelon form")
            last = pc

    @classmethod
    def span(cls, vectors: Iterable[Sequence[int]], ambient_dim: int, p: int) -> "Subspace":
        rows, _ = _rref_rows(([x % p for x in v] for v in vectors), ambient_dim, p)
        return unchecked(cls, ambient_dim, unchecked(Matrix, len(rows), ambient_dim, tuple(tuple(r) for r in rows), p))

    @classmethod
    def zero(cls, ambient_dim: int, p: int) -> "Subspace":
        return cls(ambient_dim, Matrix.zeros(0, ambient_dim, p))

    @classmethod
    def full(cls, ambient_dim: int, p: int) -> "Subspace":
        return cls(ambient_dim, Matrix.identity(ambient_dim, p))

    @property
    def p(self) -> int:
        return self.basis.p

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def vectors(self) -> tuple[Vector, ...]:
        return self.basis.data

    @property
    def pivots(self) -> list[int]:
        return [next(j for j, x in enumerate(r) if x) for r in self.basis.data]

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def coordinates(self, v: Sequence[int]) -> Vector:
        """Coordinates of ``v`` in the canonical basis (``v`` must lie in the span)."""
        return tuple(v[j] for j in self.pivots)

    def basis_columns(self) -> Matrix:
        """The ``ambient_dim x dim`` matrix whose columns are the basis vectors."""
        return self.basis.transpose()

    def sort_key(self) -> tuple:
        return (self.dim, self.basis.entries)

    def to_json(self) -> dict:
        return {"ambient_dim": self.ambient_dim, "basis": [list(r) for r in self.vectors]}

    @classmethod
    def from_json(cls, obj: dict, p: int) -> "Subspace":
        return cls.span(obj["basis"], obj["ambient_dim"], p)

    def __contains__(self, v) -> bool:
        return contains_vector(self, v)

    def __le__(self, other: "Subspace") -> bool:
        return subspace_contains(other, self)


@lru_cache(maxsize=1 << 16)
def kernel_basis(m: Matrix) -> Subspace:
    """Null space ``{v : m v = 0}`` as a subspace of F_p^cols."""
    p = m.p
    rows, pivots = _rref_rows(m.data, m.cols, p)
    free = [j for j in range(m.cols) if j not in pivots]
    vecs = []
    for f in free:
        v = [0] * m.cols
        v[f] = 1
        for row, pc in zip(rows, pivots):
            v[pc] = -row[f] % p
        vecs.append(v)
    return Subspace.span(vecs, m.cols, p)


@lru_cache(maxsize=1 << 16)
def image_basis(m: Matrix) -> Subspace:
    """Column space of ``m`` as a subspace of F_p^rows."""
    return Subspace.span(m.columns(), m.rows, m.p)


def _check_pair(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionError(f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}")
    if a.p != b.p:
        raise FieldError(f"subspaces over F_{a.p} and F_{b.p}")


@lru_cache(maxsize=1 << 16)
def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_pair(a, b)
    return Subspace.span(a.vectors + b.vectors, a.ambient_dim, a.p)


@lru_cache(maxsize=1 << 16)
def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Zassenhaus: row-reduce ``[[A, A], [B, 0]]``; rows ``[0, w]`` span the meet."""
    _check_pair(a, b)
    n, p = a.ambient_dim, a.p
    if a.is_zero() or b.is_zero():
        return Subspace.zero(n, p)
    if a.is_full():
        return b
    if b.is_full():
        return a
    stacked = [r + r for r in a.vectors] + [r + (0,) * n for r in b.vectors]
    rows, pivots = _rref_rows(stacked, 2 * n, p)
    meet = [r[n:] for r, pc in zip(rows, pivots) if pc >= n]
    return Subspace.span(meet, n, p)


def contains_vector(a: Subspace, v: Sequence[int]) -> bool:
    p = a.p
    w = [x % p for x in v]
    for row, pc in zip(a.vectors, a.pivots):
        c = w[pc]
        if c:
            w = [(x - c * y) % p for x, y in zip(w, row)]
    return not any(w)


@lru_cache(maxsize=1 << 16)
def subspace_contains(a: Subspace, b: Subspace) -> bool:
    """True iff ``b`` is a subspace of ``a``."""
    _check_pair(a, b)
    if b.dim > a.dim:
        return False
    return all(contains_vector(a, v) for v in b.vectors)


@lru_cache(maxsize=1 << 16)
def annihilator(a: Subspace) -> Subspace:
    """``{phi : phi(v) = 0 for all v in a}`` in dual-basis coordinates."""
    if a.is_zero():
        return Subspace.full(a.ambient_dim, a.p)
    return kernel_basis(a.basis)


@lru_cache(maxsize=1 << 16)
def image_of_subspace(m: Matrix, a: Subspace) -> Subspace:
    """``m(a)`` as a subspace of F_p^rows."""
    if m.cols != a.ambient_dim:
        raise DimensionError(f"{m.shape} matrix applied to subspace of F^{a.ambient_dim}")
    return Subspace.span((m.apply(v) for v in a.vectors), m.rows, m.p)


@lru_cache(maxsize=1 << 16)
def preimage(m: Matrix, a: Subspace) -> Subspace:
    """``{v : m v in a}`` as a subspace of F_p^cols."""
    if m.rows != a.ambient_dim:
        raise DimensionError(f"{m.shape} matrix pulled back along subspace of F^{a.ambient_dim}")
    if a.is_full():
        return Subspace.full(m.cols, m.p)
    ann = annihilator(a).basis
    return kernel_basis(ann @ m)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def enumerate_subspaces(ambient_dim: int, p: int | FieldSpec, limits: Limits = DEFAULT_LIMITS) -> list[Subspace]:
    """Every subspace of F_p^n exactly once, sorted by ``(dim, basis bytes)``.

    Generated directly as RREF matrices: choose pivot columns, then fill the
    free entries to the right of each pivot that are not pivot columns.
    """
    if isinstance(p, FieldSpec):
        p = p.p
    _check_p(p)
    if p ** (ambient_dim * ambient_dim) > limits.subspace_work:
        raise CapacityError(
            f"enumerating subspaces of F_{p}^{ambient_dim} exceeds subspace_work={limits.subspace_work}"
        )
    return list(_enumerate_subspaces(ambient_dim, p))


@lru_cache(maxsize=None)
def _enumerate_subspaces(n: int, p: int) -> tuple[Subspace, ...]:
    out = []
    for k in range(n + 1):
        for pivots in itertools.combinations(range(n), k):
            slots = [(i, j) for i, pc in enumerate(pivots) for j in range(pc + 1, n) if j not in pivots]
            for values in itertools.product(range(p), repeat=len(slots)):
                rows = [[0] * n for _ in range(k)]
                for i, pc in enumerate(pivots):
                    rows[i][pc] = 1
                for (i, j), x in zip(slots, values):
                    rows[i][j] = x
                out.append(Subspace(n, Matrix(k, n, tuple(tuple(r) for r in rows), p)))
    out.sort(key=Subspace.sort_key)
    return tuple(out)
