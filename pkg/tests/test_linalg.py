import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from preradicals.config import Limits
from preradicals.errors import CapacityError, DimensionError, FieldError
from preradicals.linalg import (
    FieldSpec,
    Matrix,
    Subspace,
    annihilator,
    enumerate_subspaces,
    gaussian_binomial,
    image_basis,
    image_of_subspace,
    kernel_basis,
    preimage,
    rref,
    subspace_contains,
    subspace_intersect,
    subspace_sum,
)

PRIMES = st.sampled_from([2, 3, 5, 7])


@st.composite
def matrices(draw, p=None, max_dim=4):
    p = p or draw(PRIMES)
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(0, max_dim))
    rows = draw(st.lists(st.lists(st.integers(0, p - 1), min_size=c, max_size=c), min_size=r, max_size=r))
    return Matrix.from_rows(rows, p, c)


@st.composite
def subspaces(draw, n, p):
    k = draw(st.integers(0, n + 1))
    vecs = draw(st.lists(st.lists(st.integers(0, p - 1), min_size=n, max_size=n), min_size=k, max_size=k))
    return Subspace.span(vecs, n, p)


def test_rref_collapses_repeated_row():
    m = Matrix.from_rows([[1, 1], [1, 1]], 2)
    r, pivots = rref(m)
    assert r.data == ((1, 1),)
    assert pivots == [0]


def test_kernel_of_row_sum():
    k = kernel_basis(Matrix.from_rows([[1, 1]], 2))
    assert k == Subspace.span([[1, 1]], 2, 2)


def test_annihilator_of_diagonal_is_itself_in_char_two():
    s = Subspace.span([[1, 1]], 2, 2)
    assert annihilator(s) == s


def test_annihilator_over_f3_differs():
    s = Subspace.span([[1, 1]], 2, 3)
    assert annihilator(s) == Subspace.span([[1, 2]], 2, 3)


@pytest.mark.parametrize("p,count", [(2, 5), (3, 6), (5, 8)])
def test_subspace_counts_in_plane(p, count):
    assert len(enumerate_subspaces(2, p)) == count


@pytest.mark.parametrize("n,p", [(3, 2), (3, 3), (4, 2)])
def test_subspace_count_matches_gaussian_binomials(n, p):
    expected = sum(gaussian_binomial(n, k, p) for k in range(n + 1))
    subs = enumerate_subspaces(n, p)
    assert len(subs) == expected
    assert len(set(subs)) == expected


def test_enumeration_respects_work_bound():
    with pytest.raises(CapacityError):
        enumerate_subspaces(4, 3, Limits(subspace_work=100))


def test_non_prime_field_rejected():
    with pytest.raises(FieldError):
        FieldSpec(4)
    with pytest.raises(FieldError):
        Matrix.from_rows([[1]], 6)


def test_shape_mismatch_rejected():
    a = Matrix.from_rows([[1, 0]], 2)
    with pytest.raises(DimensionError):
        a @ a


def test_json_round_trip():
    m = Matrix.from_rows([[1, 2], [0, 1]], 3)
    assert Matrix.from_json(m.to_json(), 3) == m
    s = Subspace.span([[1, 2, 0]], 3, 3)
    assert Subspace.from_json(s.to_json(), 3) == s


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    assert kernel_basis(m).dim + image_basis(m).dim == m.cols


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_kernel_is_annihilated(m):
    for v in kernel_basis(m).vectors:
        assert all(x == 0 for x in m.apply(v))


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_span_is_canonical(data):
    p = data.draw(PRIMES)
    n = data.draw(st.integers(1, 4))
    s = data.draw(subspaces(n, p))
    # Rescaling and reordering the basis gives the same canonical form.
    c = data.draw(st.integers(1, p - 1))
    vecs = [[(c * x) % p for x in v] for v in reversed(s.vectors)]
    assert Subspace.span(vecs, n, p) == s


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_double_annihilator(data):
    p = data.draw(PRIMES)
    n = data.draw(st.integers(0, 4))
    s = data.draw(subspaces(n, p))
    assert annihilator(annihilator(s)) == s
    assert annihilator(s).dim == n - s.dim


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_sum_and_intersection_dimensions(data):
    p = data.draw(PRIMES)
    n = data.draw(st.integers(0, 4))
    a, b = data.draw(subspaces(n, p)), data.draw(subspaces(n, p))
    s, i = subspace_sum(a, b), subspace_intersect(a, b)
    assert s.dim + i.dim == a.dim + b.dim
    assert subspace_contains(s, a) and subspace_contains(s, b)
    assert subspace_contains(a, i) and subspace_contains(b, i)


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_image_and_preimage_adjoint(data):
    p = data.draw(PRIMES)
    m = data.draw(matrices(p=p))
    a = data.draw(subspaces(m.cols, p))
    b = data.draw(subspaces(m.rows, p))
    # f(A) <= B  iff  A <= f^-1(B)
    assert subspace_contains(b, image_of_subspace(m, a)) == subspace_contains(preimage(m, b), a)
