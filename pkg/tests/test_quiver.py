import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from preradicals.builtins import builtin_quiver
from preradicals.errors import DimensionError, IntertwiningError, InvalidSubrepError
from preradicals.indecomposables import Interval, interval_rep, is_isomorphic
from preradicals.linalg import Matrix, Subspace
from preradicals.quiver import (
    Quiver,
    Rep,
    RepMorphism,
    Subrep,
    direct_sum,
    dual_morphism,
    dual_rep,
    enumerate_subreps,
    hom_basis,
    hom_dim,
    image_subrep,
    kernel_subrep,
    linear_combination,
    quotient_rep,
    sub_to_rep,
)

from .strategies import reps


@pytest.fixture(scope="module")
def q():
    return builtin_quiver("a2")


@pytest.fixture(scope="module")
def M(q):
    def make(lo, hi, p=2):
        return interval_rep(q, Interval(lo - 1, hi - 1), p)

    return make


def test_cyclic_quiver_rejected():
    with pytest.raises(ValueError):
        Quiver(2, ((0, 1), (1, 0)))


def test_arrow_map_shape_checked(q):
    with pytest.raises(DimensionError):
        Rep(q, (1, 1), (Matrix.zeros(2, 1, 2),), 2)


def test_non_intertwining_morphism_rejected(M):
    P, S = M(1, 2), M(2, 2)
    # (1, 0) on P -> P fails to commute with the identity arrow map.
    with pytest.raises(IntertwiningError):
        RepMorphism(P, P, (Matrix.identity(1, 2), Matrix.zeros(1, 1, 2)))
    assert S.total_dim == 1


def test_hom_of_simple_is_one_dimensional(M):
    assert hom_dim(M(1, 1), M(1, 1)) == 1
    assert hom_dim(M(2, 2), M(2, 2)) == 1


def test_hom_dimensions_on_a2(M):
    assert hom_dim(M(1, 2), M(1, 1)) == 1
    assert hom_basis(M(1, 1), M(2, 2)) == ()
    assert hom_dim(M(2, 2), M(1, 2)) == 1
    assert hom_dim(M(1, 1), M(1, 2)) == 0


def test_image_of_projection_onto_top(M):
    (f,) = hom_basis(M(1, 2), M(1, 1))
    im = image_subrep(f)
    assert im.is_full()
    assert kernel_subrep(f).dims == (0, 1)


def test_kernel_of_identity_and_image_of_zero(M):
    P = M(1, 2)
    assert kernel_subrep(P.identity()).is_zero()
    assert image_subrep(P.zero_morphism(P)).is_zero()


def test_sub_and_quotient_of_interval(M, q):
    P = M(1, 2)
    w = Subrep(P, (Subspace.zero(1, 2), Subspace.full(1, 2)))
    R, inc = sub_to_rep(w)
    assert is_isomorphic(R, M(2, 2))
    assert inc.is_mono()
    Q, proj = quotient_rep(P, w)
    assert is_isomorphic(Q, M(1, 1))
    assert proj.is_epi()
    assert quotient_rep(P, Subrep.full(P))[0].is_zero()
    assert sub_to_rep(Subrep.zero(P))[0].is_zero()


def test_non_invariant_family_rejected(M):
    P = M(1, 2)
    with pytest.raises(InvalidSubrepError):
        Subrep(P, (Subspace.full(1, 2), Subspace.zero(1, 2)))


def test_direct_sum_of_simples(M, q):
    S, incs, projs = direct_sum([M(1, 1), M(2, 2)])
    assert S.dims == (1, 1)
    assert S.arrow_maps[0].is_zero()
    for i, pr in zip(incs, projs):
        assert (pr @ i) == i.source.identity()
    empty, _, _ = direct_sum([], q, 2)
    assert empty.is_zero()


def test_subreps_of_interval(M):
    assert len(enumerate_subreps(M(1, 2))) == 3
    assert len(enumerate_subreps(M(1, 1))) == 2


def test_subreps_of_zero(q):
    assert len(enumerate_subreps(Rep.zero(q, 2))) == 1


def test_dual_reverses_arrows(M, q):
    P = M(1, 2)
    D = dual_rep(P)
    assert D.quiver == q.opposite()
    assert D.arrow_maps[0] == Matrix.identity(1, 2)
    w = Subrep(P, (Subspace.zero(1, 2), Subspace.full(1, 2)))
    _, inc = sub_to_rep(w)
    assert dual_morphism(inc).is_epi()


def test_json_round_trip(M, q):
    P = M(1, 2)
    assert Rep.from_json(P.to_json(), q, 2) == P
    (f,) = hom_basis(M(1, 2), M(1, 1))
    assert RepMorphism.from_json(f.to_json(), q, 2) == f


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_random_compositions_intertwine(data):
    X = data.draw(reps())
    Y = data.draw(reps(quiver=X.quiver, p=X.p))
    Z = data.draw(reps(quiver=X.quiver, p=X.p))
    fs, gs = hom_basis(X, Y), hom_basis(Y, Z)
    if fs and gs:
        f = linear_combination(fs, data.draw(st.lists(st.integers(0, X.p - 1), min_size=len(fs), max_size=len(fs))), X, Y)
        g = linear_combination(gs, data.draw(st.lists(st.integers(0, X.p - 1), min_size=len(gs), max_size=len(gs))), Y, Z)
        # RepMorphism validates commutation on construction
        RepMorphism(X, Z, (g @ f).components)


@settings(max_examples=60, deadline=None)
@given(reps())
def test_double_dual_is_identity(X):
    assert dual_rep(dual_rep(X)) == X


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_hom_is_additive_over_sums(data):
    X = data.draw(reps(max_dim=1))
    Y = data.draw(reps(quiver=X.quiver, p=X.p, max_dim=1))
    Z = data.draw(reps(quiver=X.quiver, p=X.p, max_dim=1))
    S, _, _ = direct_sum([X, Y])
    assert hom_dim(S, Z) == hom_dim(X, Z) + hom_dim(Y, Z)


@settings(max_examples=40, deadline=None)
@given(reps(max_dim=2))
def test_kernel_plus_image_dimension(X):
    for f in hom_basis(X, X)[:3]:
        k, i = kernel_subrep(f), image_subrep(f)
        assert [a + b for a, b in zip(k.dims, i.dims)] == list(X.dims)
