import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from preradicals.adjunction import (
    compose_adjunctions,
    counit,
    equivalence_from_iso,
    hom_bijection_holds,
    identity_adjunction,
    lan_res_adjunction,
    opposite_adjunction,
    phi,
    psi,
    unit,
)
from preradicals.builtins import adjunction_from_descriptor, builtin_adjunctions, builtin_quiver, parse_adjunction
from preradicals.errors import MismatchError
from preradicals.galois import check_adjunction, check_equivalence, check_galois
from preradicals.indecomposables import Interval, interval_rep, is_isomorphic
from preradicals.labels import label_preradical
from preradicals.preradical import enumerate_preradicals
from preradicals.quiver import Rep

from .strategies import reps


@pytest.fixture(scope="module")
def lan1():
    return lan_res_adjunction(builtin_quiver("a2"), [0], 2)


@pytest.fixture(scope="module")
def K(lan1):
    return interval_rep(lan1.F.source, Interval(0, 0), 2)


def test_lan_of_point_at_source_is_projective(lan1, K, a2):
    assert is_isomorphic(lan1.F(K), interval_rep(a2, Interval(0, 1), 2))


def test_lan_of_point_at_sink_is_simple(a2):
    adj = lan_res_adjunction(a2, [1], 2)
    V = interval_rep(adj.F.source, Interval(0, 0), 2)
    assert is_isomorphic(adj.F(V), interval_rep(a2, Interval(1, 1), 2))


def test_lan_of_zero(lan1):
    assert lan1.F(Rep.zero(lan1.F.source, 2)).is_zero()


def test_unit_at_point_is_identity(lan1, K):
    assert unit(lan1, K).is_iso()
    assert unit(lan1, K) == K.identity()


def test_counit_examples(lan1, a2):
    S = interval_rep(a2, Interval(1, 1), 2)
    e = counit(lan1, S)
    assert e.source.is_zero() and e.is_zero()
    P = interval_rep(a2, Interval(0, 1), 2)
    e = counit(lan1, P)
    assert e.is_iso()


def test_unit_rejects_wrong_category(lan1, a2):
    with pytest.raises(MismatchError):
        unit(lan1, interval_rep(a2, Interval(0, 0), 2))


def test_phi_of_top_is_trace_of_projective(lan1):
    A = lan1.source_category
    assert label_preradical(phi(lan1, A.one())) == "[S₂,P,0]"


def test_psi_of_zero_on_vect_is_zero(lan1):
    B = lan1.target_category
    assert psi(lan1, B.zero()) == lan1.source_category.zero()


def test_identity_adjunction_is_trivial(prs2, a2):
    adj = identity_adjunction(a2, 2)
    for t in prs2:
        assert phi(adj, t) == t and psi(adj, t) == t


def test_reverse_relabelling_is_an_equivalence(a2):
    adj = equivalence_from_iso(a2, None, [1, 0], 2)
    assert adj.F.target.arrows == ((1, 0),)
    assert check_equivalence(adj).ok
    assert check_adjunction(adj).ok


def test_opposite_of_identity_acts_as_identity(a2):
    op = opposite_adjunction(identity_adjunction(a2, 2))
    for t in enumerate_preradicals(op.source_category):
        assert phi(op, t) == t


def test_opposite_of_lan_res_swaps_roles(lan1):
    op = opposite_adjunction(lan1)
    assert op.F.source == lan1.G.source.opposite()
    assert op.G.source == lan1.F.source.opposite()
    assert check_adjunction(op).ok


def test_composite_on_a3(a3):
    name, adj = next((n, a) for n, a in builtin_adjunctions(a3, 2) if n.startswith("composite"))
    assert check_adjunction(adj).ok
    assert check_galois(adj).ok


def test_reverse_twice_is_identity(a3):
    rev = equivalence_from_iso(a3, None, [2, 1, 0], 2)
    back = equivalence_from_iso(rev.F.target, None, [2, 1, 0], 2)
    both = compose_adjunctions(rev, back)
    for t in enumerate_preradicals(both.source_category):
        assert phi(both, t) == t


def test_parse_short_specs(a2):
    assert parse_adjunction("lan-res:1", a2, 2).kind == "lan-res"
    assert parse_adjunction("iso:identity", a2, 2).kind == "iso"
    assert parse_adjunction("iso:2,1", a2, 2).kind == "iso"
    with pytest.raises(ValueError):
        parse_adjunction("lan-res:7", a2, 2)
    with pytest.raises(ValueError):
        parse_adjunction("ran-res:1", a2, 2)


def test_descriptor_round_trip(lan1, a2):
    again = adjunction_from_descriptor(lan1.descriptor, None, 2)
    assert again.F.source == lan1.F.source
    nested = adjunction_from_descriptor({"kind": "opposite", "of": lan1.descriptor}, None, 2)
    assert nested.kind == "opposite"
    with pytest.raises(ValueError):
        adjunction_from_descriptor({"kind": "tensor"}, a2, 2)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_hom_bijection_on_random_objects(data):
    q = builtin_quiver(data.draw(st.sampled_from(["a2", "a3", "a3:<>"])))
    subset = data.draw(st.sampled_from([[0], [1], [0, 1], list(range(q.vertex_count))]))
    adj = lan_res_adjunction(q, subset, 2)
    A = data.draw(reps(quiver=adj.F.source, p=2, max_dim=2))
    B = data.draw(reps(quiver=q, p=2, max_dim=1))
    assert hom_bijection_holds(adj, A, B)


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_triangles_on_random_objects(data):
    from preradicals.adjunction import check_triangles

    q = builtin_quiver(data.draw(st.sampled_from(["a2", "a3", "a3:><"])))
    subset = data.draw(st.sampled_from([[0], [q.vertex_count - 1], [0, 1]]))
    adj = lan_res_adjunction(q, subset, 2)
    A = data.draw(reps(quiver=adj.F.source, p=2, max_dim=2))
    B = data.draw(reps(quiver=q, p=2, max_dim=2))
    assert check_triangles(adj, [A], [B])
