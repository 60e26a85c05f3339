import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from preradicals.builtins import builtin_quiver
from preradicals.config import Limits
from preradicals.errors import CapacityError, MismatchError
from preradicals.labels import label_preradical, resolve_indecomposable
from preradicals.linalg import Subspace
from preradicals.preradical import (
    Category,
    Preradical,
    alpha,
    coproduct,
    delta,
    enumerate_preradicals,
    evaluate,
    is_idempotent,
    is_radical,
    join,
    leq,
    meet,
    omega,
    product,
    reconstruct_from_alpha,
    reconstruct_from_omega,
    validate_naturality,
)
from preradicals.quiver import Subrep, direct_sum, hom_basis

from .strategies import reps


def idx(C, name):
    return resolve_indecomposable(name, C)


def test_a1_has_two(a2):
    C = Category.type_a(builtin_quiver("a1"), 2)
    prs = enumerate_preradicals(C)
    assert prs == [C.zero(), C.one()]


@pytest.mark.parametrize("p", [2, 3, 5])
def test_a2_has_eight(p):
    assert len(enumerate_preradicals(Category.type_a(builtin_quiver("a2"), p))) == 8


def test_enumeration_respects_work_bound(C3):
    with pytest.raises(CapacityError):
        enumerate_preradicals(C3, Limits(preradical_candidates=10))


def test_trivial_tables_are_natural(C2):
    assert validate_naturality(C2.zero())
    assert validate_naturality(C2.one())


def test_value_on_simple_socle_alone_is_not_natural(C2):
    # S₁ kept whole but its image in P dropped: the embedding breaks containment.
    values = [Subrep.zero(N) for N in C2.indecs]
    s1 = idx(C2, "S1")
    values[s1] = Subrep.full(C2.indecs[s1])
    assert not validate_naturality(Preradical(C2, tuple(values)))


def test_mixed_categories_rejected(C2, prs3):
    with pytest.raises(MismatchError):
        leq(C2.zero(), prs3[0])


def test_leq_examples(by_name, prs2, C2):
    assert leq(by_name["ρ₁"], by_name["ξ"])
    assert not leq(by_name["ξ"], by_name["ω₀^{S₂}"])
    for t in prs2:
        assert leq(C2.zero(), t) and leq(t, C2.one())


def test_evaluate_on_sum(by_name, C2):
    P, S1 = C2.indecs[idx(C2, "P")], C2.indecs[idx(C2, "S1")]
    X, incs, _ = direct_sum([P, S1])
    got = evaluate(by_name["ρ₁"], X)
    # socle of P, nothing from the S₁ summand
    assert got.dims == (0, 1)
    (inc_p, inc_s) = incs
    assert Subspace.span([inc_p.components[1].column(0)], 2, 2) == got.spaces[1]
    assert evaluate(C2.one(), X).is_full()
    assert evaluate(C2.zero(), X).is_zero()


def test_product_examples(by_name):
    assert label_preradical(product(by_name["ρ₁"], by_name["ρ₁"])) == "[0,0,0]"
    assert product(by_name["ι₀"], by_name["ι₀"]) == by_name["ι₀"]


def test_coproduct_examples(by_name, C2):
    xx = coproduct(by_name["ξ"], by_name["ξ"])
    assert xx.values[idx(C2, "P")].is_full()
    assert coproduct(by_name["ρ₁"], by_name["ρ₁"]) == by_name["ρ₁"]


def test_marks_match_oracle(prs2, oracle):
    tables = {label_preradical(t): t for t in prs2}
    for name, table in oracle["tables"].items():
        t = tables[table]
        assert is_idempotent(t) == (name in oracle["idempotent"]), name
        assert is_radical(t) == (name in oracle["radical"]), name


def test_join_meet_examples(by_name):
    assert join([by_name["ρ₁"], by_name["γ₀"]]) == by_name["ξ"]
    assert meet([by_name["ι₀"], by_name["γ₁"]]) == by_name["ξ"]


def test_empty_join_needs_category(C2):
    assert join([], C2) == C2.zero()
    assert meet([], C2) == C2.one()
    with pytest.raises(ValueError):
        join([])


def test_alpha_and_omega_of_identity_on_p(C2, by_name):
    one_p = C2.indecs[idx(C2, "P")].identity()
    assert alpha(one_p, C2) == by_name["γ₁"]
    assert omega(one_p, C2) == by_name["γ₀"]


def test_alpha_of_simple_identity(C2):
    s1 = C2.indecs[idx(C2, "S1")].identity()
    s2 = C2.indecs[idx(C2, "S2")].identity()
    assert label_preradical(alpha(s1, C2)) == "[0,S₁,S₁]"
    assert label_preradical(omega(s2, C2)) == "[0,S₁,S₁]"


def test_alpha_of_zero_map_is_zero(C2):
    P = C2.indecs[idx(C2, "P")]
    assert alpha(P.zero_morphism(P), C2) == C2.zero()
    assert omega(P.zero_morphism(P), C2) == C2.one()


def test_delta_is_an_involution(prs2):
    for t in prs2:
        d = delta(t)
        assert d.category.quiver == t.category.quiver.opposite()
        assert delta(d) == t


def test_reconstructions_on_a3(prs3):
    for t in prs3:
        assert reconstruct_from_alpha(t) == t
        assert reconstruct_from_omega(t) == t


@pytest.mark.parametrize("name", ["a3:<>", "a3:><"])
def test_other_orientations_of_a3(name):
    prs = enumerate_preradicals(Category.type_a(builtin_quiver(name), 2))
    assert len(prs) == 69
    assert len({t for t in prs}) == 69


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_evaluate_is_additive(data):
    C = Category.type_a(builtin_quiver("a3"), 2)
    prs = enumerate_preradicals(C)
    t = data.draw(st.sampled_from(prs))
    X = data.draw(reps(quiver=C.quiver, p=2, max_dim=1))
    Y = data.draw(reps(quiver=C.quiver, p=2, max_dim=1))
    S, incs, projs = direct_sum([X, Y])
    got = evaluate(t, S)
    for inc, proj, part in zip(incs, projs, (X, Y)):
        from preradicals.quiver import image_of_subrep

        assert image_of_subrep(proj, got) == evaluate(t, part)


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_evaluate_commutes_with_morphisms(data):
    C = Category.type_a(builtin_quiver("a2"), 3)
    t = data.draw(st.sampled_from(enumerate_preradicals(C)))
    X = data.draw(reps(quiver=C.quiver, p=3))
    Y = data.draw(reps(quiver=C.quiver, p=3))
    from preradicals.quiver import image_of_subrep, subrep_contains

    for f in hom_basis(X, Y):
        assert subrep_contains(evaluate(t, Y), image_of_subrep(f, evaluate(t, X)))


def test_binary_operations_are_closed_on_a3(prs3):
    index = set(prs3)
    for s, t in itertools.product(prs3[::5], prs3):
        assert product(s, t) in index
        assert coproduct(s, t) in index
