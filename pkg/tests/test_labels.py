import pytest

from preradicals.builtins import builtin_quiver
from preradicals.errors import LabelError
from preradicals.labels import (
    A2_NAMES,
    display_name,
    label_preradical,
    resolve_indecomposable,
    resolve_label,
    structural_dictionary,
)
from preradicals.preradical import Category, enumerate_preradicals


def test_examples(C2, by_name):
    assert label_preradical(C2.zero()) == "[0,0,0]"
    assert label_preradical(C2.one()) == "[S₂,P,S₁]"
    assert label_preradical(by_name["ξ"]) == "[S₂,S₁,0]"


def test_all_eight_named(prs2):
    assert {display_name(t) for t in prs2} == set(A2_NAMES)


def test_dictionary_is_structural():
    # Reversing the arrow renames the vertices but not the structural labels.
    for name in ("a2", "a2op"):
        C = Category.type_a(builtin_quiver(name), 2)
        d = structural_dictionary(C)
        P = C.indecs[d.names.index("P")]
        assert P.total_dim == 2
        tables = sorted(label_preradical(t) for t in enumerate_preradicals(C))
        assert tables == sorted("[" + ",".join(v) + "]" for v in A2_NAMES.values())


@pytest.mark.parametrize("text,expected", [
    ("rho1", "ρ₁"), ("xi", "ξ"), ("gamma0", "γ₀"), ("iota0", "ι₀"), ("one", "1"),
    ("[S2,S1,0]", "ξ"), ("[S₁,P,S₂]", "1"), ("omega", "ω₀^{S₂}"),
])
def test_resolve_label(prs2, text, expected):
    assert display_name(resolve_label(text, prs2)) == expected


def test_unknown_label(prs2):
    with pytest.raises(LabelError):
        resolve_label("zeta", prs2)


def test_resolve_indecomposable(C2):
    assert C2.indecs[resolve_indecomposable("P", C2)].total_dim == 2
    assert resolve_indecomposable("S1", C2) == resolve_indecomposable("S_1", C2)
    with pytest.raises(LabelError):
        resolve_indecomposable("Q", C2)


def test_a3_falls_back_to_interval_names(prs3):
    assert label_preradical(prs3[-1]).startswith("[M[")
