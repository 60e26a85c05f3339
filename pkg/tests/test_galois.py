import pytest

from preradicals.adjunction import identity_adjunction, lan_res_adjunction
from preradicals.builtins import builtin_adjunctions, builtin_quiver
from preradicals.galois import GROUPS, check_galois, check_generators, check_squares
from preradicals.preradical import enumerate_preradicals


@pytest.fixture(scope="module")
def lan1():
    return lan_res_adjunction(builtin_quiver("a2"), [0], 2)


def test_identity_passes_every_group(a2):
    rep = check_galois(identity_adjunction(a2, 2))
    assert rep.ok
    for group in GROUPS:
        assert rep.group_ok(group), group
    assert rep.phi_table == enumerate_preradicals(identity_adjunction(a2, 2).source_category)


def test_lan_res_on_a2(lan1):
    rep = check_galois(lan1)
    assert rep.ok, rep.render()
    assert len(rep.phi_table) == 2 and len(rep.psi_table) == 8


def test_generators_and_squares(lan1):
    assert check_generators(lan1).ok
    assert check_squares(lan1).ok


def test_truncated_target_is_reported(lan1):
    PrA = enumerate_preradicals(lan1.source_category)
    PrB = enumerate_preradicals(lan1.target_category)
    # phi(0) = 0, so dropping the bottom element breaks closure
    rep = check_galois(lan1, PrA, PrB[1:])
    assert not rep.ok
    assert not rep.group_ok("closure of values")


@pytest.mark.parametrize("subset", [[0], [1], [2], [0, 1], [1, 2]])
def test_lan_res_on_a3(a3, subset):
    rep = check_galois(lan_res_adjunction(a3, subset, 2))
    assert rep.ok, rep.render()


def test_disconnected_subset_rejected(a3):
    from preradicals.errors import UnsupportedShapeError

    with pytest.raises(UnsupportedShapeError):
        lan_res_adjunction(a3, [0, 2], 2)


def test_builtin_family_on_a3_over_f3():
    q = builtin_quiver("a3:<>")
    for name, adj in builtin_adjunctions(q, 3, opposites=False):
        assert check_galois(adj).ok, name
