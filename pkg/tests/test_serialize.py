import json

import pytest

from preradicals.errors import MismatchError
from preradicals.quiver import Quiver
from preradicals.serialize import load_json, preradical_from_json, preradical_to_json

from .conftest import DATA


def test_round_trip_every_a2_preradical(prs2):
    for t in prs2:
        obj = preradical_to_json(t)
        assert preradical_from_json(json.dumps(obj)) == t
        assert preradical_from_json(obj, 2) == t


def test_missing_indecomposable_rejected(prs2):
    obj = preradical_to_json(prs2[3])
    obj["values"] = obj["values"][1:]
    with pytest.raises(MismatchError):
        preradical_from_json(obj)


def test_duplicate_indecomposable_rejected(prs2):
    obj = preradical_to_json(prs2[3])
    obj["values"][1] = obj["values"][0]
    with pytest.raises(MismatchError):
        preradical_from_json(obj)


def test_data_files_load():
    for name in ("a1", "a2", "a3", "a2op"):
        q = Quiver.from_json(load_json(DATA / f"{name}.json"))
        assert q.vertex_count == int(name[1])
