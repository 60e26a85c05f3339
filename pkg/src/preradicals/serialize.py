"""JSON encodings for quivers, representations, preradicals and adjunction descriptors."""

from __future__ import annotations

import json
from pathlib import Path

from .errors import MismatchError
from .indecomposables import Interval
from .linalg import Subspace
from .preradical import Category, Preradical
from .quiver import Quiver, Subrep


def load_json(source) -> object:
    """Parse inline JSON text, or read it from a file path."""
    if isinstance(source, (dict, list)):
        return source
    text = str(source).strip()
    if text.startswith("{") or text.startswith("["):
        return json.loads(text)
    return json.loads(Path(text).read_text())


def quiver_from_json(obj) -> Quiver:
    return Quiver.from_json(load_json(obj))


def preradical_to_json(pr: Preradical) -> dict:
    C = pr.category
    if C.intervals is None:
        raise MismatchError("JSON encoding is defined for type-A categories only")
    return {
        "quiver": C.quiver.to_json(),
        "field": C.p,
        "values": [
            {"indec": iv.to_json(), "spaces": [s.to_json() for s in w.spaces]}
            for iv, w in zip(C.intervals, pr.values)
        ],
    }


def preradical_from_json(obj, p: int | None = None) -> Preradical:
    obj = load_json(obj)
    q = Quiver.from_json(obj["quiver"])
    p = int(obj.get("field", p if p is not None else 2))
    C = Category.type_a(q, p)
    by_interval = {Interval.from_json(v["indec"]): v["spaces"] for v in obj["values"]}
    if set(by_interval) != set(C.intervals):
        raise MismatchError("preradical JSON does not list every indecomposable exactly once")
    values = []
    for iv, N in zip(C.intervals, C.indecs):
        spaces = tuple(Subspace.from_json(s, p) for s in by_interval[iv])
        values.append(Subrep(N, spaces))
    return Preradical(C, tuple(values))
