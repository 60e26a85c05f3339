"""Named quivers and the built-in family of adjoint pairs.

Quiver names look like ``a3`` (equioriented path), ``a3:<>`` (one
character per arrow) or ``a2op``. Adjunction specs are either short strings
(``lan-res:1``, ``lan-res:1,2``, ``iso:identity``, ``iso:reverse``,
``iso:2,1``) whose vertex names are quiver labels, or a JSON descriptor
whose vertex indices are 0-based.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .adjunction import (
    AdjointPair,
    _subquiver,
    compose_adjunctions,
    equivalence_from_iso,
    identity_adjunction,
    lan_res_adjunction,
    opposite_adjunction,
)
from .errors import UnsupportedShapeError
from .quiver import Quiver

ADJUNCTION_KINDS = ("lan-res", "iso", "composite", "opposite")

_NAME = re.compile(r"^a(\d+)(op)?(?::([<>]+))?$", re.IGNORECASE)


def builtin_quiver(name: str) -> Quiver:
    m = _NAME.match(name.strip())
    if not m:
        raise ValueError(f"unknown quiver name {name!r}")
    n = int(m.group(1))
    if n < 1:
        raise ValueError("a path quiver needs at least one vertex")
    q = Quiver.linear(n, m.group(3) or "")
    return q.opposite() if m.group(2) else q


def load_quiver(spec: str) -> Quiver:
    """A builtin name, inline JSON, or a path to a JSON file."""
    text = spec.strip()
    if text.startswith("{"):
        return Quiver.from_json(json.loads(text))
    if _NAME.match(text):
        return builtin_quiver(text)
    path = Path(text)
    if not path.exists():
        raise ValueError(f"no quiver file or builtin named {spec!r}")
    return Quiver.from_json(json.loads(path.read_text()))


def vertex_by_label(q: Quiver, token: str) -> int:
    token = token.strip()
    labels = q.vertex_labels()
    if token in labels:
        return labels.index(token)
    raise ValueError(f"quiver has no vertex labelled {token!r} (labels: {', '.join(labels)})")


def _label_list(q: Quiver, text: str) -> list[int]:
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if re.fullmatch(r"\d+-\d+", part) and part not in q.vertex_labels():
            lo, hi = (vertex_by_label(q, x) for x in part.split("-"))
            out.extend(range(min(lo, hi), max(lo, hi) + 1))
        else:
            out.append(vertex_by_label(q, part))
    return out


def parse_adjunction(spec, q: Quiver, p: int) -> AdjointPair:
    """Build an adjoint pair from a short string or a JSON descriptor."""
    if isinstance(spec, str):
        text = spec.strip()
        if text.startswith("{"):
            return adjunction_from_descriptor(json.loads(text), q, p)
        if not text.startswith(("lan-res", "iso")) and Path(text).exists():
            return adjunction_from_descriptor(json.loads(Path(text).read_text()), q, p)
        kind, _, arg = text.partition(":")
        if kind == "lan-res":
            if not arg:
                raise ValueError("lan-res needs a vertex subset, e.g. lan-res:1")
            return lan_res_adjunction(q, _label_list(q, arg), p)
        if kind == "iso":
            if arg in ("", "identity", "id"):
                return identity_adjunction(q, p)
            if arg == "reverse":
                n = q.vertex_count
                return equivalence_from_iso(q, None, [n - 1 - v for v in range(n)], p)
            images = _label_list(q, arg)
            return equivalence_from_iso(q, None, images, p)
        raise ValueError(f"unknown adjunction kind {kind!r}; expected one of {', '.join(ADJUNCTION_KINDS)}")
    return adjunction_from_descriptor(spec, q, p)


def adjunction_from_descriptor(obj: dict, q: Quiver | None, p: int) -> AdjointPair:
    kind = obj.get("kind")
    if "quiver" in obj:
        q = Quiver.from_json(obj["quiver"])
    if kind == "lan-res":
        return lan_res_adjunction(_need(q), [int(v) for v in obj["subset"]], p)
    if kind == "iso":
        target = Quiver.from_json(obj["target"]) if "target" in obj else None
        return equivalence_from_iso(_need(q), target, [int(v) for v in obj["map"]], p)
    if kind == "composite":
        parts = [adjunction_from_descriptor(part, q, p) for part in obj["parts"]]
        if not parts:
            raise ValueError("a composite needs at least one part")
        out = parts[0]
        for nxt in parts[1:]:
            out = compose_adjunctions(out, nxt)
        return out
    if kind == "opposite":
        return opposite_adjunction(adjunction_from_descriptor(obj["of"], q, p))
    raise ValueError(f"unknown adjunction kind {kind!r}; expected one of {', '.join(ADJUNCTION_KINDS)}")


def _need(q: Quiver | None) -> Quiver:
    if q is None:
        raise ValueError("descriptor needs a quiver")
    return q


def contiguous_subsets(q: Quiver) -> list[list[int]]:
    """Vertex intervals ``lo..hi`` of a path, each inducing a type-A subquiver."""
    n = q.vertex_count
    return [list(range(lo, hi + 1)) for lo in range(n) for hi in range(lo, n)]


def builtin_adjunctions(q: Quiver, p: int, opposites: bool = True) -> list[tuple[str, AdjointPair]]:
    """The adjoint pairs exercised by the verification suites on ``q``."""
    out: list[tuple[str, AdjointPair]] = []
    for subset in contiguous_subsets(q):
        name = "lan-res:" + ",".join(q.label(v) for v in subset)
        out.append((name, lan_res_adjunction(q, subset, p)))
    out.append(("iso:identity", identity_adjunction(q, p)))
    n = q.vertex_count
    if n > 1:
        out.append(("iso:reverse", equivalence_from_iso(q, None, [n - 1 - v for v in range(n)], p)))
    if n > 2:
        # Lan along {first vertex} in the full subquiver on all but the last,
        # followed by Lan along that subquiver into q.
        sub, _, _ = _subquiver(q, range(n - 1))
        first = lan_res_adjunction(sub, [0], p)
        out.append((f"composite:lan-res:{q.label(0)}", compose_adjunctions(first, lan_res_adjunction(q, range(n - 1), p))))
    if opposites:
        out.extend((f"opposite({name})", opposite_adjunction(adj)) for name, adj in list(out)
                   if name.startswith("lan-res"))
    return out


def check_shape(q: Quiver) -> None:
    from .indecomposables import is_type_a

    if not is_type_a(q):
        raise UnsupportedShapeError("type-A quiver required: a path whose vertices are numbered 0..n-1 along it")
