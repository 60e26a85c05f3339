"""Human-readable names for indecomposables and preradicals.

On a two-vertex path the indecomposables get the structural names used for
the path algebra of A2: ``P`` is the two-dimensional one, ``S₁`` the simple
that embeds into ``P`` and ``S₂`` the simple quotient of ``P``. Tables are
written in the slot order ``[value on S₂, value on P, value on S₁]``. These
names come from hom computations, so they do not depend on how the input
quiver numbers or orients its vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import LabelError
from .indecomposables import brick_multiplicity
from .preradical import Category, Preradical
from .quiver import Subrep, hom_basis, sub_to_rep

S1, S2, P = "S₁", "S₂", "P"

# Named elements of the A2 lattice, as slot tuples (S₂, P, S₁).
A2_NAMES: dict[str, tuple[str, str, str]] = {
    "0": ("0", "0", "0"),
    "ρ₁": ("0", S1, "0"),
    "γ₀": (S2, "0", "0"),
    "ω₀^{S₂}": ("0", S1, S1),
    "ξ": (S2, S1, "0"),
    "ι₀": (S2, S1, S1),
    "γ₁": (S2, P, "0"),
    "1": (S2, P, S1),
}

ASCII_ALIASES: dict[str, str] = {
    "zero": "0",
    "0": "0",
    "one": "1",
    "1": "1",
    "top": "1",
    "rho1": "ρ₁",
    "gamma0": "γ₀",
    "gamma1": "γ₁",
    "xi": "ξ",
    "iota0": "ι₀",
    "omega": "ω₀^{S₂}",
    "omega0": "ω₀^{S₂}",
    "alpha": "ω₀^{S₂}",
}

# Alternative spellings accepted on input. "[S₁,P,S₂]" lists the top
# element with the first and third slots swapped; it resolves to 1.
PRINTED_VARIANTS: dict[str, str] = {"[S₁,P,S₂]": "1"}


@dataclass(frozen=True)
class Dictionary:
    """Names for the indecomposables of a category and the slot order of tables."""

    names: tuple[str, ...]
    slots: tuple[int, ...]
    structural_a2: bool = False

    def name(self, i: int) -> str:
        try:
            return self.names[i]
        except IndexError:
            raise LabelError(f"no name for indecomposable {i}") from None


@lru_cache(maxsize=256)
def structural_dictionary(C: Category) -> Dictionary:
    """Structural A2 names when they apply, otherwise interval names in category order."""
    if C.quiver.vertex_count == 2 and len(C.indecs) == 3:
        dims = [sum(N.dims) for N in C.indecs]
        if sorted(dims) == [1, 1, 2]:
            p_idx = dims.index(2)
            Pm = C.indecs[p_idx]
            simples = [i for i in range(3) if i != p_idx]
            sub = [i for i in simples if hom_basis(C.indecs[i], Pm)]
            quo = [i for i in simples if hom_basis(Pm, C.indecs[i])]
            if len(sub) == 1 and len(quo) == 1 and sub != quo:
                names = [""] * 3
                names[p_idx], names[sub[0]], names[quo[0]] = P, S1, S2
                return Dictionary(tuple(names), (quo[0], p_idx, sub[0]), True)
    return Dictionary(tuple(C.name(i) for i in range(len(C.indecs))), tuple(range(len(C.indecs))))


def value_label(C: Category, d: Dictionary, w: Subrep) -> str:
    """``0``, or the names of the indecomposable summands of ``w`` joined by ``⊕``."""
    if w.is_zero():
        return "0"
    R, _ = sub_to_rep(w)
    parts = []
    covered = [0] * len(R.dims)
    for i, N in enumerate(C.indecs):
        m = brick_multiplicity(N, R)
        parts.extend([d.name(i)] * m)
        covered = [c + m * x for c, x in zip(covered, N.dims)]
    if tuple(covered) != R.dims:
        raise LabelError("value has a summand outside the dictionary")
    return "⊕".join(parts)


def slot_labels(pr: Preradical, d: Dictionary | None = None) -> tuple[str, ...]:
    if d is None:
        return _default_slot_labels(pr)
    return tuple(value_label(pr.category, d, pr.values[i]) for i in d.slots)


@lru_cache(maxsize=1 << 16)
def _default_slot_labels(pr: Preradical) -> tuple[str, ...]:
    return slot_labels(pr, structural_dictionary(pr.category))


def label_preradical(pr: Preradical, dictionary: Dictionary | None = None) -> str:
    """Bracket string such as ``[S₂,S₁,0]`` in the dictionary's slot order."""
    return "[" + ",".join(slot_labels(pr, dictionary)) + "]"


def standard_name(pr: Preradical, dictionary: Dictionary | None = None) -> str | None:
    d = dictionary or structural_dictionary(pr.category)
    if not d.structural_a2:
        return None
    slots = slot_labels(pr, dictionary)
    return next((name for name, table in A2_NAMES.items() if table == slots), None)


def display_name(pr: Preradical, dictionary: Dictionary | None = None) -> str:
    return standard_name(pr, dictionary) or label_preradical(pr, dictionary)


def _normalize(text: str) -> str:
    text = text.strip().replace(" ", "")
    for a, b in (("S1", S1), ("S2", S2), ("S_1", S1), ("S_2", S2), ("(+)", "⊕"), ("+", "⊕")):
        text = text.replace(a, b)
    return text


def resolve_label(text: str, prs: list[Preradical], dictionary: Dictionary | None = None) -> Preradical:
    """Find the preradical named by ``text``: a name, an ASCII alias, or a bracket table."""
    if not prs:
        raise LabelError(f"cannot resolve {text!r} in an empty lattice")
    d = dictionary or structural_dictionary(prs[0].category)
    key = text.strip()
    target: str | None = None
    if d.structural_a2:
        name = ASCII_ALIASES.get(key.lower(), key)
        name = PRINTED_VARIANTS.get(_normalize(name), name)
        if name in A2_NAMES:
            target = "[" + ",".join(A2_NAMES[name]) + "]"
    if target is None:
        if not key.startswith("["):
            raise LabelError(f"unknown preradical label {text!r}")
        target = _normalize(key)
    for pr in prs:
        if label_preradical(pr, d) == target:
            return pr
    raise LabelError(f"no preradical with table {target}")


def resolve_indecomposable(text: str, C: Category, dictionary: Dictionary | None = None) -> int:
    """Index of the indecomposable named ``text`` (structural name, interval name, or ``lo,hi``)."""
    d = dictionary or structural_dictionary(C)
    key = _normalize(text)
    for i, name in enumerate(d.names):
        if key == _normalize(name):
            return i
    for i in range(len(C.indecs)):
        if key == _normalize(C.name(i)):
            return i
    if C.intervals is not None:
        raw = key.strip("[]").split(",")
        if len(raw) == 2 and all(r.strip().isdigit() for r in raw):
            lo, hi = (int(r) for r in raw)
            for i, iv in enumerate(C.intervals):
                if (iv.lo, iv.hi) == (lo, hi):
                    return i
    raise LabelError(f"unknown indecomposable {text!r}")
