"""Finite lattices of preradicals: Hasse diagrams, law checks and DOT/JSON output."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import ClosureError
from .labels import Dictionary, display_name, label_preradical, structural_dictionary
from .preradical import Preradical, is_idempotent, is_radical, join, leq, meet
from .report import Report


@dataclass
class Hasse:
    """Nodes, cover pairs ``(lower, upper)`` and idempotent/radical marks.

    ``closure`` records how the node set was validated: ``"operations"``
    means closed under the vertexwise join and meet, ``"order"`` means a
    lattice only for the induced order (as for the idempotent elements).
    """

    nodes: list[Preradical]
    covers: list[tuple[int, int]]
    idempotent: list[int]
    radical: list[int]
    labels: list[str]
    names: list[str] = field(default_factory=list)
    closure: str = "operations"

    def __len__(self) -> int:
        return len(self.nodes)

    def index(self, pr: Preradical) -> int:
        return self.nodes.index(pr)

    def reachability(self) -> list[list[bool]]:
        """Reflexive-transitive closure of the cover relation."""
        n = len(self.nodes)
        up: list[list[int]] = [[] for _ in range(n)]
        for a, b in self.covers:
            up[a].append(b)
        reach = [[False] * n for _ in range(n)]
        for i in range(n):
            stack = [i]
            while stack:
                v = stack.pop()
                if not reach[i][v]:
                    reach[i][v] = True
                    stack.extend(up[v])
        return reach

    def heights(self) -> list[int]:
        """Length of the longest chain from a minimal node."""
        n = len(self.nodes)
        down: list[list[int]] = [[] for _ in range(n)]
        for a, b in self.covers:
            down[b].append(a)
        h: dict[int, int] = {}

        def height(v: int) -> int:
            if v not in h:
                h[v] = 1 + max((height(u) for u in down[v]), default=-1)
            return h[v]

        return [height(v) for v in range(n)]


def _order_matrix(prs: list[Preradical]) -> list[list[bool]]:
    return [[leq(a, b) for b in prs] for a in prs]


def _transitive_reduction(le: list[list[bool]]) -> list[tuple[int, int]]:
    n = len(le)
    covers = []
    for a in range(n):
        for b in range(n):
            if a == b or not le[a][b]:
                continue
            if not any(k not in (a, b) and le[a][k] and le[k][b] for k in range(n)):
                covers.append((a, b))
    return covers


def _bounds(le: list[list[bool]], a: int, b: int, upper: bool) -> int | None:
    n = len(le)
    if upper:
        cands = [k for k in range(n) if le[a][k] and le[b][k]]
        best = [k for k in cands if all(le[k][m] for m in cands)]
    else:
        cands = [k for k in range(n) if le[k][a] and le[k][b]]
        best = [k for k in cands if all(le[m][k] for m in cands)]
    return best[0] if len(best) == 1 else None


def build_poset(prs: list[Preradical], closure: str = "operations",
                dictionary: Dictionary | None = None) -> Hasse:
    """Hasse diagram of a finite family, after checking it forms a lattice.

    With ``closure="operations"`` every pairwise join and meet must lie in the
    family; with ``closure="order"`` every pair needs a least upper and a
    greatest lower bound inside the family.
    """
    prs = list(prs)
    if len(set(prs)) != len(prs):
        raise ClosureError("preradicals are not pairwise distinct")
    if not prs:
        raise ClosureError("a lattice needs at least one element")
    index = {pr: i for i, pr in enumerate(prs)}
    le = _order_matrix(prs)
    for a, b in itertools.combinations(range(len(prs)), 2):
        if closure == "operations":
            for op, name in ((join, "join"), (meet, "meet")):
                if op([prs[a], prs[b]]) not in index:
                    raise ClosureError(f"{name} of nodes {a} and {b} is outside the family", (a, b))
        elif closure == "order":
            if _bounds(le, a, b, True) is None or _bounds(le, a, b, False) is None:
                raise ClosureError(f"nodes {a} and {b} lack a least upper or greatest lower bound", (a, b))
        else:
            raise ValueError(f"unknown closure mode {closure!r}")
    d = dictionary or structural_dictionary(prs[0].category)
    return Hasse(
        nodes=prs,
        covers=_transitive_reduction(le),
        idempotent=[i for i, pr in enumerate(prs) if is_idempotent(pr)],
        radical=[i for i, pr in enumerate(prs) if is_radical(pr)],
        labels=[label_preradical(pr, d) for pr in prs],
        names=[display_name(pr, d) for pr in prs],
        closure=closure,
    )


def sublattice(h: Hasse, which: str) -> Hasse:
    """The idempotent or radical elements with their induced order."""
    keep = {"idempotent": h.idempotent, "radical": h.radical}[which]
    return build_poset([h.nodes[i] for i in keep], closure="order")


def verify_lattice_laws(h: Hasse, galois=None) -> Report:
    """Check the cover set and the lattice laws of the order it generates.

    ``galois`` is an optional ``(adjunction, target_hasse)``; then ``phi``
    must preserve joins over ``h`` and ``psi`` meets over the target.
    """
    from .adjunction import phi, psi

    rep = Report("lattice laws")
    n = len(h.nodes)
    reach = h.reachability()
    le = _order_matrix(h.nodes)
    for a in range(n):
        for b in range(n):
            rep.record("reachability equals leq", reach[a][b] == le[a][b],
                       f"{h.labels[a]} vs {h.labels[b]}")
    for a, b in h.covers:
        redundant = a == b or any(k not in (a, b) and reach[a][k] and reach[k][b] for k in range(n))
        rep.record("covers irredundant", not redundant, f"{h.labels[a]} < {h.labels[b]}")

    jt = [[_bounds(reach, a, b, True) for b in range(n)] for a in range(n)]
    mt = [[_bounds(reach, a, b, False) for b in range(n)] for a in range(n)]
    for a, b in itertools.product(range(n), repeat=2):
        pair = f"({h.labels[a]}, {h.labels[b]})"
        j, m = jt[a][b], mt[a][b]
        rep.record("bounds exist", j is not None and m is not None, pair)
        if j is None or m is None:
            continue
        rep.record("join commutative", j == jt[b][a], pair)
        rep.record("meet commutative", m == mt[b][a], pair)
        rep.record("absorption", jt[a][m] == a and mt[a][j] == a, pair)
        if h.closure == "operations":
            rep.record("join table matches vertexwise sum", h.nodes[j] == join([h.nodes[a], h.nodes[b]]), pair)
            rep.record("meet table matches vertexwise intersection",
                       h.nodes[m] == meet([h.nodes[a], h.nodes[b]]), pair)
    for a, b, c in itertools.product(range(n), repeat=3):
        x, y = jt[a][b], jt[b][c]
        if x is None or y is None:
            continue
        rep.record("join associative", jt[x][c] == jt[a][y], f"{a},{b},{c}")
        x, y = mt[a][b], mt[b][c]
        if x is not None and y is not None:
            rep.record("meet associative", mt[x][c] == mt[a][y], f"{a},{b},{c}")

    if galois is not None:
        adj, target = galois
        ph = [phi(adj, t) for t in h.nodes]
        for a, b in itertools.combinations(range(n), 2):
            rep.record("phi preserves joins",
                       phi(adj, join([h.nodes[a], h.nodes[b]])) == join([ph[a], ph[b]]),
                       f"({h.labels[a]}, {h.labels[b]})")
        ps = [psi(adj, s) for s in target.nodes]
        for a, b in itertools.combinations(range(len(target.nodes)), 2):
            rep.record("psi preserves meets",
                       psi(adj, meet([target.nodes[a], target.nodes[b]])) == meet([ps[a], ps[b]]),
                       f"({target.labels[a]}, {target.labels[b]})")
    return rep


@dataclass(frozen=True)
class DotStyle:
    """Node styling; idempotent and radical marks combine."""

    font: str = "Helvetica"
    plain_shape: str = "ellipse"
    idempotent_fill: str = "#f4cccc"
    radical_peripheries: int = 2
    show_tables: bool = True

    @classmethod
    def from_mapping(cls, style) -> "DotStyle":
        if isinstance(style, cls):
            return style
        return cls(**dict(style or {}))


def _quote(text: str) -> str:
    return '"' + text.replace('"', '\\"') + '"'


def to_dot(h: Hasse, style=None) -> str:
    """Deterministic DOT digraph, bottom to top, one rank per lattice height."""
    st = DotStyle.from_mapping(style)
    heights = h.heights()
    idem, rad = set(h.idempotent), set(h.radical)
    lines = [
        "digraph lattice {",
        "  rankdir=BT;",
        f"  node [fontname={_quote(st.font)}, shape={st.plain_shape}];",
    ]
    for level in sorted(set(heights)):
        members = " ".join(f"n{i};" for i in range(len(h.nodes)) if heights[i] == level)
        lines.append(f"  {{ rank=same; {members} }}")
    for i in range(len(h.nodes)):
        name = h.names[i] if h.names else h.labels[i]
        text = name if (not st.show_tables or name == h.labels[i]) else f"{name}\\n{h.labels[i]}"
        attrs = [f"label={_quote(text)}"]
        if i in idem:
            attrs += ["style=filled", f"fillcolor={_quote(st.idempotent_fill)}"]
        if i in rad:
            attrs.append(f"peripheries={st.radical_peripheries}")
        lines.append(f"  n{i} [{', '.join(attrs)}];")
    for a, b in sorted(h.covers):
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(h: Hasse) -> dict:
    return {
        "nodes": list(h.labels),
        "names": list(h.names),
        "covers": [list(c) for c in sorted(h.covers)],
        "idempotent": list(h.idempotent),
        "radical": list(h.radical),
    }


def to_table(h: Hasse) -> str:
    """Plain-text listing: index, marks, name and value table per node."""
    idem, rad = set(h.idempotent), set(h.radical)
    width = max((len(n) for n in h.names), default=0)
    rows = []
    for i, pr in enumerate(h.nodes):
        marks = ("I" if i in idem else "-") + ("R" if i in rad else "-")
        rows.append(f"{i:3d}  {marks}  {h.names[i]:<{width}}  {h.labels[i]}")
    return "\n".join(rows)
