"""The covering-edge poset on the standard Jordan basis of a partition.

Vertices are triples ``(u, p, k)``: position ``u`` within a row of length
``p`` (the *level*), in the ``k``-th row of that level.  The covering
edges come in four families:

* ``e``     -- within a level, from row k to row k+1 at the same position;
* ``beta``  -- from the top row of a level to the bottom row of the next
               smaller level, at the same position;
* ``alpha`` -- from the top row of a level to the bottom row of the next
               larger level, shifted right by the length difference;
* ``omega`` -- within an *isolated* level (both neighboring levels, where
               present, differ by more than one), stepping one position to
               the right from the top row to the bottom row.

The partial order is the reflexive-transitive closure of the covers.
"""
from __future__ import annotations

import json
from typing import Iterable

from .errors import VertexNotInPoset
from .partitions import Partition

Vertex = tuple[int, int, int]


def sort_key(v: Vertex) -> tuple[int, int, int]:
    """Deterministic vertex order: by level, then row, then position."""
    u, p, k = v
    return (p, k, u)


def vertex_list(P: Partition) -> list[Vertex]:
    """All basis triples of P in the canonical order."""
    out: list[Vertex] = []
    for p in P.distinct_parts():
        for k in range(1, P.mult(p) + 1):
            for u in range(1, p + 1):
                out.append((u, p, k))
    return out


def _is_isolated(levels: tuple[int, ...], i: int) -> bool:
    """Whether levels[i] has no neighboring level within distance one.

    Missing neighbors (extremal levels) count as infinitely far away, so a
    single-level partition is isolated.
    """
    p = levels[i]
    below_ok = i == 0 or p - levels[i - 1] > 1
    above_ok = i == len(levels) - 1 or levels[i + 1] - p > 1
    return below_ok and above_ok


class Poset:
    """Covering digraph of a partition's basis poset plus its closure.

    Immutable after construction; all queries are pure.
    """

    def __init__(self, vertices: Iterable[Vertex], covers: Iterable[tuple[Vertex, Vertex]]):
        self.vertices: tuple[Vertex, ...] = tuple(sorted(set(vertices), key=sort_key))
        self.covers: tuple[tuple[Vertex, Vertex], ...] = tuple(
            sorted(set(covers), key=lambda e: (sort_key(e[0]), sort_key(e[1])))
        )
        vset = set(self.vertices)
        for a, b in self.covers:
            if a not in vset or b not in vset:
                raise VertexNotInPoset(f"cover ({a}, {b}) uses unknown vertices")
        self._vset = vset
        adj: dict[Vertex, list[Vertex]] = {v: [] for v in self.vertices}
        for a, b in self.covers:
            adj[a].append(b)
        # strictly-above sets by DFS from each vertex
        up: dict[Vertex, frozenset[Vertex]] = {}
        for v in self.vertices:
            seen: set[Vertex] = set()
            stack = list(adj[v])
            while stack:
                w = stack.pop()
                if w not in seen:
                    seen.add(w)
                    stack.extend(adj[w])
            if v in seen:
                raise ValueError(f"covering digraph has a cycle through {v}")
            up[v] = frozenset(seen)
        self._up = up

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: Vertex) -> bool:
        return v in self._vset

    def less(self, v: Vertex, w: Vertex) -> bool:
        """Strict order: v < w."""
        self._check(v)
        self._check(w)
        return w in self._up[v]

    def leq(self, v: Vertex, w: Vertex) -> bool:
        self._check(v)
        self._check(w)
        return v == w or w in self._up[v]

    def above(self, v: Vertex) -> frozenset[Vertex]:
        """All vertices strictly above v."""
        self._check(v)
        return self._up[v]

    def is_chain(self, S: Iterable[Vertex]) -> bool:
        """True iff every pair of S is comparable (empty sets vacuously so)."""
        elems = list(set(S))
        for v in elems:
            self._check(v)
        for i, v in enumerate(elems):
            for w in elems[i + 1:]:
                if not (self.less(v, w) or self.less(w, v)):
                    return False
        return True

    def _check(self, v: Vertex) -> None:
        if v not in self._vset:
            raise VertexNotInPoset(f"{v} is not a vertex of this poset")


def build_poset(P: Partition) -> Poset:
    """Construct the basis poset of P with its four covering-edge families."""
    levels = P.distinct_parts()
    covers: list[tuple[Vertex, Vertex]] = []

    for p in levels:
        m = P.mult(p)
        for k in range(1, m):
            for u in range(1, p + 1):
                covers.append(((u, p, k), (u, p, k + 1)))

    for i in range(1, len(levels)):
        hi, lo = levels[i], levels[i - 1]
        for u in range(1, lo + 1):
            covers.append(((u, hi, P.mult(hi)), (u, lo, 1)))

    for i in range(len(levels) - 1):
        lo, hi = levels[i], levels[i + 1]
        for u in range(1, lo + 1):
            covers.append(((u, lo, P.mult(lo)), (u + hi - lo, hi, 1)))

    for i, p in enumerate(levels):
        if _is_isolated(levels, i):
            for u in range(1, p):
                covers.append(((u, p, P.mult(p)), (u + 1, p, 1)))

    return Poset(vertex_list(P), covers)


def export_dot(D: Poset) -> str:
    """Render the covering digraph in DOT format.

    Output is deterministic: vertices in canonical order, one rank group
    per row of each level.
    """
    def name(v: Vertex) -> str:
        return f'"({v[0]},{v[1]},{v[2]})"'

    lines = ["digraph poset {", "  rankdir=BT;", "  node [shape=plaintext];"]
    for v in D.vertices:
        lines.append(f"  {name(v)};")
    rows = sorted({(p, k) for (_, p, k) in D.vertices})
    for p, k in rows:
        members = [v for v in D.vertices if v[1] == p and v[2] == k]
        lines.append("  { rank=same; " + " ".join(name(v) + ";" for v in members) + " }")
    for a, b in D.covers:
        lines.append(f"  {name(a)} -> {name(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(D: Poset) -> str:
    """Serialize vertices and covering edges as deterministic JSON."""
    payload = {
        "vertices": [list(v) for v in D.vertices],
        "covers": [[list(a), list(b)] for a, b in D.covers],
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))
