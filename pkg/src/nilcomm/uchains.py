"""Anchored chain families ("U-chains") in the basis poset.

An r-anchor specification is a list a_1 < ... < a_r of positive integers
with consecutive anchors at least 2 apart, so the pairs {a_i, a_i+1} are
disjoint.  Strand i of the family consists of the middle band
i <= u <= p-i+1 of the levels p in {a_i, a_i+1} together with the two
rail positions u in {i, p-i+1} of every higher level.  Each strand is a
chain and distinct strands are disjoint.

Cardinalities satisfy a peeling recurrence: removing the lowest anchor a
from a specification costs the simple-chain size of a minus twice the
multiplicity mass of every remaining anchor pair.  Expanding the
recurrence gives the additive form used by the profile solver: anchor a
in slot i contributes its simple size minus 2*(i-1)*(mult(a)+mult(a+1)).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import NonMonotoneProfile, NotMaximumSimpleChain
from .partitions import Partition
from .poset import Vertex, sort_key


@dataclass(frozen=True)
class UChainSpec:
    """Anchors a_1 < ... < a_r with gaps of at least 2."""

    anchors: tuple[int, ...]

    def __post_init__(self):
        a = self.anchors
        if not a:
            raise ValueError("a specification needs at least one anchor")
        if any(not isinstance(x, int) or x < 1 for x in a):
            raise ValueError(f"anchors must be positive integers: {a}")
        for i in range(1, len(a)):
            if a[i] < a[i - 1] + 2:
                raise ValueError(f"anchors must increase by at least 2: {a}")

    @property
    def r(self) -> int:
        return len(self.anchors)

    def expanded(self) -> tuple[int, ...]:
        """The 2r distinct values {a_i, a_i+1}, ascending."""
        out: list[int] = []
        for a in self.anchors:
            out.extend((a, a + 1))
        return tuple(out)


@dataclass(frozen=True)
class UChainInstance:
    """A materialized chain family: per-strand vertex sets and their union."""

    spec: UChainSpec
    strands: tuple[frozenset[Vertex], ...]
    union: frozenset[Vertex]


def materialize(P: Partition, spec: UChainSpec) -> UChainInstance:
    """Realize the strands of ``spec`` inside the basis poset of P.

    Strands may be empty (anchors above the largest part select nothing).
    """
    strands: list[frozenset[Vertex]] = []
    for i, a in enumerate(spec.anchors, start=1):
        strand: set[Vertex] = set()
        for p in P.distinct_parts():
            if p in (a, a + 1):
                for k in range(1, P.mult(p) + 1):
                    for u in range(i, p - i + 2):
                        strand.add((u, p, k))
            elif p > a + 1:
                for k in range(1, P.mult(p) + 1):
                    for u in {i, p - i + 1}:
                        if 1 <= u <= p:
                            strand.add((u, p, k))
        strands.append(frozenset(strand))
    union = frozenset().union(*strands)
    if len(union) != sum(len(s) for s in strands):
        raise AssertionError(f"strands of {spec} overlap in {P}")
    return UChainInstance(spec, tuple(strands), union)


def simple_cardinality(P: Partition, a: int) -> int:
    """Size of the one-anchor family at a.

    Counts a full level a, a full level a+1, and two rail vertices per row
    of every higher level.
    """
    return (
        a * P.mult(a)
        + (a + 1) * P.mult(a + 1)
        + 2 * sum(P.mult(p) for p in P.distinct_parts() if p > a + 1)
    )


def cardinality_closed_form(P: Partition, spec: UChainSpec) -> int:
    """Size of the family by repeatedly peeling the lowest anchor."""
    anchors = list(spec.anchors)
    total = 0
    while anchors:
        a = anchors.pop(0)
        total += simple_cardinality(P, a)
        total -= 2 * sum(P.mult(b) + P.mult(b + 1) for b in anchors)
    return total


def _slot_weight(P: Partition, a: int, slot: int) -> int:
    """Contribution of anchor a when it sits in 1-based slot i."""
    return simple_cardinality(P, a) - 2 * (slot - 1) * (P.mult(a) + P.mult(a + 1))


def max_simple_u_chains(P: Partition) -> tuple[int, tuple[int, ...]]:
    """Largest simple-chain size and all maximizing anchors.

    Anchors run over 1..max part (larger anchors select nothing); anchors
    realizing the same vertex set count once, represented by the largest,
    which is always a part value.
    """
    if P.n < 1:
        raise ValueError("needs a nonempty partition")
    best = -1
    classes: list[tuple[frozenset[Vertex], int]] = []
    for a in range(1, P.max_part + 1):
        card = simple_cardinality(P, a)
        if card > best:
            best = card
            classes = [(materialize(P, UChainSpec((a,))).union, a)]
        elif card == best:
            vs = materialize(P, UChainSpec((a,))).union
            for i, (seen, _) in enumerate(classes):
                if seen == vs:
                    classes[i] = (seen, a)
                    break
            else:
                classes.append((vs, a))
    return best, tuple(rep for _, rep in classes)


def max_u_chain_cardinality(P: Partition, k: int) -> int:
    """Maximum size of a k-strand family (strands may be empty).

    Effective anchors live in 1..max part; anchors beyond contribute empty
    strands, so the k-value is the best over at most k effective anchors.
    Solved by dynamic programming over (slot, last anchor) with the
    additive slot weights.
    """
    if k <= 0 or P.n == 0:
        return 0
    table = _u_table(P)
    return table[min(k, len(table) - 1)]


def _u_table(P: Partition) -> list[int]:
    """Running maxima u_0, u_1, ..., one slot count per feasible length."""
    M = P.max_part
    max_slots = (M + 1) // 2
    best_exact: list[int] = []
    prev: list[int] = []
    for i in range(1, max_slots + 1):
        cur = [-1] * (M + 1)
        if i == 1:
            for a in range(1, M + 1):
                cur[a] = _slot_weight(P, a, 1)
        else:
            prefix = [-1] * (M + 1)  # prefix[a] = max(prev[0..a])
            run = -1
            for a in range(M + 1):
                run = max(run, prev[a])
                prefix[a] = run
            for a in range(2 * i - 1, M + 1):
                base = prefix[a - 2]
                if base >= 0:
                    cur[a] = base + _slot_weight(P, a, i)
        best_exact.append(max(cur))
        prev = cur
    table = [0]
    for val in best_exact:
        table.append(max(table[-1], val))
    return table


def lambda_u(P: Partition) -> Partition:
    """Partition of successive differences of the k-strand maxima.

    Trailing zero differences are dropped; a non-monotone difference
    sequence would signal a solver bug and is raised, not sorted away.
    """
    if P.n < 1:
        raise ValueError("needs a nonempty partition")
    table = _u_table(P)
    k = 1
    diffs: list[int] = []
    while True:
        u_prev = table[min(k - 1, len(table) - 1)]
        u_k = table[min(k, len(table) - 1)]
        d = u_k - u_prev
        if d == 0 and u_k == P.n:
            break
        diffs.append(d)
        k += 1
        if k > P.n + 1:
            raise NonMonotoneProfile(f"profile never reaches {P.n}: {table}")
    for i in range(1, len(diffs)):
        if diffs[i] > diffs[i - 1]:
            raise NonMonotoneProfile(f"differences increase: {diffs}")
    return Partition(diffs)


def iter_specs(max_anchor: int, max_r: int | None = None) -> Iterator[UChainSpec]:
    """All specifications with anchors in 1..max_anchor, depth-first by prefix."""
    if max_anchor < 1:
        return
    if max_r is None:
        max_r = (max_anchor + 1) // 2

    def rec(start: int, chosen: list[int]) -> Iterator[UChainSpec]:
        for a in range(start, max_anchor + 1):
            chosen.append(a)
            yield UChainSpec(tuple(chosen))
            if len(chosen) < max_r:
                yield from rec(a + 2, chosen)
            chosen.pop()

    yield from rec(1, [])


@dataclass(frozen=True)
class ReplacementResult:
    """Outcome of substituting a maximum anchor into a specification."""

    ok: bool
    position: int | None
    replaced: UChainSpec | None
    original_size: int
    new_size: int | None
    identity: bool


def check_replacement(P: Partition, spec: UChainSpec, a: int) -> ReplacementResult:
    """Find a slot where the maximum simple anchor ``a`` can replace one
    anchor of ``spec`` without shrinking the family.

    The witness slot u satisfies b_{u-1} < a < b_{u+1} - 1 (with b_0 = 0
    and b_{r+1} unbounded) and yields a valid specification.  When the
    pair {a, a+1} already lies inside the expanded anchor set the family
    needs no change and the identity substitution is reported.  A failed
    search returns ok=False; it would falsify the replacement property.
    """
    best, _ = max_simple_u_chains(P)
    if simple_cardinality(P, a) != best:
        raise NotMaximumSimpleChain(f"anchor {a} has size {simple_cardinality(P, a)} < {best}")

    b = spec.anchors
    r = len(b)
    original = cardinality_closed_form(P, spec)

    if set((a, a + 1)) <= set(spec.expanded()):
        position = next(u for u in range(1, r + 1) if b[u - 1] >= a - 1)
        return ReplacementResult(True, position, spec, original, original, True)

    for u in range(1, r + 1):
        left = b[u - 2] if u >= 2 else 0
        right = b[u] if u < r else None
        if not (left < a and (right is None or a < right - 1)):
            continue
        if u >= 2 and a - left < 2:
            continue
        candidate = UChainSpec(b[: u - 1] + (a,) + b[u:])
        size = cardinality_closed_form(P, candidate)
        if size >= original:
            return ReplacementResult(True, u, candidate, original, size, False)
    return ReplacementResult(False, None, None, original, None, False)


def sorted_vertices(S: frozenset[Vertex]) -> list[Vertex]:
    """Canonical listing of a vertex set, for stable output."""
    return sorted(S, key=sort_key)
