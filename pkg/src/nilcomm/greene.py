"""Maximum chain unions and the chain invariant of a finite poset.

For a poset of cardinality n, let ``c_k`` be the maximum number of
vertices covered by a union of k chains (k disjoint chains, without loss
of generality).  The successive differences ``c_k - c_{k-1}`` form a
partition of n; this module computes the profile with a minimum-cost-flow
solver and double-checks it against an exhaustive routine on small posets.

Flow formulation: split every vertex into an in/out pair joined by a
unit-capacity arc of cost -1, connect out(v) -> in(w) whenever v < w in
the closure, and give every vertex a unit source and sink arc.  Each
augmentation along a cheapest path adds one chain; after k augmentations
the accumulated cost is -c_k.  Successive shortest paths have weakly
increasing cost, which makes the profile concave by construction.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NonMonotoneProfile, PosetTooLarge
from .partitions import Partition
from .poset import Poset

_INF = 10 ** 18


class _MinCostFlow:
    """Successive-shortest-paths min-cost flow; Bellman-Ford path search.

    Negative arc costs are fine (the network is a DAG, so no negative
    cycles); graphs here are tiny.
    """

    def __init__(self, num_nodes: int):
        self.n = num_nodes
        self.to: list[int] = []
        self.cap: list[int] = []
        self.cost: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(num_nodes)]

    def add_edge(self, u: int, v: int, cap: int, cost: int) -> None:
        self.adj[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(cap)
        self.cost.append(cost)
        self.adj[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)
        self.cost.append(-cost)

    def augment(self, s: int, t: int) -> int | None:
        """Push one cheapest unit of flow from s to t; return its cost."""
        dist = [_INF] * self.n
        dist[s] = 0
        parent_edge = [-1] * self.n
        in_queue = [False] * self.n
        queue = [s]
        in_queue[s] = True
        while queue:
            u = queue.pop(0)
            in_queue[u] = False
            for eid in self.adj[u]:
                if self.cap[eid] > 0:
                    v = self.to[eid]
                    nd = dist[u] + self.cost[eid]
                    if nd < dist[v]:
                        dist[v] = nd
                        parent_edge[v] = eid
                        if not in_queue[v]:
                            queue.append(v)
                            in_queue[v] = True
        if dist[t] >= _INF:
            return None
        v = t
        while v != s:
            eid = parent_edge[v]
            self.cap[eid] -= 1
            self.cap[eid ^ 1] += 1
            v = self.to[eid ^ 1]
        return dist[t]


@dataclass(frozen=True)
class ChainUnionProfile:
    """Cumulative maxima c_0..c_m (c_m = n) and their differences."""

    cumulative: tuple[int, ...]
    lam: Partition


def chain_union_profile(D: Poset) -> ChainUnionProfile:
    """Compute the full profile of maximum k-chain-union sizes."""
    m = len(D)
    if m == 0:
        return ChainUnionProfile((0,), Partition())
    index = {v: i for i, v in enumerate(D.vertices)}
    source = 2 * m
    sink = 2 * m + 1
    flow = _MinCostFlow(2 * m + 2)
    for v, i in index.items():
        flow.add_edge(2 * i, 2 * i + 1, 1, -1)
        flow.add_edge(source, 2 * i, 1, 0)
        flow.add_edge(2 * i + 1, sink, 1, 0)
        for w in D.above(v):
            flow.add_edge(2 * i + 1, 2 * index[w], 1, 0)

    cumulative = [0]
    total = 0
    while cumulative[-1] < m:
        cost = flow.augment(source, sink)
        if cost is None:
            raise NonMonotoneProfile("flow exhausted before covering the poset")
        total += cost
        cumulative.append(-total)

    parts = [cumulative[k] - cumulative[k - 1] for k in range(1, len(cumulative))]
    for i in range(1, len(parts)):
        if parts[i] > parts[i - 1]:
            raise NonMonotoneProfile(f"profile differences increase: {parts}")
    return ChainUnionProfile(tuple(cumulative), Partition(parts))


def max_k_chain_union(D: Poset, k: int) -> int:
    """Maximum number of vertices covered by a union of k chains."""
    if k <= 0:
        return 0
    profile = chain_union_profile(D).cumulative
    return profile[k] if k < len(profile) else profile[-1]


def greene_lambda(D: Poset) -> Partition:
    """The chain invariant: differences of the chain-union profile."""
    return chain_union_profile(D).lam


def oracle_max_k_chain_union(D: Poset, k: int) -> int:
    """Exhaustive c_k for posets of at most 12 vertices.

    Independent of the flow path: a vertex set is coverable by k chains
    exactly when its induced width (largest antichain) is at most k, so
    scan all subsets and maximize cardinality under that width bound.
    """
    m = len(D)
    if m > 12:
        raise PosetTooLarge(f"{m} vertices is beyond the exhaustive oracle")
    if k <= 0 or m == 0:
        return 0
    comp = [0] * m
    for i, v in enumerate(D.vertices):
        for j, w in enumerate(D.vertices):
            if i != j and (D.less(v, w) or D.less(w, v)):
                comp[i] |= 1 << j

    width_memo: dict[int, int] = {0: 0}

    def width(mask: int) -> int:
        if mask in width_memo:
            return width_memo[mask]
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        result = max(width(rest), 1 + width(rest & ~comp[low]))
        width_memo[mask] = result
        return result

    best = 0
    for mask in range(1 << m):
        size = mask.bit_count()
        if size > best and width(mask) <= k:
            best = size
    return best
