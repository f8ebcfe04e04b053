"""Finite-field sampling from the triangular part of a Jordan centralizer.

The Jordan matrix of a partition acts on the basis triples (u, p, k) by
stepping u forward within each row.  A matrix commuting with it is
determined, block pair by block pair, by one coefficient per diagonal of
a shifted Toeplitz band; couplings between rows of equal length at shift
zero form, per level, a matrix that we force to be strictly triangular in
the row index.  Every matrix sampled under that constraint commutes with
the Jordan matrix and is nilpotent, and its generic Jordan type is the
object of interest.

The infinite ground field is replaced by a prime field; a random
specialization preserves generic ranks except with probability on the
order of 1/p per minor, so taking the dominance maximum over a handful of
samples recovers the generic type with overwhelming probability.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    CommutationCheckFailed,
    IncomparableSamples,
    NotNilpotent,
    PosetTooLarge,
)
from .partitions import Partition, conjugate, dominance_leq
from .poset import Vertex, build_poset, vertex_list
from .uchains import lambda_u

DEFAULT_PRIME = 1_000_003


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """A prime modulus; arithmetic is field arithmetic mod p."""

    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.p >= 1 << 28:
            raise ValueError("moduli above 2^28 would overflow int64 accumulation")


def _matmul(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    return (A @ B) % p


def basis_index(P: Partition) -> dict[Vertex, int]:
    """Position of each basis triple in the canonical order."""
    return {v: i for i, v in enumerate(vertex_list(P))}


def _blocks(P: Partition) -> list[tuple[int, int, int]]:
    """(length, row, starting index) for each row, in basis order."""
    out = []
    start = 0
    for p in P.distinct_parts():
        for k in range(1, P.mult(p) + 1):
            out.append((p, k, start))
            start += p
    return out


def jordan_matrix(P: Partition) -> np.ndarray:
    """Block-diagonal nilpotent matrix stepping u -> u+1 within each row."""
    n = P.n
    B = np.zeros((n, n), dtype=np.int64)
    for p, _, start in _blocks(P):
        for u in range(p - 1):
            B[start + u + 1, start + u] = 1
    return B


@dataclass
class CommutantSample:
    """A sampled matrix commuting with the Jordan matrix of a partition.

    ``params`` maps an ordered pair of rows ((p, k), (p2, k2)) to its
    coefficient vector, indexed by the shift j = max(1, p2-p+1) .. p2;
    forced zeros (the strictly-triangular constraint) are stored as 0.
    """

    partition: Partition
    field: PrimeField
    seed: int
    params: dict[tuple[tuple[int, int], tuple[int, int]], tuple[int, ...]]
    matrix: np.ndarray


def sample_nilpotent_commutant(P: Partition, field: PrimeField, seed: int) -> CommutantSample:
    """Draw a uniform element of the triangular part of the centralizer.

    All free coefficients are uniform in the field.  Commutation with the
    Jordan matrix and nilpotency are asserted before returning; a failure
    of either signals a parametrization bug.
    """
    rng = np.random.default_rng(seed)
    n = P.n
    p_mod = field.p
    A = np.zeros((n, n), dtype=np.int64)
    params: dict[tuple[tuple[int, int], tuple[int, int]], tuple[int, ...]] = {}
    blocks = _blocks(P)
    for p, k, start in blocks:
        for p2, k2, start2 in blocks:
            jmin = max(1, p2 - p + 1)
            coeffs = []
            for j in range(jmin, p2 + 1):
                if j == 1 and p == p2 and k >= k2:
                    coeffs.append(0)
                    continue
                t = int(rng.integers(0, p_mod))
                coeffs.append(t)
                if t:
                    for u in range(1, p + 1):
                        u2 = u + j - 1
                        if u2 <= p2:
                            A[start2 + u2 - 1, start + u - 1] = t
            params[((p, k), (p2, k2))] = tuple(coeffs)

    B = jordan_matrix(P)
    if not np.array_equal(_matmul(A, B, p_mod), _matmul(B, A, p_mod)):
        raise CommutationCheckFailed(f"sampled matrix does not commute for {P} (seed {seed})")
    power = A.copy()
    size = 1
    while size < n:
        power = _matmul(power, power, p_mod)
        size *= 2
    if n > 0 and power.any():
        raise NotNilpotent(f"sampled matrix is not nilpotent for {P} (seed {seed})")
    return CommutantSample(P, field, seed, params, A)


def structural_action_pairs(P: Partition) -> frozenset[tuple[Vertex, Vertex]]:
    """Ordered pairs (v, w) where some sampled matrix can move v onto w.

    Every matrix entry is carried by a single free coefficient, so the
    pair is possible exactly when that coefficient exists.
    """
    pairs: set[tuple[Vertex, Vertex]] = set()
    verts = vertex_list(P)
    for v in verts:
        u, p, k = v
        for w in verts:
            u2, p2, k2 = w
            if u2 < u or u2 - u < p2 - p:
                continue
            if p == p2 and u == u2 and k >= k2:
                continue
            pairs.add((v, w))
    return frozenset(pairs)


def rank_mod(A: np.ndarray, p: int) -> int:
    """Rank over the prime field by Gaussian elimination."""
    M = (A % p).astype(np.int64).copy()
    rows, cols = M.shape
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if M[i, c]:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != r:
            M[[r, pivot]] = M[[pivot, r]]
        inv = pow(int(M[r, c]), -1, p)
        M[r] = (M[r] * inv) % p
        for i in range(rows):
            if i != r and M[i, c]:
                M[i] = (M[i] - M[i, c] * M[r]) % p
        r += 1
        if r == rows:
            break
    return r


def jordan_type_from_ranks(A: np.ndarray, p: int) -> Partition:
    """Jordan partition of a nilpotent matrix from its power-rank profile.

    With d_k = n - rank(A^k), the differences (d_1, d_2-d_1, ...) list the
    number of blocks of size >= k; their conjugate is the type.
    """
    n = A.shape[0]
    if n == 0:
        return Partition()
    kernel_dims = []
    power = np.eye(n, dtype=np.int64)
    for _ in range(n):
        power = _matmul(power, A, p)
        d = n - rank_mod(power, p)
        kernel_dims.append(d)
        if d == n:
            break
    if kernel_dims[-1] != n:
        raise NotNilpotent(f"matrix of size {n} has no vanishing power")
    diffs = [kernel_dims[0]] + [kernel_dims[i] - kernel_dims[i - 1]
                                for i in range(1, len(kernel_dims))]
    return conjugate(Partition(diffs))


@dataclass(frozen=True)
class GenericTypeEstimate:
    """Dominance-maximum Jordan type over several samples."""

    q: Partition
    types: tuple[Partition, ...]
    seeds: tuple[int, ...]
    prime: int
    agree_count: int


def generic_jordan_type(P: Partition, field: PrimeField, samples: int, seed: int) -> GenericTypeEstimate:
    """Estimate the generic Jordan type of the sampled family.

    The generic type dominates every special one, so the estimate is the
    dominance maximum of the sampled types.  If no sampled type dominates
    all others the samples are reported as incomparable instead of
    guessing.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    seeds = tuple(seed + i for i in range(samples))
    types = tuple(
        jordan_type_from_ranks(sample_nilpotent_commutant(P, field, s).matrix, field.p)
        for s in seeds
    )
    best = None
    for t in types:
        if all(dominance_leq(other, t) for other in types):
            best = t
            break
    if best is None:
        raise IncomparableSamples(
            f"no dominance maximum among sampled types {[str(t) for t in types]} (seed {seed})"
        )
    agree = sum(1 for t in types if t == best)
    return GenericTypeEstimate(best, types, seeds, field.p, agree)


@dataclass(frozen=True)
class OrderCheckReport:
    """Comparison of the poset order against the sampled matrix action.

    ``hard_mismatches`` are ordered pairs where strict comparability and
    the existence of a free coefficient disagree (a structural failure);
    ``never_nonzero`` are comparable pairs whose coefficient exists but
    happened to vanish in every sample (expected with probability ~1/p
    per sample).
    """

    partition: Partition
    prime: int
    seeds: tuple[int, ...]
    pairs_checked: int
    hard_mismatches: tuple[tuple[Vertex, Vertex, str], ...]
    never_nonzero: tuple[tuple[Vertex, Vertex], ...]

    @property
    def ok(self) -> bool:
        return not self.hard_mismatches


def order_criterion_check(P: Partition, field: PrimeField, samples: int, seed: int) -> OrderCheckReport:
    """Check that strict poset order matches reachability under the action.

    Restricted to ordered pairs v != w; the reflexive case is excluded.
    Desk-scale only (n <= 8).
    """
    if P.n > 8:
        raise PosetTooLarge(f"order check is exhaustive over pairs; n={P.n} > 8")
    D = build_poset(P)
    index = basis_index(P)
    structural = structural_action_pairs(P)
    seeds = tuple(seed + i for i in range(samples))
    mats = [sample_nilpotent_commutant(P, field, s).matrix for s in seeds]

    hard: list[tuple[Vertex, Vertex, str]] = []
    soft: list[tuple[Vertex, Vertex]] = []
    checked = 0
    for v in D.vertices:
        for w in D.vertices:
            if v == w:
                continue
            checked += 1
            ordered = D.less(v, w)
            has_coeff = (v, w) in structural
            if ordered != has_coeff:
                kind = "order-without-coefficient" if ordered else "coefficient-without-order"
                hard.append((v, w, kind))
                continue
            if ordered and not any(m[index[w], index[v]] for m in mats):
                soft.append((v, w))
    return OrderCheckReport(P, field.p, seeds, checked, tuple(hard), tuple(soft))


def conjecture_report(P: Partition, field: PrimeField, samples: int, seed: int) -> dict:
    """Record comparing the sampled generic type with the chain invariant."""
    est = generic_jordan_type(P, field, samples, seed)
    lu = lambda_u(P)
    return {
        "P": list(P.parts),
        "prime": field.p,
        "seeds": list(est.seeds),
        "types": [list(t.parts) for t in est.types],
        "Q_est": list(est.q.parts),
        "lambda_U": list(lu.parts),
        "agree": est.q == lu,
    }
