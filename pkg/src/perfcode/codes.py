"""Binary linear codes, the extended Hamming family, and radius machinery.

Perfectness can be decided two independent ways: full exhaustion (every
vector lies in exactly one codeword sphere, made fast by a precomputed
weight table over all masks) and a condition pair equivalent to it for
linear codes: the sphere at radius r has exactly 2**(n-k) elements, and
every split of a non-zero codeword into two disjoint parts leaves a part of
weight at least r+1.  A further restriction of the partition check to
weight-4 codewords and their even splits is the classification hot path.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, List, Optional, Tuple, Union

import numpy as np

from .bitvec import BitVector
from .digraph import Digraph, g_sphere_size_formula, g_sphere_size_oracle, g_weight_table
from .wposet import WeightedPoset, sphere_size_formula, weight_table

EXHAUSTIVE_LIMIT = 16
DIMENSION_LIMIT = 16
HAMMING_K_LIMIT = 5


def _rref(rows: List[int], width: int) -> Tuple[List[int], List[int]]:
    rows = [r for r in rows]
    pivots: List[int] = []
    rank = 0
    for col in range(width):
        pivot_row = None
        for i in range(rank, len(rows)):
            if rows[i] >> col & 1:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i] >> col & 1:
                rows[i] ^= rows[rank]
        pivots.append(col)
        rank += 1
    return rows[:rank], pivots


def _nullspace(rows: List[int], width: int) -> List[int]:
    reduced, pivots = _rref(rows, width)
    pivot_set = set(pivots)
    basis = []
    for free in range(width):
        if free in pivot_set:
            continue
        v = 1 << free
        for row, p in zip(reduced, pivots):
            if row >> free & 1:
                v |= 1 << p
        basis.append(v)
    return basis


@dataclass(frozen=True)
class BinaryLinearCode:
    """A linear subspace of binary n-space given by an independent basis."""

    length: int
    basis: Tuple[int, ...]
    parity_check: Tuple[int, ...]

    def __post_init__(self) -> None:
        reduced, _ = _rref(list(self.basis), self.length)
        if len(reduced) != len(self.basis):
            raise ValueError("basis vectors are linearly dependent")
        for row in self.parity_check:
            for b in self.basis:
                if (row & b).bit_count() & 1:
                    raise ValueError("parity check does not annihilate the basis")

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @classmethod
    def from_basis(cls, length: int, basis_masks: Iterable[int]) -> "BinaryLinearCode":
        masks = list(basis_masks)
        parity = _nullspace(masks, length) if masks else [1 << i for i in range(length)]
        return cls(length, tuple(masks), tuple(parity))

    @classmethod
    def from_parity_check(cls, length: int, rows: Iterable[int]) -> "BinaryLinearCode":
        rows = list(rows)
        return cls(length, tuple(_nullspace(rows, length)), tuple(rows))

    def basis_vectors(self) -> List[BitVector]:
        return [BitVector(self.length, b) for b in self.basis]


@lru_cache(maxsize=None)
def codeword_masks(code: BinaryLinearCode) -> Tuple[int, ...]:
    """All codeword masks, zero first, ascending by message mask."""
    if code.dimension > DIMENSION_LIMIT:
        raise ValueError(f"dimension {code.dimension} exceeds guard {DIMENSION_LIMIT}")
    out = [0] * (1 << code.dimension)
    for msg in range(1, 1 << code.dimension):
        low = msg & -msg
        out[msg] = out[msg ^ low] ^ code.basis[low.bit_length() - 1]
    return tuple(out)


def codewords(code: BinaryLinearCode) -> Iterator[BitVector]:
    for mask in codeword_masks(code):
        yield BitVector(code.length, mask)


@lru_cache(maxsize=None)
def min_hamming_distance(code: BinaryLinearCode) -> int:
    """Minimum Hamming weight over non-zero codewords (= distance, linearity)."""
    masks = codeword_masks(code)
    if len(masks) == 1:
        return 0
    return min(m.bit_count() for m in masks if m)


def _syndromes(code: BinaryLinearCode) -> List[int]:
    """Per-coordinate parity-check column, packed as an integer."""
    return [
        sum(((row >> i) & 1) << r for r, row in enumerate(code.parity_check))
        for i in range(code.length)
    ]


@lru_cache(maxsize=None)
def weight4_codeword_masks(code: BinaryLinearCode) -> Tuple[int, ...]:
    """All Hamming-weight-4 codewords, without enumerating the whole code.

    Quadruples with vanishing column sum are found by completing coordinate
    triples through a syndrome table, so the cost is O(n^3) regardless of
    the code's dimension.
    """
    if code.dimension <= DIMENSION_LIMIT:
        return tuple(m for m in codeword_masks(code) if m.bit_count() == 4)
    sy = _syndromes(code)
    by_syndrome: dict = {}
    for i, s in enumerate(sy):
        by_syndrome.setdefault(s, []).append(i)
    out = set()
    n = code.length
    for a in range(n):
        for b in range(a + 1, n):
            sab = sy[a] ^ sy[b]
            for c in range(b + 1, n):
                for d in by_syndrome.get(sab ^ sy[c], ()):
                    if d > c:
                        out.add((1 << a) | (1 << b) | (1 << c) | (1 << d))
    return tuple(sorted(out))


def _min_distance_capped(code: BinaryLinearCode) -> Optional[int]:
    """Minimum distance when it is at most 4, else None; dimension-agnostic."""
    if code.dimension <= DIMENSION_LIMIT:
        d = min_hamming_distance(code)
        return d if d <= 4 else None
    sy = _syndromes(code)
    if 0 in sy:
        return 1
    if len(set(sy)) < len(sy):
        return 2
    by_syndrome: dict = {}
    for i, s in enumerate(sy):
        by_syndrome.setdefault(s, []).append(i)
    for a in range(code.length):
        for b in range(a + 1, code.length):
            for c in by_syndrome.get(sy[a] ^ sy[b], ()):
                if c not in (a, b):
                    return 3
    if weight4_codeword_masks(code):
        return 4
    return None


def extended_hamming(k: int) -> BinaryLinearCode:
    """The extended Hamming code of length 2**k and dimension 2**k - 1 - k.

    Parity check: an all-ones row on top, then k rows whose column i reads
    the binary representation of i-1, least significant bit in the last row.
    """
    if not 2 <= k <= HAMMING_K_LIMIT:
        raise ValueError(f"k must be in 2..{HAMMING_K_LIMIT}, got {k}")
    n = 1 << k
    rows = [(1 << n) - 1]
    for j in range(k):
        bit = k - 1 - j
        rows.append(sum(1 << (i - 1) for i in range(1, n + 1) if (i - 1) >> bit & 1))
    return BinaryLinearCode.from_parity_check(n, iter(rows))


@dataclass(frozen=True)
class MetricContext:
    """A weight function on binary space, from a weighted poset or a digraph."""

    kind: str
    wp: Optional[WeightedPoset] = None
    graph: Optional[Digraph] = None

    @classmethod
    def for_wposet(cls, wp: WeightedPoset) -> "MetricContext":
        return cls("wposet", wp=wp)

    @classmethod
    def for_digraph(cls, g: Digraph) -> "MetricContext":
        return cls("digraph", graph=g)

    @property
    def length(self) -> int:
        return self.wp.size if self.kind == "wposet" else self.graph.n

    @property
    def total_weight(self) -> int:
        if self.kind == "wposet":
            return self.wp.total_weight
        return self.graph.n

    def weight_of_mask(self, mask: int) -> int:
        if self.kind == "wposet":
            return self.wp.weight_of_mask(mask)
        return self.graph.weight_of_mask(mask)

    def weights(self) -> Tuple[int, ...]:
        if self.kind == "wposet":
            return weight_table(self.wp)
        return g_weight_table(self.graph)

    def weights_np(self) -> np.ndarray:
        return np.asarray(self.weights(), dtype=np.int32)

    def sphere_size(self, r: int) -> int:
        """Sphere cardinality at radius r (center-independent)."""
        if self.kind == "wposet":
            return sphere_size_formula(self.wp, r)
        if r == 2:
            return g_sphere_size_formula(self.graph, 2)
        return g_sphere_size_oracle(self.graph, BitVector.zero(self.graph.n), r)

    def max_singleton_weight(self) -> int:
        return max(self.weight_of_mask(1 << i) for i in range(self.length))


@dataclass(frozen=True)
class PerfectReport:
    """Outcome of the condition-pair perfectness check."""

    sphere_size: int
    expected_sphere_size: int
    sphere_condition: bool
    partition_condition: bool
    witness: Optional[Tuple[BitVector, Tuple[BitVector, BitVector]]]

    @property
    def perfect(self) -> bool:
        return self.sphere_condition and self.partition_condition


CodeLike = Union[BinaryLinearCode, Iterable[BitVector]]


def _code_masks(code: CodeLike, length: int) -> List[int]:
    """Codeword masks of a linear code or of a plain vector collection."""
    if isinstance(code, BinaryLinearCode):
        if code.length != length:
            raise ValueError(f"code length {code.length} != structure dimension {length}")
        return list(codeword_masks(code))
    masks = []
    for v in code:
        if v.length != length:
            raise ValueError(f"codeword length {v.length} != structure dimension {length}")
        masks.append(v.bits)
    if not masks:
        raise ValueError("empty code")
    return masks


def _sphere_counts(masks: List[int], ctx: MetricContext, r: int) -> np.ndarray:
    """How many codeword spheres of radius r contain each vector."""
    wt = ctx.weights_np()
    xs = np.arange(1 << ctx.length, dtype=np.int64)
    counts = np.zeros(1 << ctx.length, dtype=np.int32)
    for c in masks:
        counts += wt[xs ^ c] <= r
    return counts


def _guard_exhaustive(ctx: MetricContext) -> None:
    if ctx.length > EXHAUSTIVE_LIMIT:
        raise ValueError(f"length {ctx.length} exceeds exhaustive guard {EXHAUSTIVE_LIMIT}")


def is_r_perfect(code: CodeLike, ctx: MetricContext, r: int) -> bool:
    """Exhaustive ground truth: every vector in exactly one codeword sphere."""
    _guard_exhaustive(ctx)
    return bool((_sphere_counts(_code_masks(code, ctx.length), ctx, r) == 1).all())


def packing_radius(code: CodeLike, ctx: MetricContext) -> int:
    """Largest r with pairwise disjoint codeword spheres, by exhaustion.

    For a code with fewer than two codewords every radius packs; the total
    structure weight is returned as a cap in that case.
    """
    _guard_exhaustive(ctx)
    masks = _code_masks(code, ctx.length)
    cap = ctx.total_weight
    if len(masks) < 2:
        return cap
    r = 0
    while r < cap and bool((_sphere_counts(masks, ctx, r + 1) <= 1).all()):
        r += 1
    return r


def covering_radius(code: CodeLike, ctx: MetricContext) -> int:
    """Smallest r with every vector within r of some codeword, by exhaustion."""
    _guard_exhaustive(ctx)
    wt = ctx.weights_np()
    xs = np.arange(1 << ctx.length, dtype=np.int64)
    dmin = np.full(1 << ctx.length, np.iinfo(np.int32).max, dtype=np.int32)
    for c in _code_masks(code, ctx.length):
        np.minimum(dmin, wt[xs ^ c], out=dmin)
    return int(dmin.max())


def _iter_unordered_splits(mask: int) -> Iterator[Tuple[int, int]]:
    """All unordered partitions {x, y} of a support mask, including {0, mask}."""
    sub = mask
    while True:
        other = mask ^ sub
        if sub <= other:
            yield sub, other
        if sub == 0:
            break
        sub = (sub - 1) & mask


def check_perfect_conditions(code: BinaryLinearCode, ctx: MetricContext, r: int) -> PerfectReport:
    """Condition-pair perfectness check.

    Sphere condition: the radius-r sphere has exactly 2**(n - k) elements.
    Partition condition: every split {x, y} of every non-zero codeword has
    max(w(x), w(y)) >= r + 1.  Together these are equivalent to the code
    being r-perfect; a failing codeword and split are reported as witness.
    """
    if code.length != ctx.length:
        raise ValueError(f"code length {code.length} != structure dimension {ctx.length}")
    size = ctx.sphere_size(r)
    expected = 1 << (code.length - code.dimension)
    witness = None
    partition_ok = True
    use_table = ctx.length <= EXHAUSTIVE_LIMIT
    wt = ctx.weights() if use_table else None
    weigh = (lambda m: wt[m]) if use_table else ctx.weight_of_mask
    for c in codeword_masks(code):
        if c == 0:
            continue
        for x, y in _iter_unordered_splits(c):
            if weigh(x) <= r and weigh(y) <= r:
                partition_ok = False
                witness = (
                    BitVector(code.length, c),
                    (BitVector(code.length, x), BitVector(code.length, y)),
                )
                break
        if not partition_ok:
            break
    return PerfectReport(size, expected, size == expected, partition_ok, witness)


def check_weight4_partitions(code: BinaryLinearCode, ctx: MetricContext) -> bool:
    """Restricted partition check driving the radius-2 classification.

    Only codewords of structure weight exactly 4 can fail a 2/2 split, since
    structure weight dominates Hamming weight and is subadditive over splits.
    Requires minimum Hamming distance 4 (the extended Hamming family).
    """
    if code.length != ctx.length:
        raise ValueError(f"code length {code.length} != structure dimension {ctx.length}")
    if _min_distance_capped(code) != 4:
        raise ValueError("restricted partition check requires minimum Hamming distance 4")
    for c in weight4_codeword_masks(code):
        if ctx.weight_of_mask(c) != 4:
            continue
        bits = []
        m = c
        while m:
            bits.append(m & -m)
            m &= m - 1
        a, b, cc, d = bits
        for x in (a | b, a | cc, a | d):
            y = c ^ x
            if ctx.weight_of_mask(x) <= 2 and ctx.weight_of_mask(y) <= 2:
                return False
    return True


def max_singleton_weight(ctx: MetricContext) -> int:
    """Largest structure weight of a single-coordinate vector."""
    return ctx.max_singleton_weight()
