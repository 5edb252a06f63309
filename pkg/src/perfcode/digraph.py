"""Simple directed graphs, the domination metric, and the two constructions
tying digraphs to weighted posets.

A digraph induces a weighted poset by collapsing strongly connected
components (component size becomes the element weight); a weighted poset
induces a digraph by blowing each element up into a directed cycle of its
weight.  The two constructions are inverse in one direction only:
condensing an expansion recovers the weighted poset, while expanding a
condensation generally loses edges of the original digraph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, List, Set, Tuple

from .bitvec import BitVector, add
from .poset import Poset
from .wposet import WeightedPoset, omega_census

ORACLE_LIMIT = 16


@dataclass(frozen=True)
class Digraph:
    """Digraph on vertices 1..n without loops or duplicate edges.

    reach[v-1] holds v plus everything reachable from v, as a mask.
    """

    n: int
    edges: Tuple[Tuple[int, int], ...]
    reach: Tuple[int, ...] = field(compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Digraph":
        if n < 1 or n > 64:
            raise ValueError(f"vertex count must be in 1..64, got {n}")
        seen = set()
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge {u} -> {v} out of range 1..{n}")
            if u == v:
                raise ValueError(f"loop {u} -> {v} not allowed")
            seen.add((u, v))
        ordered = tuple(sorted(seen))
        reach = [1 << i for i in range(n)]
        changed = True
        while changed:
            changed = False
            for u, v in ordered:
                merged = reach[u - 1] | reach[v - 1]
                if merged != reach[u - 1]:
                    reach[u - 1] = merged
                    changed = True
        return cls(n, ordered, tuple(reach))

    def reach_mask(self, mask: int) -> int:
        out = 0
        while mask:
            out |= self.reach[(mask & -mask).bit_length() - 1]
            mask &= mask - 1
        return out

    def weight_of_mask(self, mask: int) -> int:
        return self.reach_mask(mask).bit_count()


@dataclass(frozen=True)
class BlockMap:
    """A partition of n vertex coordinates into m ordered blocks.

    Block order is the quotient coordinate order; within a block the first
    member is the representative.  Produced by condense (blocks sorted by
    their maximum vertex label) and by expand (blocks are consecutive runs).
    """

    n: int
    m: int
    blocks: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.m != len(self.blocks):
            raise ValueError(f"{len(self.blocks)} blocks for m={self.m}")
        seen: Set[int] = set()
        total = 0
        for block in self.blocks:
            if not block:
                raise ValueError("empty block")
            seen.update(block)
            total += len(block)
        if total != self.n or seen != set(range(1, self.n + 1)):
            raise ValueError(f"blocks do not partition 1..{self.n}")

    def block_masks(self) -> Tuple[int, ...]:
        return tuple(sum(1 << (v - 1) for v in block) for block in self.blocks)

    def representatives(self) -> Tuple[int, ...]:
        return tuple(block[0] for block in self.blocks)

    def quotient_labels(self) -> Tuple[str, ...]:
        """One label per quotient coordinate: the block's maximum vertex label."""
        return tuple(str(max(block)) for block in self.blocks)

    def vertex_labels(self) -> Tuple[str, ...]:
        """One label per vertex coordinate: element label, primed for fresh copies."""
        labels = [""] * self.n
        for q, block in enumerate(self.blocks, start=1):
            for copy, v in enumerate(block):
                labels[v - 1] = str(q) + "′" * copy
        return tuple(labels)


def dominated_closure(g: Digraph, vertices: Iterable[int]) -> Set[int]:
    """The given vertices plus everything they dominate."""
    mask = 0
    for v in vertices:
        if not 1 <= v <= g.n:
            raise ValueError(f"vertex {v} out of range 1..{g.n}")
        mask |= 1 << (v - 1)
    out = g.reach_mask(mask)
    return {i + 1 for i in range(g.n) if out >> i & 1}


def g_weight(g: Digraph, x: BitVector) -> int:
    """Size of the domination closure of the support of x."""
    if x.length != g.n:
        raise ValueError(f"vector length {x.length} != vertex count {g.n}")
    return g.weight_of_mask(x.bits)


def g_distance(g: Digraph, x: BitVector, y: BitVector) -> int:
    return g_weight(g, add(x, y))


def condense(g: Digraph) -> Tuple[WeightedPoset, BlockMap]:
    """Collapse strongly connected components into a weighted poset.

    Two vertices are identified when each reaches the other; an element sits
    below another when the latter's component reaches the former's.  Element
    weights are component sizes.  Quotient coordinates are ordered by the
    maximum vertex label of each component.
    """
    coreach = [1 << i for i in range(g.n)]
    for v in range(g.n):
        m = g.reach[v] & ~(1 << v)
        while m:
            u = (m & -m).bit_length() - 1
            coreach[u] |= 1 << v
            m &= m - 1
    comp_masks: List[int] = []
    assigned = 0
    for v in range(g.n):
        if assigned >> v & 1:
            continue
        comp = g.reach[v] & coreach[v]
        comp_masks.append(comp)
        assigned |= comp
    comp_masks.sort(key=lambda c: c.bit_length())  # ascending by max vertex label
    blocks = tuple(
        tuple(i + 1 for i in range(g.n) if comp >> i & 1) for comp in comp_masks
    )
    bm = BlockMap(g.n, len(blocks), blocks)
    relations = []
    for a, mask_a in enumerate(comp_masks):
        ra = g.reach_mask(mask_a)
        for b, mask_b in enumerate(comp_masks):
            if a != b and ra & mask_b:
                relations.append((b + 1, a + 1))
    poset = Poset.from_relations(len(blocks), relations)
    pi = tuple(mask.bit_count() for mask in comp_masks)
    return WeightedPoset(poset, pi), bm


def expand(wp: WeightedPoset) -> Tuple[Digraph, BlockMap]:
    """Blow each element up into a directed cycle of length its weight.

    Element a becomes vertices a0..a_{pi(a)-1} arranged in a cycle (a single
    vertex when pi(a) = 1); representatives inherit the order relation as
    edges a0 -> b0 for every strict pair b below a, transitive pairs
    included.  Fresh vertices follow their representative consecutively,
    elements processed in ascending label order.
    """
    blocks: List[Tuple[int, ...]] = []
    next_label = 1
    for a in range(1, wp.size + 1):
        w = wp.pi[a - 1]
        blocks.append(tuple(range(next_label, next_label + w)))
        next_label += w
    n = next_label - 1
    edges: List[Tuple[int, int]] = []
    for a in range(1, wp.size + 1):
        block = blocks[a - 1]
        if len(block) > 1:
            for idx, v in enumerate(block):
                edges.append((v, block[(idx + 1) % len(block)]))
        below = wp.poset.down[a - 1] & ~(1 << (a - 1))
        while below:
            b = (below & -below).bit_length()
            edges.append((block[0], blocks[b - 1][0]))
            below &= below - 1
    bm = BlockMap(n, wp.size, tuple(blocks))
    return Digraph.from_edges(n, edges), bm


@lru_cache(maxsize=None)
def g_weight_table(g: Digraph) -> Tuple[int, ...]:
    """Domination weights of all 2**n masks."""
    if g.n > ORACLE_LIMIT:
        raise ValueError(f"vertex count {g.n} exceeds oracle guard {ORACLE_LIMIT}")
    closures = [0] * (1 << g.n)
    for mask in range(1, 1 << g.n):
        low = mask & -mask
        closures[mask] = closures[mask ^ low] | g.reach[low.bit_length() - 1]
    return tuple(c.bit_count() for c in closures)


def g_sphere_size_oracle(g: Digraph, x: BitVector, r: int) -> int:
    """Brute-force count of vectors within distance r of x."""
    if x.length != g.n:
        raise ValueError(f"vector length {x.length} != vertex count {g.n}")
    wt = g_weight_table(g)
    c = x.bits
    return sum(1 for y in range(1 << g.n) if wt[y ^ c] <= r)


def g_sphere_size_formula(g: Digraph, r: int) -> int:
    """Radius-2 sphere cardinality from the induced weighted poset's census.

    The closed form exists only at radius 2: singleton counts transfer
    directly, while each weight-2 component of size 2 contributes three
    vectors at distance exactly 2 instead of one.
    """
    if r != 2:
        raise ValueError(f"closed form available only at radius 2, got {r}")
    wp, _ = condense(g)
    census = omega_census(wp, 2)
    return (
        1
        + census.get(1, 1, 1)
        + 3 * census.get(1, 2, 1)
        + 2 * census.get(1, 2, 2)
        + census.get(2, 2, 2)
    )
