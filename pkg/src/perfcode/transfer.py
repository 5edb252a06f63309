"""Collapse and expansion maps between vertex space and quotient space.

The collapse map sends a length-n vector to the length-m vector that is 1 on
a quotient coordinate exactly when the original is non-zero somewhere in that
block.  The expansion map places each quotient bit on its block's
representative coordinate and zeros elsewhere.  Both are always mediated by
an explicit BlockMap, never by positional guessing, so code images are
bit-for-bit reproducible.

Collapsing a code can merge codewords and does not preserve linearity;
expansion is injective and preserves linearity.
"""

from __future__ import annotations

from typing import Iterable, List

from .bitvec import BitVector
from .digraph import BlockMap


def collapse_mask(bm: BlockMap, mask: int) -> int:
    out = 0
    for q, block_mask in enumerate(bm.block_masks()):
        if mask & block_mask:
            out |= 1 << q
    return out


def expand_mask(bm: BlockMap, mask: int) -> int:
    out = 0
    for q, rep in enumerate(bm.representatives()):
        if mask >> q & 1:
            out |= 1 << (rep - 1)
    return out


def collapse(bm: BlockMap, x: BitVector) -> BitVector:
    """Blockwise OR from vertex coordinates to quotient coordinates."""
    if x.length != bm.n:
        raise ValueError(f"vector length {x.length} != block map length {bm.n}")
    return BitVector(bm.m, collapse_mask(bm, x.bits))


def expand_vec(bm: BlockMap, x: BitVector) -> BitVector:
    """Each quotient bit lands on its block's representative coordinate."""
    if x.length != bm.m:
        raise ValueError(f"vector length {x.length} != quotient length {bm.m}")
    return BitVector(bm.n, expand_mask(bm, x.bits))


def map_code_collapse(bm: BlockMap, code: Iterable[BitVector]) -> List[BitVector]:
    """Image of a code under collapse, duplicates merged, input order kept."""
    out: List[BitVector] = []
    seen = set()
    for x in code:
        y = collapse(bm, x)
        if y.bits not in seen:
            seen.add(y.bits)
            out.append(y)
    return out


def map_code_expand(bm: BlockMap, code: Iterable[BitVector]) -> List[BitVector]:
    """Image of a code under expansion; injective, so cardinality is kept."""
    return [expand_vec(bm, x) for x in code]
