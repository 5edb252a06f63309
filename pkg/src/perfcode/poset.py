"""Finite posets with order-ideal machinery.

The strict order is stored transitively closed as one down-set bitmask per
element, so closing a subset under the order is a union of member masks.
Input may be given as cover relations; the closure is computed once at
construction and the instance is immutable afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Set, Tuple

IDEAL_ENUM_LIMIT = 20


@dataclass(frozen=True)
class Poset:
    """Poset on elements 1..size; down[i-1] is the mask of ⟨i⟩ including i."""

    size: int
    down: Tuple[int, ...]
    up: Tuple[int, ...] = field(compare=False)

    @classmethod
    def from_relations(cls, size: int, relations: Iterable[Tuple[int, int]]) -> "Poset":
        """Build from strict relations (j, i) meaning j is strictly below i.

        Relations may be covers or any subset of the strict order; the
        transitive closure is taken.  Cycles violate antisymmetry and raise.
        """
        if size < 1:
            raise ValueError(f"poset size must be positive, got {size}")
        if size > 64:
            raise ValueError(f"poset size {size} exceeds 64")
        down = [1 << i for i in range(size)]
        pairs = []
        for j, i in relations:
            if not (1 <= j <= size and 1 <= i <= size):
                raise ValueError(f"relation {j} < {i} out of range 1..{size}")
            if j == i:
                raise ValueError(f"reflexive relation {j} < {i}")
            pairs.append((j - 1, i - 1))
        for j, i in pairs:
            down[i] |= 1 << j
        changed = True
        while changed:
            changed = False
            for i in range(size):
                acc = down[i]
                m = acc & ~(1 << i)
                while m:
                    j = (m & -m).bit_length() - 1
                    acc |= down[j]
                    m &= m - 1
                if acc != down[i]:
                    down[i] = acc
                    changed = True
        for i in range(size):
            for j in range(i + 1, size):
                if down[i] >> j & 1 and down[j] >> i & 1:
                    raise ValueError(f"elements {j + 1} and {i + 1} lie on a cycle")
        up = [1 << i for i in range(size)]
        for i in range(size):
            m = down[i] & ~(1 << i)
            while m:
                j = (m & -m).bit_length() - 1
                up[j] |= 1 << i
                m &= m - 1
        return cls(size, tuple(down), tuple(up))

    @classmethod
    def antichain(cls, size: int) -> "Poset":
        return cls.from_relations(size, [])

    @classmethod
    def chain(cls, size: int) -> "Poset":
        return cls.from_relations(size, [(i, i + 1) for i in range(1, size)])

    def strictly_below(self, j: int, i: int) -> bool:
        """True iff j ≺ i."""
        return j != i and bool(self.down[i - 1] >> (j - 1) & 1)

    def close_mask(self, mask: int) -> int:
        """Smallest order ideal containing the mask, as a mask."""
        out = 0
        m = mask
        while m:
            i = (m & -m).bit_length() - 1
            out |= self.down[i]
            m &= m - 1
        return out

    def is_ideal_mask(self, mask: int) -> bool:
        return self.close_mask(mask) == mask

    def maximal_mask(self, mask: int) -> int:
        """Maximal elements of an ideal given as a mask."""
        out = 0
        m = mask
        while m:
            i = (m & -m).bit_length() - 1
            if (mask & self.up[i] & ~(1 << i)) == 0:
                out |= 1 << i
            m &= m - 1
        return out

    def iter_ideal_masks(self) -> Iterator[int]:
        for mask in range(1 << self.size):
            if self.close_mask(mask) == mask:
                yield mask

    def cover_relations(self) -> Iterator[Tuple[int, int]]:
        """Yield the covers (j, i), j covered by i, in ascending order."""
        for i in range(1, self.size + 1):
            below = self.down[i - 1] & ~(1 << (i - 1))
            m = below
            while m:
                j = (m & -m).bit_length() - 1
                between = below & self.up[j] & ~(1 << j)
                if between == 0:
                    yield (j + 1, i)
                m &= m - 1


def _mask_of(size: int, elements: Iterable[int]) -> int:
    mask = 0
    for e in elements:
        if not 1 <= e <= size:
            raise ValueError(f"element {e} out of range 1..{size}")
        mask |= 1 << (e - 1)
    return mask


def _set_of(mask: int) -> Set[int]:
    out = set()
    while mask:
        out.add((mask & -mask).bit_length())
        mask &= mask - 1
    return out


def ideal_closure(p: Poset, elements: Iterable[int]) -> Set[int]:
    """The smallest order ideal of p containing the given elements."""
    return _set_of(p.close_mask(_mask_of(p.size, elements)))


def is_order_ideal(p: Poset, elements: Iterable[int]) -> bool:
    """True iff the set is down-closed."""
    mask = _mask_of(p.size, elements)
    return p.close_mask(mask) == mask


def maximal_elements(p: Poset, ideal: Iterable[int]) -> Set[int]:
    """Maximal elements of an order ideal; raises if the set is not an ideal."""
    mask = _mask_of(p.size, ideal)
    if p.close_mask(mask) != mask:
        raise ValueError(f"{sorted(_set_of(mask))} is not an order ideal")
    return _set_of(p.maximal_mask(mask))


def enumerate_order_ideals(p: Poset) -> Iterator[Set[int]]:
    """Yield every order ideal of p exactly once."""
    if p.size > IDEAL_ENUM_LIMIT:
        raise ValueError(f"poset size {p.size} exceeds ideal-enumeration guard {IDEAL_ENUM_LIMIT}")
    for mask in p.iter_ideal_masks():
        yield _set_of(mask)
