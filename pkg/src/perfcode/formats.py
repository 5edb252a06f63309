"""Plain-text file formats for posets, weighted posets, digraphs and codes.

All formats are line oriented, 1-based, and written the way they are read,
so serialize/parse round-trips are exact.  Blank lines are ignored.
"""

from __future__ import annotations

from typing import List

from .bitvec import BitVector
from .codes import BinaryLinearCode
from .digraph import Digraph
from .poset import Poset
from .wposet import WeightedPoset


class FormatError(ValueError):
    """A malformed input file; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _content_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line:
            yield number, line


def parse_vector(text: str) -> BitVector:
    try:
        return BitVector.from_literal(text.strip())
    except ValueError as exc:
        raise FormatError(str(exc), 1) from exc


def parse_poset(text: str) -> Poset:
    """First line the size m, then one strict relation `j < i` per line."""
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("empty poset file", 1)
    number, head = lines[0]
    try:
        size = int(head)
    except ValueError:
        raise FormatError(f"expected element count, got {head!r}", number) from None
    relations = []
    for number, line in lines[1:]:
        parts = line.split()
        if len(parts) != 3 or parts[1] != "<":
            raise FormatError(f"expected `j < i`, got {line!r}", number)
        try:
            relations.append((int(parts[0]), int(parts[2])))
        except ValueError:
            raise FormatError(f"non-integer element in {line!r}", number) from None
    try:
        return Poset.from_relations(size, relations)
    except ValueError as exc:
        raise FormatError(str(exc), lines[0][0]) from exc


def write_poset(p: Poset) -> str:
    lines = [str(p.size)]
    lines += [f"{j} < {i}" for j, i in p.cover_relations()]
    return "\n".join(lines) + "\n"


def parse_wposet(text: str) -> WeightedPoset:
    """Poset format plus one line `w i pi(i)` per element; weights default to 1."""
    relation_lines = []
    weights = {}
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("empty weighted-poset file", 1)
    head_number, head = lines[0]
    try:
        size = int(head)
    except ValueError:
        raise FormatError(f"expected element count, got {head!r}", head_number) from None
    for number, line in lines[1:]:
        if line.startswith("w "):
            parts = line.split()
            if len(parts) != 3:
                raise FormatError(f"expected `w i pi`, got {line!r}", number)
            try:
                weights[int(parts[1])] = int(parts[2])
            except ValueError:
                raise FormatError(f"non-integer in {line!r}", number) from None
        else:
            relation_lines.append((number, line))
    poset_text = "\n".join([str(size)] + [line for _, line in relation_lines])
    poset = parse_poset(poset_text)
    pi = [1] * size
    for element, weight in weights.items():
        if not 1 <= element <= size:
            raise FormatError(f"weight for element {element} out of range 1..{size}", head_number)
        pi[element - 1] = weight
    try:
        return WeightedPoset(poset, tuple(pi))
    except ValueError as exc:
        raise FormatError(str(exc), head_number) from exc


def write_wposet(wp: WeightedPoset) -> str:
    lines = [str(wp.size)]
    lines += [f"{j} < {i}" for j, i in wp.poset.cover_relations()]
    lines += [f"w {i} {wp.pi[i - 1]}" for i in range(1, wp.size + 1)]
    return "\n".join(lines) + "\n"


def parse_digraph(text: str) -> Digraph:
    """First line the vertex count n, then one edge `u -> v` per line."""
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("empty digraph file", 1)
    number, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise FormatError(f"expected vertex count, got {head!r}", number) from None
    edges = []
    for number, line in lines[1:]:
        parts = line.split()
        if len(parts) != 3 or parts[1] != "->":
            raise FormatError(f"expected `u -> v`, got {line!r}", number)
        try:
            edges.append((int(parts[0]), int(parts[2])))
        except ValueError:
            raise FormatError(f"non-integer vertex in {line!r}", number) from None
    try:
        return Digraph.from_edges(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc), lines[0][0]) from exc


def write_digraph(g: Digraph) -> str:
    lines = [str(g.n)]
    lines += [f"{u} -> {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_code(text: str) -> BinaryLinearCode:
    """First line `n k`, then k basis-vector literals."""
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("empty code file", 1)
    number, head = lines[0]
    parts = head.split()
    if len(parts) != 2:
        raise FormatError(f"expected `n k`, got {head!r}", number)
    try:
        n, k = int(parts[0]), int(parts[1])
    except ValueError:
        raise FormatError(f"non-integer in {head!r}", number) from None
    if len(lines) - 1 != k:
        raise FormatError(f"expected {k} basis vectors, found {len(lines) - 1}", number)
    masks: List[int] = []
    for number, line in lines[1:]:
        try:
            v = BitVector.from_literal(line)
        except ValueError as exc:
            raise FormatError(str(exc), number) from exc
        if v.length != n:
            raise FormatError(f"basis vector length {v.length} != {n}", number)
        masks.append(v.bits)
    try:
        return BinaryLinearCode.from_basis(n, masks)
    except ValueError as exc:
        raise FormatError(str(exc), lines[0][0]) from exc


def write_code(code: BinaryLinearCode) -> str:
    lines = [f"{code.length} {code.dimension}"]
    lines += [BitVector(code.length, b).to_literal() for b in code.basis]
    return "\n".join(lines) + "\n"
