"""Finite set quotients computed by union-find.

A QuotientSet carries a fixed element tuple, a partition into blocks, and a
canonical representative per block (the least element in the element order).
It is the carrier used both for pushouts of labeled sets and for connected
components of pullback graphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence, TypeVar

from .errors import ValidationError

T = TypeVar("T", bound=Hashable)


class UnionFind:
    """Union-find over range(n) with path halving and union by size."""

    __slots__ = ("parent", "size")

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, a: int) -> int:
        parent = self.parent
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]


@dataclass(frozen=True)
class QuotientSet:
    """A partition of a finite set with least-element representatives.

    blocks are sorted internally and ordered by representative, so equal
    partitions compare equal.
    """

    elements: tuple
    blocks: tuple[tuple, ...]
    _find: dict = field(repr=False, compare=False)

    def find(self, element) -> object:
        """Canonical representative of the block containing element."""
        return self._find[element]

    def block_of(self, element) -> tuple:
        rep = self._find[element]
        for block in self.blocks:
            if block[0] == rep:
                return block
        raise KeyError(element)

    @property
    def representatives(self) -> tuple:
        return tuple(block[0] for block in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __contains__(self, element) -> bool:
        return element in self._find

    def same_block(self, a, b) -> bool:
        return self._find[a] == self._find[b]


def quotient(elements: Sequence[T], pairs: Iterable[tuple[T, T]]) -> QuotientSet:
    """Quotient of elements by the equivalence generated by pairs.

    Elements must be distinct and mutually orderable; every pair must name
    two elements of the carrier.
    """
    elements = tuple(elements)
    index = {e: i for i, e in enumerate(elements)}
    if len(index) != len(elements):
        raise ValidationError("quotient carrier contains duplicates")
    uf = UnionFind(len(elements))
    for a, b in pairs:
        try:
            uf.union(index[a], index[b])
        except KeyError as exc:
            raise ValidationError(f"pair component {exc.args[0]!r} not in carrier") from exc
    groups: dict[int, list[T]] = {}
    for e, i in index.items():
        groups.setdefault(uf.find(i), []).append(e)
    blocks = tuple(sorted((tuple(sorted(g)) for g in groups.values())))
    find = {e: block[0] for block in blocks for e in block}
    return QuotientSet(elements, blocks, find)


def discrete(elements: Sequence[T]) -> QuotientSet:
    """The discrete partition (every element its own block)."""
    return quotient(elements, ())
