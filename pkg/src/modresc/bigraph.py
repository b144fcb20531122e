"""Bipartite graphs, bicliques and the matrix/cover correspondence."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .boolmat import BoolMatrix, ModRescPair, bits_of, mask_of, verify_solution
from .errors import ContractError


@dataclass(frozen=True)
class BipartiteGraph:
    """Left vertices ``0..left_count-1``, right vertices ``0..right_count-1``.

    ``adj[i]`` is the bit set of right neighbours of left vertex ``i``;
    ``radj`` is the transpose, derived on construction.
    """

    left_count: int
    right_count: int
    adj: tuple[int, ...]
    radj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.adj) != self.left_count:
            raise ValueError("adjacency length does not match left_count")
        full = self.right_mask
        radj = [0] * self.right_count
        for i, row in enumerate(self.adj):
            if row < 0 or row & ~full:
                raise ValueError(f"left vertex {i} has out-of-range neighbours")
            for j in bits_of(row):
                radj[j] |= 1 << i
        object.__setattr__(self, "radj", tuple(radj))

    @classmethod
    def from_edges(cls, left_count: int, right_count: int,
                   edges: Iterable[tuple[int, int]]) -> BipartiteGraph:
        adj = [0] * left_count
        for i, j in edges:
            if not (0 <= i < left_count and 0 <= j < right_count):
                raise ValueError(f"edge ({i}, {j}) out of range")
            adj[i] |= 1 << j
        return cls(left_count, right_count, tuple(adj))

    @property
    def left_mask(self) -> int:
        return (1 << self.left_count) - 1

    @property
    def right_mask(self) -> int:
        return (1 << self.right_count) - 1

    def edges(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self.adj):
            for j in bits_of(row):
                yield i, j

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.adj)

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.adj[i] >> j) & 1)

    def common_right(self, left: int) -> int:
        """Right vertices adjacent to every left vertex in the mask (all of them for an empty mask)."""
        out = self.right_mask
        for i in bits_of(left):
            out &= self.adj[i]
        return out

    def common_left(self, right: int) -> int:
        out = self.left_mask
        for j in bits_of(right):
            out &= self.radj[j]
        return out

    def full_degree_vertices(self) -> list[tuple[str, int]]:
        """Vertices adjacent to the whole (nonempty) opposite class."""
        out = []
        if self.right_count:
            out += [("left", i) for i, r in enumerate(self.adj) if r == self.right_mask]
        if self.left_count:
            out += [("right", j) for j, c in enumerate(self.radj) if c == self.left_mask]
        return out


@dataclass(frozen=True, order=False)
class Biclique:
    """A pair of vertex bit sets; ``left`` indexes rows, ``right`` columns."""

    left: int
    right: int

    @classmethod
    def of(cls, rows: Iterable[int], cols: Iterable[int]) -> Biclique:
        return cls(mask_of(rows), mask_of(cols))

    @property
    def rows(self) -> tuple[int, ...]:
        return tuple(bits_of(self.left))

    @property
    def cols(self) -> tuple[int, ...]:
        return tuple(bits_of(self.right))

    @property
    def is_empty(self) -> bool:
        return not self.left or not self.right

    def sort_key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return self.rows, self.cols

    def edges(self) -> Iterator[tuple[int, int]]:
        cols = self.cols
        for i in self.rows:
            for j in cols:
                yield i, j

    def __repr__(self) -> str:
        return f"Biclique(rows={list(self.rows)}, cols={list(self.cols)})"


@dataclass(frozen=True)
class BicliqueCover:
    bicliques: tuple[Biclique, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "bicliques", tuple(self.bicliques))

    @property
    def size(self) -> int:
        return len(self.bicliques)

    def __len__(self) -> int:
        return len(self.bicliques)

    def __iter__(self) -> Iterator[Biclique]:
        return iter(self.bicliques)

    def canonical(self) -> BicliqueCover:
        """Sorted lexicographically by (rows, cols) with duplicates removed."""
        return BicliqueCover(tuple(sorted(set(self.bicliques), key=Biclique.sort_key)))


def from_biadjacency(c: BoolMatrix) -> BipartiteGraph:
    return BipartiteGraph(c.nrows, c.ncols, c.rows)


def to_biadjacency(g: BipartiteGraph) -> BoolMatrix:
    return BoolMatrix(g.left_count, g.right_count, g.adj)


def is_biclique(g: BipartiteGraph, left: int | Iterable[int], right: int | Iterable[int]) -> bool:
    """True iff every left x right pair is an edge (vacuously true if either side is empty)."""
    if not isinstance(left, int):
        left = mask_of(left)
    if not isinstance(right, int):
        right = mask_of(right)
    if left & ~g.left_mask or right & ~g.right_mask:
        return False
    return all(right & ~g.adj[i] == 0 for i in bits_of(left))


def covered_adjacency(g: BipartiteGraph, cover: Iterable[Biclique]) -> list[int]:
    """Per-left-vertex union of the edges of the cover's bicliques."""
    out = [0] * g.left_count
    for b in cover:
        for i in bits_of(b.left):
            out[i] |= b.right
    return out


def covers(g: BipartiteGraph, cover: BicliqueCover | Iterable[Biclique]) -> bool:
    bicliques = list(cover)
    if not all(is_biclique(g, b.left, b.right) for b in bicliques):
        return False
    return tuple(covered_adjacency(g, bicliques)) == g.adj


def cover_to_matrices(g: BipartiteGraph, cover: BicliqueCover) -> ModRescPair:
    """One gene per biclique: mod marks its rows, resc is 0 exactly on its columns."""
    if not covers(g, cover):
        raise ContractError("cover is not a biclique edge cover of the graph")
    k = cover.size
    mod = [0] * g.left_count
    resc = [(1 << k) - 1] * g.right_count
    for ell, b in enumerate(cover):
        for i in bits_of(b.left):
            mod[i] |= 1 << ell
        for j in bits_of(b.right):
            resc[j] &= ~(1 << ell)
    return ModRescPair(BoolMatrix(g.left_count, k, tuple(mod)),
                       BoolMatrix(g.right_count, k, tuple(resc)))


def matrices_to_cover(g: BipartiteGraph, pair: ModRescPair) -> BicliqueCover:
    if not verify_solution(to_biadjacency(g), pair):
        raise ContractError("pair does not reproduce the graph's bi-adjacency matrix")
    mod_t = pair.mod.transpose().rows
    zero_t = pair.resc.complement().transpose().rows
    bicliques = [Biclique(l, r) for l, r in zip(mod_t, zero_t) if l and r]
    return BicliqueCover(bicliques).canonical()
