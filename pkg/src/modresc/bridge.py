"""Translation between biclique covers and clique covers of the saturated graph.

Saturating a bipartite graph turns both classes into cliques. Vertex ``i`` of
the left class keeps id ``i``; right vertex ``j`` becomes ``left_count + j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .bigraph import Biclique, BicliqueCover, BipartiteGraph, covers
from .boolmat import mask_of
from .errors import ContractError


@dataclass(frozen=True)
class GeneralGraph:
    vertex_count: int
    edges: frozenset[tuple[int, int]]
    left_count: int | None = None

    def __post_init__(self) -> None:
        norm = set()
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"self-loop at {a}")
            if not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
                raise ValueError(f"edge ({a}, {b}) out of range")
            norm.add((min(a, b), max(a, b)))
        object.__setattr__(self, "edges", frozenset(norm))

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = sorted(set(vertices))
        return all(0 <= v < self.vertex_count for v in vs) and all(
            (a, b) in self.edges for a, b in combinations(vs, 2))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


@dataclass(frozen=True)
class CliqueCover:
    cliques: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "cliques", tuple(frozenset(c) for c in self.cliques))

    @property
    def size(self) -> int:
        return len(self.cliques)

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.cliques)


def clique_edges(clique: Iterable[int]) -> set[tuple[int, int]]:
    return set(combinations(sorted(clique), 2))


def covers_clique_edges(h: GeneralGraph, cover: CliqueCover) -> bool:
    """True iff each member is a clique of ``h`` and together they cover every edge."""
    seen: set[tuple[int, int]] = set()
    for c in cover:
        if not h.is_clique(c):
            return False
        seen |= clique_edges(c)
    return seen >= h.edges


def saturate(g: BipartiteGraph) -> GeneralGraph:
    n, m = g.left_count, g.right_count
    edges = {(i, n + j) for i, j in g.edges()}
    edges |= set(combinations(range(n), 2))
    edges |= set(combinations(range(n, n + m), 2))
    return GeneralGraph(n + m, frozenset(edges), left_count=n)


def biclique_to_clique_cover(cover: BicliqueCover, g: BipartiteGraph) -> CliqueCover:
    """Each biclique's vertex set, then the two classes: ``cover.size + 2`` cliques."""
    if not covers(g, cover):
        raise ContractError("not a biclique edge cover of the graph")
    n = g.left_count
    cliques = [frozenset(b.rows) | frozenset(n + j for j in b.cols) for b in cover]
    cliques.append(frozenset(range(n)))
    cliques.append(frozenset(range(n, n + g.right_count)))
    return CliqueCover(tuple(cliques))


def clique_to_biclique_cover(cliques: CliqueCover, g: BipartiteGraph) -> BicliqueCover:
    """Split every clique that meets both classes into its left and right parts.

    Requires a graph with no vertex adjacent to the whole opposite class. The
    result is deduplicated; its size is not padded back up.
    """
    full = g.full_degree_vertices()
    if full:
        side, v = full[0]
        raise ContractError(
            f"{side} vertex {v} is adjacent to the whole opposite class; "
            "reduce the graph with rule 4 first")
    if not covers_clique_edges(saturate(g), cliques):
        raise ContractError("cliques do not form a clique edge cover of the saturated graph")
    n = g.left_count
    out = []
    for c in cliques:
        left = mask_of(v for v in c if v < n)
        right = mask_of(v - n for v in c if v >= n)
        if left and right:
            out.append(Biclique(left, right))
    result = BicliqueCover(tuple(out)).canonical()
    assert covers(g, result)
    return result
