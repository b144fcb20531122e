"""Brute-force reference computations, kept free of the package's search code.

Graphs are passed as plain ``(n, m, adj)`` where ``adj[i]`` is the bit set of
right neighbours of row ``i``; edge sets are bit sets over ``i * m + j``.
"""

from __future__ import annotations

from itertools import combinations


def edge_bits(n, m, adj):
    out = 0
    for i in range(n):
        for j in range(m):
            if (adj[i] >> j) & 1:
                out |= 1 << (i * m + j)
    return out


def _pair_bits(m, left, right):
    out = 0
    for i in range(left.bit_length()):
        if (left >> i) & 1:
            for j in range(m):
                if (right >> j) & 1:
                    out |= 1 << (i * m + j)
    return out


def all_bicliques(n, m, adj):
    """Every (L, R) with both sides nonempty whose full product lies in the edge set."""
    out = []
    for left in range(1, 1 << n):
        for right in range(1, 1 << m):
            if all(right & ~adj[i] == 0 for i in range(n) if (left >> i) & 1):
                out.append((left, right))
    return out


def brute_maximal_bicliques(n, m, adj):
    """Bicliques that no single added vertex keeps complete."""
    found = set(all_bicliques(n, m, adj))
    out = set()
    for left, right in found:
        grow = any((left | 1 << i, right) in found for i in range(n) if not (left >> i) & 1)
        grow = grow or any((left, right | 1 << j) in found for j in range(m) if not (right >> j) & 1)
        if not grow:
            out.add((left, right))
    return out


def min_union_count(target, pieces):
    """Fewest pieces (bit sets, each a subset of target) whose union is target; BFS over unions."""
    if target == 0:
        return 0
    pieces = list(set(pieces))
    frontier = {0}
    seen = {0}
    k = 0
    while frontier:
        k += 1
        nxt = set()
        for s in frontier:
            for p in pieces:
                u = s | p
                if u == target:
                    return k
                if u not in seen:
                    seen.add(u)
                    nxt.add(u)
        frontier = nxt
    return None


def brute_min_cover(n, m, adj):
    """Biclique cover number by BFS over unions of all bicliques."""
    pieces = [_pair_bits(m, l, r) for l, r in all_bicliques(n, m, adj)]
    return min_union_count(edge_bits(n, m, adj), pieces)


def factorisation_levels(n, m, max_k):
    """For every n x m matrix (as an edge bit set), the least k with some M (n x k),
    R (m x k) reproducing it, found by enumerating gene columns directly.

    A single gene column with mod column ``a`` and resc column ``b`` switches on
    exactly the entries (i, j) with a[i] = 1 and b[j] = 0.
    """
    columns = set()
    for a in range(1 << n):
        for b in range(1 << m):
            columns.add(_pair_bits(m, a, ~b & ((1 << m) - 1)))
    best = {0: 0}
    frontier = {0}
    for k in range(1, max_k + 1):
        nxt = set()
        for s in frontier:
            for col in columns:
                u = s | col
                if u not in best:
                    best[u] = k
                    nxt.add(u)
        frontier = nxt
    return best


def brute_min_clique_cover(vertex_count, edges):
    """Clique edge cover number of a general graph, enumerating all vertex subsets."""
    edges = {(min(a, b), max(a, b)) for a, b in edges}
    index = {e: t for t, e in enumerate(sorted(edges))}
    target = (1 << len(index)) - 1
    pieces = []
    for size in range(2, vertex_count + 1):
        for vs in combinations(range(vertex_count), size):
            pairs = list(combinations(vs, 2))
            if all(p in edges for p in pairs):
                bits = 0
                for p in pairs:
                    bits |= 1 << index[p]
                pieces.append(bits)
    return min_union_count(target, pieces)


def random_adj(rng, n, m, density=0.5):
    return tuple(sum(1 << j for j in range(m) if rng.random() < density) for _ in range(n))
