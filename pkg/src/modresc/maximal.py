"""Enumeration of inclusion-maximal bicliques.

Maximal bicliques are exactly the pairs ``(L, R)`` with ``R`` the common
neighbourhood of ``L`` and ``L`` the common neighbourhood of ``R``. They are
listed with Close-by-One over left-vertex closures: each closed left set is
generated once, from its lexicographically canonical parent, so no
duplicate filtering is needed.
"""

from __future__ import annotations

import math

from .bigraph import Biclique, BipartiteGraph


def _closures(g: BipartiteGraph):
    adj = g.adj
    radj = g.radj
    full_left = g.left_mask

    def close_left(right: int) -> int:
        out = full_left
        while right:
            low = right & -right
            out &= radj[low.bit_length() - 1]
            right ^= low
        return out

    # stack of (left closure, right side, next left vertex to try)
    top_right = g.right_mask
    stack = [(close_left(top_right), top_right, 0)]
    yield stack[0][0], stack[0][1]
    while stack:
        left, right, first = stack.pop()
        for u in range(first, g.left_count):
            bit = 1 << u
            if left & bit:
                continue
            new_right = right & adj[u]
            new_left = close_left(new_right)
            below = bit - 1
            if new_left & below != left & below:
                continue
            yield new_left, new_right
            stack.append((new_left, new_right, u + 1))


def maximal_bicliques(g: BipartiteGraph) -> list[Biclique]:
    """All maximal bicliques with both sides nonempty, in canonical (rows, cols) order."""
    found = [Biclique(l, r) for l, r in _closures(g) if l and r]
    found.sort(key=Biclique.sort_key)
    return found


def count_bound(g: BipartiteGraph) -> int:
    return 2 ** math.ceil((g.left_count + g.right_count) / 2)


def count_bound_check(g: BipartiteGraph) -> bool:
    return len(maximal_bicliques(g)) <= count_bound(g)
