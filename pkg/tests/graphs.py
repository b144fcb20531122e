"""Named small instances used across the suite."""

from modresc import BipartiteGraph, BoolMatrix, from_biadjacency


def matrix(*rows: str) -> BoolMatrix:
    return BoolMatrix.from_lists([[int(ch) for ch in r] for r in rows])


def graph(*rows: str) -> BipartiteGraph:
    return from_biadjacency(matrix(*rows))


# u1v1, u2v1, u2v2, u3v2, u3v3, u1v3 (0-based below)
CYCLE6 = BipartiteGraph.from_edges(3, 3, [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (0, 2)])
MATCHING = graph("10", "01")
K13 = graph("111")
K22 = graph("11", "11")
K23 = graph("111", "111")
L_SHAPE = graph("11", "10")
EMPTY22 = graph("00", "00")


def exhaustive(n: int, m: int):
    """Every bipartite graph on n + m labelled vertices."""
    for code in range(1 << (n * m)):
        mask = (1 << m) - 1
        adj = tuple((code >> (m * i)) & mask for i in range(n))
        yield BipartiteGraph(n, m, adj)
