"""Exact biclique-cover search and the minimum-k driver.

Three decision procedures answer "is there a cover with at most k
bicliques?":

* ``solve_partition`` assigns edges to at most ``k`` blocks (restricted
  growth strings) and keeps a block only while the rows and columns it
  touches still span a complete bipartite subgraph;
* ``solve_subsets`` tries every subset of at most ``k`` maximal bicliques;
* ``solve_branch`` picks the uncovered edge lying in the fewest maximal
  bicliques and branches over those bicliques.

The first two are reference oracles and only practical on tiny kernels.
"""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Callable, Sequence

from .bigraph import (Biclique, BicliqueCover, BipartiteGraph, cover_to_matrices,
                      covers, from_biadjacency)
from .boolmat import BoolMatrix, ModRescPair, mat_otimes, verify_solution
from .errors import BudgetExhausted, ContractError, InputError
from .kernel import KernelResult, kernelize, lift
from .maximal import maximal_bicliques

ALGORITHMS = ("partition", "subsets", "branch")
STRATEGIES = ("linear", "dichotomy")


@dataclass
class SolveStats:
    nodes: int = 0
    partitions: int = 0
    kernel_offset: int = 0
    kernel_left: int = 0
    kernel_right: int = 0
    maximal_bicliques: int = 0
    lower_bound: int = 0
    upper_bound: int = 0
    ms: float = 0.0

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class SolverConfig:
    algorithm: str = "branch"
    max_k: int | None = None
    deterministic: bool = True
    seed: int = 0
    strategy: str = "linear"
    kernelize: bool = True

    def __post_init__(self) -> None:
        if self.algorithm not in ALGORITHMS:
            raise InputError(f"unknown algorithm {self.algorithm!r}; choose from {ALGORITHMS}")
        if self.strategy not in STRATEGIES:
            raise InputError(f"unknown strategy {self.strategy!r}; choose from {STRATEGIES}")
        if self.max_k is not None and self.max_k < 0:
            raise InputError("max_k must be non-negative")


@dataclass(frozen=True)
class CoverSolution:
    k: int
    cover: BicliqueCover
    pair: ModRescPair
    stats: SolveStats = field(compare=False)


class _Edges:
    """Edge numbering in (row, col) order, and biclique -> edge bit set."""

    def __init__(self, g: BipartiteGraph):
        self.g = g
        self.list = list(g.edges())
        self.index = {e: k for k, e in enumerate(self.list)}
        self.all = (1 << len(self.list)) - 1

    def mask(self, b: Biclique) -> int:
        index = self.index
        out = 0
        for e in b.edges():
            out |= 1 << index[e]
        return out


def _fooling_size(g: BipartiteGraph, edges: Sequence[tuple[int, int]], limit: int) -> int:
    """Greedy set of edges no two of which fit in one biclique; stops past ``limit``."""
    adj = g.adj
    chosen: list[tuple[int, int]] = []
    for a, b in edges:
        if all(not ((adj[a] >> d) & 1 and (adj[c] >> b) & 1) for c, d in chosen):
            chosen.append((a, b))
            if len(chosen) > limit:
                break
    return len(chosen)


def fooling_set_lower_bound(g: BipartiteGraph) -> int:
    """Size of a greedily built fooling set; a lower bound on the cover number."""
    return _fooling_size(g, list(g.edges()), g.edge_count)


def greedy_cover(g: BipartiteGraph, bicliques: Sequence[Biclique] | None = None) -> BicliqueCover:
    """Repeatedly take the maximal biclique covering most still-uncovered edges."""
    if bicliques is None:
        bicliques = maximal_bicliques(g)
    ed = _Edges(g)
    masks = [ed.mask(b) for b in bicliques]
    uncovered = ed.all
    chosen = []
    while uncovered:
        best = max(range(len(masks)), key=lambda t: ((masks[t] & uncovered).bit_count(), -t))
        chosen.append(bicliques[best])
        uncovered &= ~masks[best]
    return BicliqueCover(tuple(chosen)).canonical()


def solve_partition(g: BipartiteGraph, k: int, stats: SolveStats | None = None) -> BicliqueCover | None:
    """Cover with at most ``k`` bicliques via edge partitions, or ``None``."""
    stats = stats if stats is not None else SolveStats()
    adj, radj = g.adj, g.radj
    edges = list(g.edges())
    if not edges:
        return BicliqueCover()
    blocks: list[list[int]] = []

    def place(idx: int) -> bool:
        stats.nodes += 1
        if idx == len(edges):
            stats.partitions += 1
            return True
        a, b = edges[idx]
        abit, bbit = 1 << a, 1 << b
        for blk in blocks:
            left, right = blk[0] | abit, blk[1] | bbit
            if right & ~adj[a] or left & ~radj[b]:
                continue
            saved = blk[0], blk[1]
            blk[0], blk[1] = left, right
            if place(idx + 1):
                return True
            blk[0], blk[1] = saved
        if len(blocks) < k:
            blocks.append([abit, bbit])
            if place(idx + 1):
                return True
            blocks.pop()
        return False

    if place(0):
        return BicliqueCover(tuple(Biclique(l, r) for l, r in blocks)).canonical()
    return None


def solve_subsets(g: BipartiteGraph, k: int, stats: SolveStats | None = None,
                  bicliques: Sequence[Biclique] | None = None) -> BicliqueCover | None:
    """Smallest subset (of size at most ``k``) of maximal bicliques covering every edge."""
    stats = stats if stats is not None else SolveStats()
    if bicliques is None:
        bicliques = maximal_bicliques(g)
    ed = _Edges(g)
    masks = [ed.mask(b) for b in bicliques]
    for size in range(0, min(k, len(masks)) + 1):
        for combo in combinations(range(len(masks)), size):
            stats.nodes += 1
            union = 0
            for t in combo:
                union |= masks[t]
            if union == ed.all:
                return BicliqueCover(tuple(bicliques[t] for t in combo)).canonical()
    return None


def solve_branch(g: BipartiteGraph, k: int, stats: SolveStats | None = None,
                 bicliques: Sequence[Biclique] | None = None) -> BicliqueCover | None:
    """Depth-first branching over the maximal bicliques containing a hardest uncovered edge."""
    stats = stats if stats is not None else SolveStats()
    if bicliques is None:
        bicliques = maximal_bicliques(g)
    ed = _Edges(g)
    masks = [ed.mask(b) for b in bicliques]
    containing: list[list[int]] = [[] for _ in ed.list]
    for t, mk in enumerate(masks):
        e = mk
        while e:
            low = e & -e
            containing[low.bit_length() - 1].append(t)
            e ^= low
    # edges ordered by how few bicliques contain them; ties by edge index
    order = sorted(range(len(ed.list)), key=lambda e: (len(containing[e]), e))
    failed: dict[int, int] = {}

    def search(uncovered: int, budget: int) -> list[int] | None:
        stats.nodes += 1
        if not uncovered:
            return []
        if budget <= 0 or failed.get(uncovered, -1) >= budget:
            return None
        pending = [ed.list[e] for e in range(len(ed.list)) if (uncovered >> e) & 1]
        if _fooling_size(g, pending, budget) > budget:
            failed[uncovered] = budget
            return None
        pick = next(e for e in order if (uncovered >> e) & 1)
        options = sorted(containing[pick], key=lambda t: (-(masks[t] & uncovered).bit_count(), t))
        for t in options:
            rest = search(uncovered & ~masks[t], budget - 1)
            if rest is not None:
                return [t] + rest
        failed[uncovered] = budget
        return None

    found = search(ed.all, k)
    if found is None:
        return None
    return BicliqueCover(tuple(bicliques[t] for t in found)).canonical()


def _identity_kernel(g: BipartiteGraph) -> KernelResult:
    return KernelResult(g, g, tuple(range(g.left_count)), tuple(range(g.right_count)), ())


def min_cover(g: BipartiteGraph, config: SolverConfig | None = None) -> CoverSolution:
    """Minimum biclique edge cover of ``g``.

    Kernelizes once, brackets the kernel optimum between a fooling-set lower
    bound and a greedy upper bound, searches that range with the configured
    decision procedure, then lifts the kernel cover back to ``g``.

    Raises ``BudgetExhausted`` if ``config.max_k`` is smaller than the optimum.
    """
    config = config or SolverConfig()
    t0 = time.perf_counter()
    stats = SolveStats()
    kres = kernelize(g) if config.kernelize else _identity_kernel(g)
    kg = kres.kernel
    offset = kres.parameter_offset
    stats.kernel_offset = offset
    stats.kernel_left, stats.kernel_right = kg.left_count, kg.right_count
    stats.lower_bound = stats.upper_bound = offset

    budget = None if config.max_k is None else config.max_k - offset

    if kg.edge_count == 0:
        kernel_cover = BicliqueCover()
    else:
        bicliques = maximal_bicliques(kg)
        stats.maximal_bicliques = len(bicliques)
        greedy = greedy_cover(kg, bicliques)
        lower = fooling_set_lower_bound(kg)
        stats.lower_bound, stats.upper_bound = lower + offset, greedy.size + offset
        if budget is not None and lower > budget:
            raise BudgetExhausted(config.max_k, lower + offset, stats.to_dict())

        decide: Callable[[int], BicliqueCover | None]
        if config.algorithm == "partition":
            decide = lambda k: solve_partition(kg, k, stats)  # noqa: E731
        elif config.algorithm == "subsets":
            decide = lambda k: solve_subsets(kg, k, stats, bicliques)  # noqa: E731
        else:
            decide = lambda k: solve_branch(kg, k, stats, bicliques)  # noqa: E731

        greedy_ok = budget is None or greedy.size <= budget
        top = greedy.size - 1 if greedy_ok else budget
        kernel_cover = greedy if greedy_ok else None
        if config.strategy == "linear":
            for k in range(lower, top + 1):
                found = decide(k)
                if found is not None:
                    kernel_cover = found
                    break
        else:
            lo, hi = lower, top + 1
            while lo < hi:
                mid = (lo + hi) // 2
                found = decide(mid)
                if found is None:
                    lo = mid + 1
                else:
                    kernel_cover, hi = found, found.size
        if kernel_cover is None:
            raise BudgetExhausted(config.max_k, lower + offset, stats.to_dict())

    cover = lift(kernel_cover, kres).canonical()
    if config.max_k is not None and cover.size > config.max_k:
        raise BudgetExhausted(config.max_k, cover.size, stats.to_dict())
    if not covers(g, cover):
        raise ContractError("internal error: returned cover does not cover the graph")
    pair = cover_to_matrices(g, cover)
    if not verify_solution(BoolMatrix(g.left_count, g.right_count, g.adj), pair):
        raise ContractError("internal error: factorisation does not reproduce the input")
    stats.ms = (time.perf_counter() - t0) * 1000.0
    return CoverSolution(cover.size, cover, pair, stats)


def solve_modresc(c: BoolMatrix, config: SolverConfig | None = None) -> CoverSolution:
    """Minimum-gene mod/resc factorisation of the compatibility matrix ``c``."""
    sol = min_cover(from_biadjacency(c), config)
    if not verify_solution(c, sol.pair):
        raise ContractError("internal error: factorisation does not reproduce the input")
    return sol


def generate_planted(n: int, m: int, k_star: int, left_density: float, right_density: float,
                     seed: int) -> tuple[BoolMatrix, ModRescPair]:
    """Random ``C = M ⊗ R`` with ``k_star`` hidden genes.

    ``M`` entries are 1 with probability ``left_density``; ``R`` entries are 0
    with probability ``right_density``. The optimum of ``C`` is at most the
    number of hidden genes whose biclique is nonempty, possibly fewer.
    """
    for name, p in (("left_density", left_density), ("right_density", right_density)):
        if not 0.0 <= p <= 1.0:
            raise InputError(f"{name} must lie in [0, 1], got {p}")
    if n < 0 or m < 0 or k_star < 0:
        raise InputError("n, m and k_star must be non-negative")
    rng = random.Random(seed)
    mod = [[1 if rng.random() < left_density else 0 for _ in range(k_star)] for _ in range(n)]
    resc = [[0 if rng.random() < right_density else 1 for _ in range(k_star)] for _ in range(m)]
    pair = ModRescPair(BoolMatrix.from_lists(mod, ncols=k_star),
                       BoolMatrix.from_lists(resc, ncols=k_star))
    return mat_otimes(pair.mod, pair.resc), pair
