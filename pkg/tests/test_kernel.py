import random

import pytest

from modresc import (Biclique, BicliqueCover, BipartiteGraph, ContractError, KernelResult,
                     ReductionEvent, RuleKind, Verdict, covers, kernelize, lift, solve_subsets)
from graphs import CYCLE6, K13, K22, exhaustive, graph
from oracles import brute_min_cover, random_adj


def opt(g: BipartiteGraph) -> int:
    return brute_min_cover(g.left_count, g.right_count, g.adj)


def optimal_kernel_cover(res: KernelResult) -> BicliqueCover:
    k = opt(res.kernel)
    cover = solve_subsets(res.kernel, k)
    assert cover is not None and cover.size == k
    return cover


def test_star_collapses_with_one_unit():
    res = kernelize(K13)
    assert res.kernel.left_count == res.kernel.right_count == 0
    assert res.parameter_offset == 1
    assert opt(K13) == 1


def test_k22_collapses():
    res = kernelize(K22)
    assert res.kernel.edge_count == 0
    # twins go first under rule priority, so the last edge is a pendant pair
    assert [e.kind for e in res.trace] == [RuleKind.TWIN, RuleKind.TWIN, RuleKind.PENDANT]
    assert res.parameter_offset == 1
    lifted = lift(BicliqueCover(), res)
    assert lifted.canonical().bicliques == (Biclique.of([0, 1], [0, 1]),)


def test_six_cycle_is_its_own_kernel():
    res = kernelize(CYCLE6)
    assert res.trace == ()
    assert res.kernel == CYCLE6
    assert res.parameter_offset == 0


def test_lift_star():
    res = kernelize(K13)
    lifted = lift(BicliqueCover(), res)
    assert lifted.bicliques == (Biclique.of([0], [0, 1, 2]),)


def test_lift_full_degree_empty_cover_repair():
    # K_{2,2} reduced by rule 4 alone: u0 then u1 full degree, then both columns isolated
    ev = [
        ReductionEvent(RuleKind.FULL_DEGREE, "left", 0, neighbor_snapshot=0b11),
        ReductionEvent(RuleKind.FULL_DEGREE, "left", 1, neighbor_snapshot=0b11),
        ReductionEvent(RuleKind.ISOLATED, "right", 0),
        ReductionEvent(RuleKind.ISOLATED, "right", 1),
    ]
    empty = BipartiteGraph(0, 0, ())
    res = KernelResult(K22, empty, (), (), tuple(ev))
    assert res.parameter_offset == 0
    lifted = lift(BicliqueCover(), res)
    assert lifted.bicliques == (Biclique.of([0, 1], [0, 1]),)
    assert covers(K22, lifted)


def test_lift_twins():
    g = graph("11", "11", "10")
    res = kernelize(g)
    assert res.trace[0] == ReductionEvent(RuleKind.TWIN, "left", 1, kept_twin=0)
    lifted = lift(optimal_kernel_cover(res), res)
    assert covers(g, lifted)
    assert lifted.size == opt(g) == 2
    for b in lifted:
        assert (0 in b.rows) == (1 in b.rows)


def test_lift_rejects_bad_kernel_cover():
    res = kernelize(CYCLE6)
    with pytest.raises(ContractError):
        lift(BicliqueCover((Biclique.of([0], [0, 2]),)), res)


def test_kernel_has_no_reducible_vertex():
    rng = random.Random(11)
    for _ in range(300):
        g = BipartiteGraph(6, 6, random_adj(rng, 6, 6, rng.choice([0.3, 0.5, 0.7])))
        k = kernelize(g).kernel
        rows = [r for r in k.adj]
        cols = [c for c in k.radj]
        assert all(x.bit_count() >= 2 for x in rows + cols)
        assert len(set(rows)) == len(rows) and len(set(cols)) == len(cols)
        assert not k.full_degree_vertices()
        assert kernelize(k).trace == ()


def _small_graphs():
    for n in range(1, 4):
        for m in range(1, 4):
            yield from exhaustive(n, m)
    rng = random.Random(5)
    for _ in range(150):
        yield BipartiteGraph(4, 4, random_adj(rng, 4, 4))


def test_soundness_against_brute_force():
    for g in _small_graphs():
        res = kernelize(g)
        assert opt(res.kernel) + res.parameter_offset == opt(g)
        lifted = lift(optimal_kernel_cover(res), res)
        assert covers(g, lifted)
        assert lifted.size == opt(g)


def test_size_bound_verdicts():
    assert kernelize(K13, 0).verdict is Verdict.REJECTED
    assert kernelize(K13, 1).verdict is Verdict.REDUCED
    assert kernelize(CYCLE6, 1).verdict is Verdict.REJECTED
    assert kernelize(CYCLE6, 2).verdict is Verdict.REDUCED


def test_size_bound_never_rejects_yes_instance():
    for g in _small_graphs():
        k = opt(g)
        assert kernelize(g, k).verdict is Verdict.REDUCED


def _drop(g: BipartiteGraph, left: set[int], right: set[int]) -> BipartiteGraph:
    keep = g.right_mask & ~sum(1 << j for j in right)
    return BipartiteGraph(g.left_count, g.right_count,
                          tuple(0 if i in left else r & keep for i, r in enumerate(g.adj)))


def test_pendant_removal_costs_exactly_one():
    rng = random.Random(9)
    checked = 0
    while checked < 200:
        g = BipartiteGraph(4, 4, random_adj(rng, 4, 4))
        pend = [i for i, r in enumerate(g.adj) if r.bit_count() == 1]
        if not pend:
            continue
        v = pend[0]
        u = g.adj[v].bit_length() - 1
        assert opt(g) == opt(_drop(g, {v}, {u})) + 1
        checked += 1


def test_full_degree_removal_safe_when_min_degree_two():
    rng = random.Random(13)
    checked = 0
    while checked < 100:
        g = BipartiteGraph(4, 4, random_adj(rng, 4, 4, 0.7))
        degs = [r.bit_count() for r in g.adj] + [c.bit_count() for c in g.radj]
        full = [i for i, r in enumerate(g.adj) if r == g.right_mask]
        if min(degs) < 2 or not full:
            continue
        assert opt(g) == max(opt(_drop(g, {full[0]}, set())), 1)
        checked += 1


def test_trace_descriptions_and_dicts():
    res = kernelize(graph("111", "110", "000"))
    for e in res.trace:
        assert e.describe().startswith("rule ")
        assert e.to_dict()["kind"] == e.kind.value
