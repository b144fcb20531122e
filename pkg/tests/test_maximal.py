import random

from hypothesis import given, settings, strategies as st

from modresc import Biclique, BipartiteGraph, count_bound_check, maximal_bicliques
from modresc.maximal import count_bound
from graphs import CYCLE6, EMPTY22, K23, MATCHING, exhaustive
from oracles import brute_maximal_bicliques, random_adj


def as_pairs(found):
    return {(b.left, b.right) for b in found}


def test_six_cycle_stars():
    found = maximal_bicliques(CYCLE6)
    assert len(found) == 6
    assert as_pairs(found) == brute_maximal_bicliques(3, 3, CYCLE6.adj)
    assert all(len(b.rows) == 1 or len(b.cols) == 1 for b in found)


def test_small_named():
    assert maximal_bicliques(K23) == [Biclique.of([0, 1], [0, 1, 2])]
    assert maximal_bicliques(MATCHING) == [Biclique.of([0], [0]), Biclique.of([1], [1])]
    assert maximal_bicliques(EMPTY22) == []


def test_count_bound_examples():
    assert count_bound(CYCLE6) == 8 and count_bound_check(CYCLE6)
    assert count_bound(K23) == 8 and count_bound_check(K23)
    assert count_bound_check(EMPTY22)


def test_agrees_with_brute_force_up_to_3x4():
    for n in range(1, 4):
        for m in range(1, 5):
            for g in exhaustive(n, m):
                assert as_pairs(maximal_bicliques(g)) == brute_maximal_bicliques(n, m, g.adj)


graphs = st.tuples(st.integers(1, 7), st.integers(1, 7)).flatmap(
    lambda nm: st.lists(st.integers(0, (1 << nm[1]) - 1), min_size=nm[0], max_size=nm[0]).map(
        lambda adj: BipartiteGraph(len(adj), nm[1], tuple(adj))))


@settings(max_examples=200)
@given(graphs)
def test_closure_property_and_canonical_order(g):
    found = maximal_bicliques(g)
    for b in found:
        assert b.left and b.right
        assert g.common_right(b.left) == b.right
        assert g.common_left(b.right) == b.left
    assert found == sorted(set(found), key=Biclique.sort_key)


@settings(max_examples=100)
@given(graphs)
def test_matches_brute_force(g):
    assert as_pairs(maximal_bicliques(g)) == brute_maximal_bicliques(g.left_count, g.right_count, g.adj)


def test_count_bound_random_10x10():
    rng = random.Random(21)
    for _ in range(100):
        g = BipartiteGraph(10, 10, random_adj(rng, 10, 10, rng.random()))
        assert count_bound_check(g)
