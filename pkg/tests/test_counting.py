import random

import pytest
from hypothesis import given

from conftest import graphs
from covercount.atomsets import c6_apex, c6_chord
from covercount.corpus import connected_graphs, random_graph
from covercount.counting import (IDENTITY, CoverCounter, PairAB, count_covers,
                                 count_covers_bruteforce, count_precovers_bruteforce,
                                 rooted_profile)
from covercount.graph import (GuardExceeded, RootedGraph, complete_bipartite, cycle_graph,
                              disjoint_union, empty_graph, is_connected, make_graph, path_graph)

K2 = make_graph(2, [(0, 1)])


@pytest.mark.parametrize("g,want", [
    (cycle_graph(4), 7),
    (K2, 1),
    (complete_bipartite(2, 3), 25),
    (empty_graph(), 1),
    (make_graph(3, [(0, 1)]), 0),
])
def test_bruteforce_examples(g, want):
    assert count_covers_bruteforce(g) == want


def test_bruteforce_guard():
    with pytest.raises(GuardExceeded):
        count_covers_bruteforce(complete_bipartite(4, 6))
    with pytest.raises(GuardExceeded):
        count_covers_bruteforce(cycle_graph(8), max_edges=5)


def test_guard_env_override(monkeypatch):
    monkeypatch.setenv("COVERCOUNT_MAX_BRUTE_EDGES", "3")
    with pytest.raises(GuardExceeded):
        count_covers_bruteforce(cycle_graph(4))


@pytest.mark.parametrize("k,want", [(4, 7), (6, 18), (8, 47), (10, 123)])
def test_even_cycles(k, want):
    assert count_covers(cycle_graph(k)) == want
    assert count_covers_bruteforce(cycle_graph(k)) == want


def test_named_atoms():
    assert count_covers(c6_apex()) == 66
    x = count_covers(c6_chord())
    assert x == count_covers_bruteforce(c6_chord()) == 43
    assert 36 <= x <= 67


def test_paths_are_fibonacci():
    # covers of a path with k edges: F(k)
    fib = [0, 1]
    while len(fib) < 20:
        fib.append(fib[-1] + fib[-2])
    for k in range(1, 15):
        assert count_covers(path_graph(k)) == count_covers_bruteforce(path_graph(k)) == fib[k]


def test_oracle_exhaustive_small():
    for gs in connected_graphs(7).values():
        for g in gs:
            assert count_covers(g) == count_covers_bruteforce(g), g


@given(graphs(max_vertices=9, max_edges=12))
def test_oracle_random(g):
    assert count_covers(g) == count_covers_bruteforce(g)


@given(graphs(max_vertices=6, max_edges=6), graphs(max_vertices=6, max_edges=6))
def test_multiplicative_over_disjoint_union(g, h):
    assert count_covers(disjoint_union(g, h)) == count_covers(g) * count_covers(h)


def test_two_disjoint_c4():
    assert count_covers(disjoint_union(cycle_graph(4), cycle_graph(4))) == 49


def test_rooted_profile_examples():
    assert rooted_profile(RootedGraph(K2, 0)) == PairAB(1, 0)
    assert rooted_profile(RootedGraph(K2, 1)) == PairAB(1, 0)
    assert rooted_profile(RootedGraph(make_graph(1, []), 0)) == IDENTITY
    for r in range(4):
        assert rooted_profile(RootedGraph(cycle_graph(4), r)) == PairAB(7, 1)


def test_precover_examples():
    assert count_precovers_bruteforce(RootedGraph(K2, 0)) == 1
    assert count_precovers_bruteforce(RootedGraph(cycle_graph(4), 0)) == 8
    assert count_precovers_bruteforce(RootedGraph(make_graph(1, []), 0)) == 1


@given(graphs(max_vertices=8, max_edges=12, min_vertices=1))
def test_precover_identity(g):
    if not is_connected(g):
        return
    for r in range(g.n):
        rg = RootedGraph(g, r)
        assert count_precovers_bruteforce(rg) == rooted_profile(rg).s


@given(graphs(max_vertices=8, max_edges=12, min_vertices=2))
def test_beta_never_exceeds_alpha(g):
    if g.m == 0 or not is_connected(g):
        return
    for r in range(g.n):
        p = rooted_profile(RootedGraph(g, r))
        assert 1 <= p.alpha and p.beta <= p.alpha


def _with_path(g, a, b, inner):
    chain = [a] + list(range(g.n, g.n + inner)) + [b]
    return make_graph(g.n + inner, list(g.edges) + list(zip(chain, chain[1:])))


def test_growth_lemmas():
    rng = random.Random(11)
    for _ in range(400):
        g = random_graph(rng, max_edges=10, max_vertices=8, connected=True)
        base = count_covers(g)
        a, b = rng.sample(range(g.n), 2)
        if not g.has_edge(a, b):
            assert count_covers(make_graph(g.n, list(g.edges) + [(a, b)])) >= 2 * base
        assert count_covers(_with_path(g, a, b, 1)) >= 3 * base
        assert count_covers(_with_path(g, a, b, rng.randint(2, 4))) >= 5 * base


def test_fault_injected_counter_disagrees():
    bad = CoverCounter(edge_coef=1)
    assert bad(cycle_graph(4)) != 7
    assert count_covers(cycle_graph(4)) == 7


def test_cycles_are_lucas():
    lucas = [2, 1]
    while len(lucas) < 20:
        lucas.append(lucas[-1] + lucas[-2])
    for k in range(3, 17):
        assert count_covers(cycle_graph(k)) == count_covers_bruteforce(cycle_graph(k)) == lucas[k]


def test_long_cycle_without_guard():
    lucas = [2, 1]
    while len(lucas) < 61:
        lucas.append(lucas[-1] + lucas[-2])
    assert count_covers(cycle_graph(60)) == lucas[60]
