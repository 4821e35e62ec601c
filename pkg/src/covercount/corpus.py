"""Test corpora: every connected graph with few edges (one per
isomorphism class) and seeded random graphs."""

from __future__ import annotations

import random

from .graph import Graph, is_connected, make_graph
from .iso import invariant, isomorphic


def _refined(g: Graph) -> tuple:
    # second-order invariant: neighbour multisets of first-order signatures
    base = invariant(g)
    deg = g.degrees()
    nb = [tuple(sorted(deg[w] for w in g.neighbors(v))) for v in range(g.n)]
    two = sorted((deg[v], tuple(sorted(nb[w] for w in g.neighbors(v)))) for v in range(g.n))
    return base + (tuple(two),)


def connected_graphs(max_edges: int) -> dict[int, list[Graph]]:
    """All connected graphs with 1..max_edges edges, one per isomorphism
    class, keyed by edge count.

    Each connected graph with m >= 2 edges loses either a cycle edge or a
    leaf edge to a connected graph with m - 1 edges, so growing by chords
    and pendant edges reaches every class.
    """
    layers = {1: [make_graph(2, [(0, 1)])]} if max_edges >= 1 else {}
    for m in range(2, max_edges + 1):
        buckets: dict[tuple, list[Graph]] = {}
        out = []
        for g in layers[m - 1]:
            cands = []
            for u in range(g.n):
                for v in range(u + 1, g.n):
                    if not g.has_edge(u, v):
                        cands.append(make_graph(g.n, list(g.edges) + [(u, v)]))
                cands.append(make_graph(g.n + 1, list(g.edges) + [(u, g.n)]))
            for h in cands:
                b = buckets.setdefault(_refined(h), [])
                if not any(isomorphic(h, x) for x in b):
                    b.append(h)
                    out.append(h)
        layers[m] = out
    return layers


def random_graph(rng: random.Random, max_edges: int = 12, max_vertices: int = 9,
                 connected: bool = False) -> Graph:
    while True:
        n = rng.randint(1, max_vertices)
        slots = [(u, v) for u in range(n) for v in range(u + 1, n)]
        m = rng.randint(0, min(max_edges, len(slots)))
        g = make_graph(n, rng.sample(slots, m))
        if not connected or (g.m >= 1 and is_connected(g)):
            return g
