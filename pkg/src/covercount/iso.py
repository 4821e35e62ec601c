"""Brute-force isomorphism and automorphism search for small graphs."""

from __future__ import annotations

from .graph import Graph, GuardExceeded
from .guards import guard


def _signature(g: Graph) -> list[tuple[int, tuple[int, ...]]]:
    deg = g.degrees()
    return [(deg[v], tuple(sorted(deg[w] for w in g.neighbors(v)))) for v in range(g.n)]


def _check_size(*graphs: Graph):
    limit = guard("MAX_ISO_VERTICES")
    for g in graphs:
        if g.n > limit:
            raise GuardExceeded(f"isomorphism search on {g.n} vertices exceeds guard {limit}")


def _mappings(g1: Graph, g2: Graph):
    """Yield every edge-preserving bijection V(g1) -> V(g2) as a list."""
    if g1.n != g2.n or g1.m != g2.m:
        return
    sig1, sig2 = _signature(g1), _signature(g2)
    if sorted(sig1) != sorted(sig2):
        return
    n = g1.n
    adj1, adj2 = g1.adjacency, g2.adjacency
    order = sorted(range(n), key=lambda v: (-sig1[v][0], v))
    mapping = [-1] * n
    used = [False] * n

    def extend(k):
        if k == n:
            yield list(mapping)
            return
        v = order[k]
        for w in range(n):
            if used[w] or sig2[w] != sig1[v]:
                continue
            if any(bool(adj1[v] >> x & 1) != bool(adj2[w] >> mapping[x] & 1) for x in order[:k]):
                continue
            mapping[v] = w
            used[w] = True
            yield from extend(k + 1)
            used[w] = False
            mapping[v] = -1

    yield from extend(0)


def isomorphic(g1: Graph, g2: Graph) -> bool:
    _check_size(g1, g2)
    return next(_mappings(g1, g2), None) is not None


def automorphisms(g: Graph) -> list[list[int]]:
    _check_size(g)
    return list(_mappings(g, g))


def vertex_orbits(g: Graph) -> list[list[int]]:
    """Orbits of the automorphism group, each sorted, ordered by minimum."""
    auts = automorphisms(g)
    seen = set()
    out = []
    for v in range(g.n):
        if v in seen:
            continue
        orb = sorted({a[v] for a in auts})
        seen.update(orb)
        out.append(orb)
    return out


def invariant(g: Graph) -> tuple:
    """Cheap isomorphism invariant for bucketing."""
    return (g.n, g.m, tuple(sorted(_signature(g))))
