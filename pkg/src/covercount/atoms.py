"""Enumeration of atomic bipartite graphs below a cover-count threshold.

Two generators that share nothing but the final filter:

* ``augment`` grows even cycles by ears (a new edge, or a path through new
  vertices, between two existing vertices of the right colours). Every
  2-connected graph has an ear decomposition from any of its cycles and
  each ear at least doubles the cover count, so discarding graphs above
  the threshold loses nothing.
* ``exhaustive`` sweeps every edge set between the two colour classes for
  all part sizes, filtering with vectorised degree and inclusion-exclusion
  cover counts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .counting import count_covers
from .graph import (Graph, GuardExceeded, cut_vertices, cycle_graph, is_bipartite,
                    is_connected, make_graph, two_coloring)
from .guards import guard
from .iso import _signature, invariant, isomorphic

__all__ = ["AtomCatalog", "enumerate_atoms", "isomorphic", "canonical_form"]


@dataclass(frozen=True)
class AtomCatalog:
    threshold: int
    max_vertices: int
    atoms: tuple[tuple[Graph, int], ...]   # (graph, alpha), canonical labels

    def alphas(self) -> list[int]:
        return [a for _, a in self.atoms]

    def __len__(self):
        return len(self.atoms)


def canonical_form(g: Graph) -> Graph:
    """Smallest sorted edge list over relabelings that order vertices by an
    isomorphism-invariant signature (ties broken by brute force)."""
    sig = _signature(g)
    classes = sorted(set(sig), reverse=True)
    groups = [[v for v in range(g.n) if sig[v] == c] for c in classes]
    best = None
    for combo in itertools.product(*(itertools.permutations(grp) for grp in groups)):
        perm = [0] * g.n
        label = 0
        for grp in combo:
            for v in grp:
                perm[v] = label
                label += 1
        key = tuple(sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in g.edges))
        if best is None or key < best:
            best = key
    return Graph(g.n, best or ())


def _is_atom(g: Graph) -> bool:
    if g.m == 0 or not is_connected(g):
        return False
    return g.n == 2 or not cut_vertices(g)


class _Catalog:
    """Isomorphism-deduplicated collection bucketed by invariant."""

    def __init__(self):
        self.buckets: dict[tuple, list[Graph]] = {}

    def add(self, g: Graph) -> bool:
        bucket = self.buckets.setdefault(invariant(g), [])
        if any(isomorphic(g, h) for h in bucket):
            return False
        bucket.append(g)
        return True

    def graphs(self):
        for b in self.buckets.values():
            yield from b


def _finish(found, max_alpha, max_vertices) -> AtomCatalog:
    entries = []
    for g in found:
        c = canonical_form(g)
        entries.append((c, count_covers(c)))
    entries.sort(key=lambda e: (e[0].n, e[0].m, e[0].edges))
    return AtomCatalog(max_alpha, max_vertices, tuple(entries))


def _augment(max_alpha: int, max_vertices: int) -> list[Graph]:
    cat = _Catalog()
    out = []
    if max_alpha >= 1 and max_vertices >= 2:
        out.append(make_graph(2, [(0, 1)]))
    frontier = []
    for k in range(4, max_vertices + 1, 2):
        c = cycle_graph(k)
        if count_covers(c) <= max_alpha and cat.add(c):
            frontier.append(c)
    while frontier:
        nxt = []
        for g in frontier:
            out.append(g)
            color = two_coloring(g)
            for u in range(g.n):
                for v in range(u + 1, g.n):
                    odd = color[u] != color[v]
                    # ear of length 1 (chord)
                    if odd and not g.has_edge(u, v):
                        h = make_graph(g.n, list(g.edges) + [(u, v)])
                        if count_covers(h) <= max_alpha and cat.add(h):
                            nxt.append(h)
                    for length in range(2, max_vertices - g.n + 2):
                        if (length % 2 == 1) != odd:
                            continue
                        new = list(range(g.n, g.n + length - 1))
                        chain = [u] + new + [v]
                        h = make_graph(g.n + len(new), list(g.edges) + list(zip(chain, chain[1:])))
                        if count_covers(h) <= max_alpha and cat.add(h):
                            nxt.append(h)
        frontier = nxt
    return out


def _popcount(x: np.ndarray) -> np.ndarray:
    return np.bitwise_count(x).astype(np.int64)


def _exhaustive(max_alpha: int, max_vertices: int) -> list[Graph]:
    cat = _Catalog()
    out = []
    if max_alpha >= 1 and max_vertices >= 2:
        out.append(make_graph(2, [(0, 1)]))
    for n in range(3, max_vertices + 1):
        # a cover count of at least 2^(m - n + 1) caps the edge count
        max_m = n - 1 + max(0, max_alpha).bit_length()
        for a in range(2, n // 2 + 1):
            b = n - a
            pairs = [(i, a + j) for i in range(a) for j in range(b)]
            m_all = len(pairs)
            masks = np.arange(1 << m_all, dtype=np.uint64)
            pc = _popcount(masks)
            masks = masks[(pc >= n) & (pc <= max_m)]   # 2-connected => m >= n
            for v in range(n):
                inc = sum(1 << k for k, e in enumerate(pairs) if v in e)
                masks = masks[_popcount(masks & np.uint64(inc)) >= 2]
                if not len(masks):
                    break
            if not len(masks):
                continue
            # inclusion-exclusion: sum over kept vertex sets W of
            # (-1)^(n-|W|) 2^(edges inside W)
            alpha = np.zeros(len(masks), dtype=np.int64)
            for W in range(1 << n):
                inside = sum(1 << k for k, (x, y) in enumerate(pairs) if W >> x & 1 and W >> y & 1)
                sign = -1 if (n - bin(W).count("1")) % 2 else 1
                alpha += sign * (np.int64(1) << _popcount(masks & np.uint64(inside)))
            for mask in masks[alpha <= max_alpha]:
                mask = int(mask)
                g = make_graph(n, [e for k, e in enumerate(pairs) if mask >> k & 1])
                if _is_atom(g) and cat.add(g):
                    out.append(g)
    return out


def enumerate_atoms(max_alpha: int, max_vertices: int = 8, method: str = "augment") -> AtomCatalog:
    """All connected bipartite atomic graphs (K2 or 2-connected) on at most
    ``max_vertices`` vertices with at most ``max_alpha`` edge covers, one per
    isomorphism class."""
    limit = guard("MAX_ATOM_VERTICES")
    if max_vertices > limit:
        raise GuardExceeded(f"atom enumeration on {max_vertices} vertices exceeds guard {limit}")
    if method == "augment":
        found = _augment(max_alpha, max_vertices)
    elif method == "exhaustive":
        found = _exhaustive(max_alpha, max_vertices)
    else:
        raise ValueError(f"unknown method {method!r}")
    for g in found:
        assert is_bipartite(g) and _is_atom(g)
    return _finish(found, max_alpha, max_vertices)
