"""Simple undirected graphs on dense integer labels, plus the structural
predicates the counting and search layers rely on."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable


class GraphError(ValueError):
    """Raised for malformed graphs or invalid graph operations."""


class GuardExceeded(RuntimeError):
    """Raised when an exponential routine is asked to run past its size guard."""


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Finite simple graph with vertices ``0..n-1``.

    ``edges`` is stored as a sorted tuple of ``(u, v)`` pairs with ``u < v``,
    so two graphs with the same labeled edge set compare equal.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    _adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        adj = [0] * self.n
        prev = None
        for (u, v) in self.edges:
            if not (0 <= u < v < self.n):
                raise GraphError(f"bad edge {(u, v)} for n={self.n}")
            if (u, v) == prev:
                raise GraphError(f"duplicate edge {(u, v)}")
            prev = (u, v)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "_adj", tuple(adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbour bitmask per vertex."""
        return self._adj

    def neighbors(self, v: int) -> list[int]:
        a = self._adj[v]
        return [u for u in range(self.n) if a >> u & 1]

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self._adj[u] >> v & 1)

    def __str__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class RootedGraph:
    """A connected graph with one selected vertex, the root."""

    graph: Graph
    root: int

    def __post_init__(self):
        if not (0 <= self.root < self.graph.n):
            raise GraphError(f"root {self.root} out of range for n={self.graph.n}")
        if not is_connected(self.graph):
            raise GraphError("rooted graph must be connected")


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate and build a graph. Self-loops, repeated edges (in either
    orientation) and out-of-range endpoints are rejected."""
    seen = set()
    for (u, v) in edges:
        u, v = int(u), int(v)
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {(u, v)} has endpoint outside 0..{n - 1}")
        e = _norm(u, v)
        if e in seen:
            raise GraphError(f"duplicate edge {e}")
        seen.add(e)
    return Graph(n, tuple(sorted(seen)))


def empty_graph() -> Graph:
    return Graph(0, ())


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise GraphError("cycles need at least 3 vertices")
    return make_graph(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(n_edges: int) -> Graph:
    return make_graph(n_edges + 1, [(i, i + 1) for i in range(n_edges)])


def complete_bipartite(a: int, b: int) -> Graph:
    return make_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    off = 0
    for g in graphs:
        edges.extend((u + off, v + off) for (u, v) in g.edges)
        off += g.n
    return Graph(off, tuple(sorted(edges)))


def components(g: Graph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, in order of
    smallest vertex."""
    adj = g.adjacency
    left = (1 << g.n) - 1
    out = []
    while left:
        low = left & -left
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                nxt |= adj[b.bit_length() - 1]
                f ^= b
            frontier = nxt & ~comp
            comp |= frontier
        left &= ~comp
        out.append([v for v in range(g.n) if comp >> v & 1])
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def two_coloring(g: Graph) -> list[int] | None:
    """Proper 2-colouring as a list of 0/1 labels, or None for odd cycles."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def cut_vertices(g: Graph) -> set[int]:
    """Articulation points (Hopcroft-Tarjan low-link, iterative)."""
    disc = [-1] * g.n
    low = [0] * g.n
    cuts = set()
    t = 0
    nbrs = [g.neighbors(v) for v in range(g.n)]
    for s in range(g.n):
        if disc[s] >= 0:
            continue
        disc[s] = low[s] = t
        t += 1
        root_children = 0
        stack = [(s, -1, iter(nbrs[s]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, u, iter(nbrs[w])))
                    advanced = True
                    break
                if w != parent:
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[u])
                if parent == s:
                    root_children += 1
                elif low[u] >= disc[parent]:
                    cuts.add(parent)
        if root_children >= 2:
            cuts.add(s)
    return cuts


def is_atomic(g: Graph) -> bool:
    """True when ``g`` has no decomposition into edge-disjoint connected
    pieces glued in a tree pattern. For a connected graph that happens
    exactly when it is K2 or has no cut vertex."""
    if g.m == 0:
        raise GraphError("atomicity is defined for graphs with at least one edge")
    if not is_connected(g):
        raise GraphError("atomicity is defined for connected graphs")
    if g.n == 2:
        return True
    return not cut_vertices(g)


def induced_subgraph(g: Graph, subset: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph on ``subset`` keeping every edge with both ends inside.

    Returns the relabeled graph and the old label of each new vertex.
    """
    verts = sorted(set(subset))
    for v in verts:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex {v} not in graph")
    idx = {v: i for i, v in enumerate(verts)}
    edges = [(idx[u], idx[v]) for (u, v) in g.edges if u in idx and v in idx]
    return Graph(len(verts), tuple(sorted(edges))), verts


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    e = _norm(*e)
    if e not in g.edges:
        raise GraphError(f"edge {e} not in graph")
    return Graph(g.n, tuple(x for x in g.edges if x != e))


def delete_vertices(g: Graph, vset: Iterable[int]) -> tuple[Graph, list[int]]:
    """Remove vertices with their incident edges; survivors are relabeled
    densely and the old labels are returned alongside."""
    drop = set(vset)
    for v in drop:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex {v} not in graph")
    return induced_subgraph(g, [v for v in range(g.n) if v not in drop])


def cache_key(g: Graph) -> tuple:
    """Exact labeled key: equal labeled graphs share a key."""
    return (g.n, g.edges)


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    return make_graph(g.n, [(perm[u], perm[v]) for (u, v) in g.edges])
