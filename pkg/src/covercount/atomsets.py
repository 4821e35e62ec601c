"""Named atom sets fed to the closure search."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, complete_bipartite, cycle_graph, is_connected, make_graph


@dataclass(frozen=True)
class AtomSet:
    """Atoms with string ids. ``certified_bound`` is the largest cover count
    up to which the set is known to contain every atomic graph of the class
    searched; 0 means no completeness claim."""

    name: str
    atoms: tuple[tuple[str, Graph], ...]
    certified_bound: int = 0

    def __post_init__(self):
        ids = [a for a, _ in self.atoms]
        if len(set(ids)) != len(ids):
            raise GraphError(f"duplicate atom ids in {ids}")
        for aid, g in self.atoms:
            if g.m == 0 or not is_connected(g):
                raise GraphError(f"atom {aid} must be connected with at least one edge")
            if not aid or any(c in aid for c in "(),;= \t"):
                raise GraphError(f"atom id {aid!r} is not a plain token")

    def graph(self, aid: str) -> Graph:
        for a, g in self.atoms:
            if a == aid:
                return g
        raise KeyError(aid)

    def as_dict(self) -> dict[str, Graph]:
        return dict(self.atoms)


def c6_chord() -> Graph:
    """6-cycle plus the chord joining two opposite vertices."""
    return make_graph(6, [(i, (i + 1) % 6) for i in range(6)] + [(0, 3)])


def c6_apex() -> Graph:
    """6-cycle plus a new vertex adjacent to two cycle vertices at distance 2
    (the only bipartite placement of a degree-2 vertex)."""
    return make_graph(7, [(i, (i + 1) % 6) for i in range(6)] + [(6, 0), (6, 2)])


def seven_atoms() -> AtomSet:
    """Every atomic bipartite graph with at most 67 edge covers."""
    return AtomSet(
        "bipartite7",
        (
            ("K2", make_graph(2, [(0, 1)])),
            ("C4", cycle_graph(4)),
            ("C6", cycle_graph(6)),
            ("K23", complete_bipartite(2, 3)),
            ("C6chord", c6_chord()),
            ("C8", cycle_graph(8)),
            ("C6apex", c6_apex()),
        ),
        certified_bound=67,
    )


def tree_atoms(certified_bound: int | None = None) -> AtomSet:
    """K2 alone generates every tree, so every count is certified."""
    return AtomSet("trees", (("K2", make_graph(2, [(0, 1)])),),
                   certified_bound=certified_bound if certified_bound is not None else 10**18)
