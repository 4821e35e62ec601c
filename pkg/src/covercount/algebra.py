"""Composition of rooted graphs through their (alpha, beta) pairs.

Way 1 glues rooted graphs at a common root. Way 2 glues rooted graphs
onto the non-root vertices of a core graph; it needs the cover count of
every induced subgraph of the core, which ``CoreTable`` stores by vertex
bitmask.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import prod
from typing import Mapping, Sequence

from .counting import IDENTITY, PairAB, count_covers
from .graph import Graph, GraphError, GuardExceeded, induced_subgraph, is_connected
from .guards import guard


def glue_at_root(pairs: Sequence[PairAB]) -> PairAB:
    if not pairs:
        raise ValueError("glue_at_root needs at least one pair")
    b = prod(p.beta for p in pairs)
    return PairAB(prod(p.alpha + p.beta for p in pairs) - b, b)


@dataclass(frozen=True)
class CoreTable:
    core: Graph
    root: int
    alpha_by_subset: tuple[int, ...]

    @property
    def slots(self) -> list[int]:
        return [v for v in range(self.core.n) if v != self.root]

    @property
    def full(self) -> int:
        return self.alpha_by_subset[-1]


def build_core_table(core: Graph, root: int) -> CoreTable:
    limit = guard("MAX_CORE_VERTICES")
    if core.n > limit:
        raise GuardExceeded(f"core with {core.n} vertices exceeds guard {limit}")
    if not (0 <= root < core.n):
        raise GraphError(f"root {root} out of range")
    if not is_connected(core):
        raise GraphError("core must be connected")
    return _table(core, root)


@lru_cache(maxsize=None)
def _table(core: Graph, root: int) -> CoreTable:
    vals = []
    for mask in range(1 << core.n):
        sub, _ = induced_subgraph(core, [v for v in range(core.n) if mask >> v & 1])
        vals.append(count_covers(sub))
    return CoreTable(core, root, tuple(vals))


def glue_on_core(table: CoreTable, attach: Mapping[int, PairAB]) -> PairAB:
    """Pair of the graph obtained by gluing rooted graph ``attach[i]`` (by its
    root) onto core vertex ``i``, for every non-root vertex ``i``.

    Summed over vertex sets ``S`` of the core: ``table[S]`` times, per slot,
    ``s_i`` if ``i`` is in ``S`` else ``alpha_i``. Sets containing the core
    root give alpha; the rest give beta.
    """
    slots = table.slots
    if table.root in attach:
        raise GraphError("nothing may be attached to the core root")
    missing = [i for i in slots if i not in attach]
    extra = [i for i in attach if i not in slots]
    if missing or extra:
        raise GraphError(f"attachment slots mismatch: missing {missing}, unknown {extra}")
    rbit = 1 << table.root
    alpha = beta = 0
    for mask, t in enumerate(table.alpha_by_subset):
        if not t:
            continue
        term = t
        for i in slots:
            term *= attach[i].f(bool(mask >> i & 1))
            if not term:
                break
        if mask & rbit:
            alpha += term
        else:
            beta += term
    return PairAB(alpha, beta)


def core_profile(table: CoreTable) -> PairAB:
    return glue_on_core(table, {i: IDENTITY for i in table.slots})
