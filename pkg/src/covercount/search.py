"""Fixpoint search over (alpha, beta) pairs of constructible rooted graphs.

Starting from the single vertex (0, 1) the pool is closed under gluing at
the root and gluing onto atom cores. Semi-naive rounds only combine
operands of which at least one is new from the previous round. Pairs with
alpha above the bound are dropped: every non-trivial combination has alpha
at least that of each operand, so they can never lead back below it.
"""

from __future__ import annotations

import logging
import multiprocessing
import re
import time
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Union

import numpy as np

from .algebra import build_core_table, glue_at_root, glue_on_core
from .atomsets import AtomSet
from .counting import IDENTITY, PairAB
from .graph import Graph, GraphError, RootedGraph
from .iso import automorphisms

log = logging.getLogger(__name__)


# ---------------------------------------------------------------- witnesses

@dataclass(frozen=True)
class Vertex:
    """The single-vertex rooted graph."""


@dataclass(frozen=True)
class AtomLeaf:
    atom: str
    root: int


@dataclass(frozen=True)
class Glue1:
    parts: tuple


@dataclass(frozen=True)
class Glue2:
    atom: str
    root: int
    slots: tuple  # ((core vertex, Witness), ...)


Witness = Union[Vertex, AtomLeaf, Glue1, Glue2]


class WitnessError(GraphError):
    pass


def format_term(w: Witness) -> str:
    if isinstance(w, Vertex):
        return "vertex"
    if isinstance(w, AtomLeaf):
        return f"atom({w.atom},{w.root})"
    if isinstance(w, Glue1):
        return "glue1(" + ",".join(format_term(p) for p in w.parts) + ")"
    if isinstance(w, Glue2):
        slots = ",".join(f"{i}={format_term(t)}" for i, t in w.slots)
        return f"glue2({w.atom},{w.root};{slots})"
    raise WitnessError(f"not a witness: {w!r}")


_TOKEN = re.compile(r"\s*([A-Za-z0-9_.\-+]+|[(),;=])")


def parse_term(text: str) -> Witness:
    toks = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise WitnessError(f"unexpected character at {pos} in {text!r}")
        toks.append(m.group(1))
        pos = m.end()
    toks.append(None)
    i = 0

    def take(expect=None):
        nonlocal i
        t = toks[i]
        if expect is not None and t != expect:
            raise WitnessError(f"expected {expect!r}, got {t!r}")
        if t is None:
            raise WitnessError("unexpected end of term")
        i += 1
        return t

    def number():
        t = take()
        if not t.isdigit():
            raise WitnessError(f"expected vertex index, got {t!r}")
        return int(t)

    def term():
        head = take()
        if head == "vertex":
            return Vertex()
        take("(")
        if head == "atom":
            aid = take()
            take(",")
            r = number()
            take(")")
            return AtomLeaf(aid, r)
        if head == "glue1":
            parts = [term()]
            while toks[i] == ",":
                take(",")
                parts.append(term())
            take(")")
            return Glue1(tuple(parts))
        if head == "glue2":
            aid = take()
            take(",")
            r = number()
            take(";")
            slots = []
            if toks[i] != ")":
                while True:
                    v = number()
                    take("=")
                    slots.append((v, term()))
                    if toks[i] != ",":
                        break
                    take(",")
            take(")")
            return Glue2(aid, r, tuple(slots))
        raise WitnessError(f"unknown term head {head!r}")

    w = term()
    if toks[i] is not None:
        raise WitnessError(f"trailing input after term: {toks[i]!r}")
    return w


def realize_witness(w: Witness, atoms: Mapping[str, Graph]) -> RootedGraph:
    """Build the concrete rooted graph described by ``w``."""
    edges: list[tuple[int, int]] = []
    counter = [0]

    def fresh():
        counter[0] += 1
        return counter[0] - 1

    def atom(aid):
        if aid not in atoms:
            raise WitnessError(f"unknown atom {aid!r}")
        return atoms[aid]

    def build(t, root_label):
        # lay out t with its root at root_label, allocating other vertices
        if isinstance(t, Vertex):
            return
        if isinstance(t, AtomLeaf):
            t = Glue2(t.atom, t.root, ())
        if isinstance(t, Glue1):
            if not t.parts:
                raise WitnessError("glue1 needs at least one part")
            for p in t.parts:
                build(p, root_label)
            return
        if not isinstance(t, Glue2):
            raise WitnessError(f"not a witness: {t!r}")
        g = atom(t.atom)
        if not (0 <= t.root < g.n):
            raise WitnessError(f"root {t.root} out of range for atom {t.atom}")
        labels = [root_label if v == t.root else fresh() for v in range(g.n)]
        edges.extend((labels[u], labels[v]) for (u, v) in g.edges)
        seen = set()
        for v, sub in t.slots:
            if v == t.root or not (0 <= v < g.n) or v in seen:
                raise WitnessError(f"bad slot {v} on atom {t.atom} rooted at {t.root}")
            seen.add(v)
            build(sub, labels[v])

    root = fresh()
    build(w, root)
    norm = sorted({(min(u, v), max(u, v)) for (u, v) in edges})
    if len(norm) != len(edges):
        raise WitnessError("realization produced a repeated edge")
    return RootedGraph(Graph(counter[0], tuple(norm)), root)


def witness_pair(w: Witness, atoms: Mapping[str, Graph]) -> PairAB:
    """Pair of ``w`` computed through the gluing rules alone."""
    if isinstance(w, Vertex):
        return IDENTITY
    if isinstance(w, AtomLeaf):
        w = Glue2(w.atom, w.root, ())
    if isinstance(w, Glue1):
        if not w.parts:
            raise WitnessError("glue1 needs at least one part")
        return glue_at_root([witness_pair(p, atoms) for p in w.parts])
    if isinstance(w, Glue2):
        if w.atom not in atoms:
            raise WitnessError(f"unknown atom {w.atom!r}")
        g = atoms[w.atom]
        if not (0 <= w.root < g.n):
            raise WitnessError(f"root {w.root} out of range for atom {w.atom}")
        table = build_core_table(g, w.root)
        attach = {v: IDENTITY for v in table.slots}
        for v, sub in w.slots:
            if v not in attach:
                raise WitnessError(f"bad slot {v} on atom {w.atom} rooted at {w.root}")
            attach[v] = witness_pair(sub, atoms)
        return glue_on_core(table, attach)
    raise WitnessError(f"not a witness: {w!r}")


# --------------------------------------------------------------------- pool

@dataclass
class Pool:
    atoms: AtomSet
    alpha_bound: int
    beta_bound: int
    pairs: list[PairAB] = field(default_factory=list)
    provenance: list[tuple] = field(default_factory=list)
    index: dict[PairAB, int] = field(default_factory=dict)
    round_sizes: list[int] = field(default_factory=list)
    elapsed: float = 0.0

    def add(self, pair: PairAB, prov: tuple) -> bool:
        if pair in self.index:
            return False
        self.index[pair] = len(self.pairs)
        self.pairs.append(pair)
        self.provenance.append(prov)
        return True

    def __contains__(self, pair):
        return tuple(pair) in self.index

    def __len__(self):
        return len(self.pairs)

    def pair_set(self) -> set[PairAB]:
        return set(self.pairs)

    def witness(self, pair) -> Witness:
        return self._witness(self.index[PairAB(*pair)], {})

    def _witness(self, i, memo):
        if i in memo:
            return memo[i]
        prov = self.provenance[i]
        kind = prov[0]
        if kind == "vertex":
            w = Vertex()
        elif kind == "g1":
            w = Glue1((self._witness(prov[1], memo), self._witness(prov[2], memo)))
        else:
            _, aid, root, slots = prov
            if not slots:
                w = AtomLeaf(aid, root)
            else:
                w = Glue2(aid, root, tuple((v, self._witness(j, memo)) for v, j in slots))
        memo[i] = w
        return w

    def witness_for_alpha(self, x: int) -> Witness | None:
        for i, p in enumerate(self.pairs):
            if p.alpha == x:
                return self._witness(i, {})
        return None


def _as_atomset(atoms) -> AtomSet:
    if isinstance(atoms, AtomSet):
        return atoms
    atoms = list(atoms)
    if atoms and isinstance(atoms[0], tuple):
        return AtomSet("custom", tuple(atoms), 0)
    return AtomSet("custom", tuple((f"a{i}", g) for i, g in enumerate(atoms)), 0)


@dataclass(frozen=True)
class _Core:
    atom: str
    root: int
    slots: tuple[int, ...]       # core labels, slot k sits at bit k+1
    weights: tuple[int, ...]     # table reindexed: bit 0 = root


def _cores(atoms: AtomSet, symmetry: bool) -> list[_Core]:
    out = []
    for aid, g in atoms.atoms:
        if symmetry:
            auts = automorphisms(g)
            roots = sorted({min(a[v] for a in auts) for v in range(g.n)})
        else:
            roots = list(range(g.n))
        for r in roots:
            table = build_core_table(g, r).alpha_by_subset
            slots = tuple(v for v in range(g.n) if v != r)
            order = (r,) + slots
            w = []
            for mask in range(1 << g.n):
                orig = 0
                for bit, v in enumerate(order):
                    if mask >> bit & 1:
                        orig |= 1 << v
                w.append(table[orig])
            out.append(_Core(aid, r, slots, tuple(w)))
    return out


class _View:
    """Pool subset sorted by s, as parallel arrays."""

    def __init__(self, pairs: list[PairAB], ids: list[int]):
        order = sorted(range(len(ids)), key=lambda k: (pairs[ids[k]].s, ids[k]))
        self.ids = np.array([ids[k] for k in order], dtype=np.int64)
        self.A = np.array([pairs[i].alpha for i in self.ids], dtype=np.int64)
        self.B = np.array([pairs[i].beta for i in self.ids], dtype=np.int64)
        self.S = self.A + self.B

    def __len__(self):
        return len(self.ids)

    def upto(self, max_s: int) -> int:
        return int(np.searchsorted(self.S, max_s, side="right"))


class _Round:
    """State of one semi-naive round; work items read it, never mutate it."""

    def __init__(self, pool: Pool, delta_ids: list[int], cores: list[_Core]):
        self.L = pool.alpha_bound
        self.B = pool.beta_bound
        delta = set(delta_ids)
        all_ids = list(range(len(pool.pairs)))
        self.all = _View(pool.pairs, all_ids)
        self.old = _View(pool.pairs, [i for i in all_ids if i not in delta])
        self.delta = _View(pool.pairs, sorted(delta))
        self.cores = cores
        self.known = np.zeros((self.L + 1, self.B + 1), dtype=bool)
        for p in pool.pairs:
            self.known[p.alpha, p.beta] = True

    def _fresh(self, alpha: np.ndarray, beta: np.ndarray) -> np.ndarray:
        ok = (alpha <= self.L) & (beta <= self.B)
        idx = np.flatnonzero(ok)
        if len(idx):
            idx = idx[~self.known[alpha[idx], beta[idx]]]
        return idx

    def glue1_item(self, lo: int, hi: int) -> list[tuple[PairAB, tuple]]:
        found: dict[PairAB, tuple] = {}
        allv = self.all
        for k in range(lo, hi):
            i = int(self.delta.ids[k])
            a, b = int(self.delta.A[k]), int(self.delta.B[k])
            if a == 0:
                continue        # identity
            n = allv.upto(self.L // a)
            alpha = a * allv.S[:n] + b * allv.A[:n]
            beta = b * allv.B[:n]
            for j in self._fresh(alpha, beta):
                p = PairAB(int(alpha[j]), int(beta[j]))
                if p not in found:
                    found[p] = ("g1", i, int(allv.ids[j]))
        return list(found.items())

    def glue2_item(self, c: int) -> list[tuple[PairAB, tuple]]:
        core = self.cores[c]
        found: dict[PairAB, tuple] = {}
        L = self.L
        k = len(core.slots)
        W0 = np.array(core.weights, dtype=np.int64)
        if k == 0:
            return []
        path: list[tuple[int, int]] = []

        def record(alpha, beta, view, hits):
            for j in hits:
                p = PairAB(int(alpha[j]), int(beta[j]))
                if p not in found:
                    sid = int(view.ids[j])
                    slots = [(v, q) for v, q in path if q != 0]
                    if sid != 0:
                        slots.append((core.slots[0], sid))
                    found[p] = ("g2", core.atom, core.root, tuple(sorted(slots)))

        def dfs(W, j, seen_new):
            # W indexes subsets of {root=bit0, slots 0..j-1 at bits 1..j}
            top = int(W[-1])
            if j == 1:
                view = self.all if seen_new else self.delta
                n = view.upto(L // top)
                if n == 0:
                    return
                alpha = W[3] * view.S[:n] + W[1] * view.A[:n]
                beta = W[2] * view.S[:n] + W[0] * view.A[:n]
                record(alpha, beta, view, self._fresh(alpha, beta))
                return
            hb = len(W) // 2
            hi, lo = W[hb:], W[:hb]
            slot = core.slots[j - 1]
            choices = [(self.all, True)] if seen_new else [(self.old, False), (self.delta, True)]
            for view, flag in choices:
                n = view.upto(L // top)
                S, A, ids = view.S, view.A, view.ids
                for t in range(n):
                    a = int(A[t])
                    W2 = hi * int(S[t]) + lo * a
                    if W2[-1] > L:
                        continue
                    path.append((slot, int(ids[t])))
                    dfs(W2, j - 1, flag)
                    path.pop()

        dfs(W0, k, False)
        return list(found.items())

    def items(self):
        out = []
        step = 256
        for lo in range(0, len(self.delta), step):
            out.append(("g1", lo, min(lo + step, len(self.delta))))
        for c in range(len(self.cores)):
            out.append(("g2", c))
        return out

    def run_item(self, item):
        if item[0] == "g1":
            return self.glue1_item(item[1], item[2])
        return self.glue2_item(item[1])


_ACTIVE: _Round | None = None


def _worker(item):
    return _ACTIVE.run_item(item)


def run_closure(atoms, alpha_bound: int, beta_bound: int | None = None, *,
                jobs: int = 1, symmetry: bool = True, max_rounds: int | None = None,
                progress=None) -> Pool:
    """Least set of pairs containing (0, 1) and closed under both gluing
    rules, restricted to ``alpha <= alpha_bound`` and ``beta <= beta_bound``
    (default: the alpha bound)."""
    global _ACTIVE
    atoms = _as_atomset(atoms)
    if alpha_bound < 1:
        raise ValueError("alpha bound must be at least 1")
    B = alpha_bound if beta_bound is None else beta_bound
    started = time.perf_counter()
    pool = Pool(atoms, alpha_bound, B)
    pool.add(IDENTITY, ("vertex",))
    cores = _cores(atoms, symmetry)
    delta = [0]
    rounds = 0
    while delta and (max_rounds is None or rounds < max_rounds):
        rnd = _Round(pool, delta, cores)
        items = rnd.items()
        if jobs > 1 and len(items) > 1:
            _ACTIVE = rnd
            with multiprocessing.get_context("fork").Pool(jobs) as mp:
                results = mp.map(_worker, items, chunksize=1)
            _ACTIVE = None
        else:
            results = [rnd.run_item(it) for it in items]
        start = len(pool)
        for res in results:
            for pair, prov in res:
                pool.add(pair, prov)
        delta = list(range(start, len(pool)))
        pool.round_sizes.append(len(delta))
        rounds += 1
        log.info("round %d: +%d pairs (pool %d)", rounds, len(delta), len(pool))
        if progress:
            progress(rounds, len(delta), len(pool))
    pool.elapsed = time.perf_counter() - started
    return pool


def extra_round(pool: Pool, symmetry: bool = True) -> set[PairAB]:
    """Pairs a full (not semi-naive) round would add; empty for a closed pool."""
    cores = _cores(pool.atoms, symmetry)
    rnd = _Round(pool, list(range(len(pool))), cores)
    out = set()
    for it in rnd.items():
        out.update(p for p, _ in rnd.run_item(it))
    return out


# ------------------------------------------------------------------ reports

def achievable_alphas(pool: Pool) -> set[int]:
    return {p.alpha for p in pool.pairs if p.alpha >= 1}


def certified_impossible(pool: Pool, completeness_bound: int | None = None,
                         force: bool = False) -> set[int]:
    """Values up to the completeness bound that no pool pair reaches."""
    cert = pool.atoms.certified_bound
    T = min(cert, pool.alpha_bound) if completeness_bound is None else completeness_bound
    if T > pool.alpha_bound:
        raise ValueError(f"completeness bound {T} exceeds the search bound {pool.alpha_bound}")
    if T > cert and not force:
        raise ValueError(f"atom set {pool.atoms.name!r} is only certified up to {cert}")
    ach = achievable_alphas(pool)
    return {x for x in range(1, T + 1) if x not in ach}


def unresolved(pool: Pool, completeness_bound: int | None = None) -> set[int]:
    T = min(pool.atoms.certified_bound, pool.alpha_bound) if completeness_bound is None else completeness_bound
    ach = achievable_alphas(pool)
    return {x for x in range(T + 1, pool.alpha_bound + 1) if x not in ach}


def statuses(pool: Pool, completeness_bound: int | None = None, force: bool = False):
    """``(value, status, witness or None)`` for every value 1..L."""
    imp = certified_impossible(pool, completeness_bound, force)
    first = {}
    for i, p in enumerate(pool.pairs):
        if p.alpha >= 1 and p.alpha not in first:
            first[p.alpha] = i
    memo: dict = {}
    for x in range(1, pool.alpha_bound + 1):
        if x in first:
            yield x, "achievable", pool._witness(first[x], memo)
        elif x in imp:
            yield x, "certified_impossible", None
        else:
            yield x, "unresolved", None
