"""Verification suites shared by ``covercount verify`` and the tests.

Each suite returns a ``SuiteResult``; ``quick`` shrinks corpus sizes so
the whole set runs in seconds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .atoms import enumerate_atoms, isomorphic
from .atomsets import c6_apex, c6_chord, seven_atoms, tree_atoms
from .corpus import connected_graphs, random_graph
from .counting import (CoverCounter, count_covers, count_covers_bruteforce,
                       count_precovers_bruteforce, rooted_profile)
from .graph import (Graph, RootedGraph, complete_bipartite, cycle_graph, is_bipartite,
                    is_connected, make_graph)
from .search import (achievable_alphas, certified_impossible, extra_round, realize_witness,
                     run_closure, unresolved)

SEVEN_EXCEPTIONS = {19, 37, 41, 59, 67}
UNRESOLVED_1000 = {82, 97, 149, 197, 223, 257, 291, 379}
TREE_EXCEPTIONS_256 = {19, 37, 41, 57, 59, 67, 79, 82, 97, 111, 131, 149, 177, 179,
                       197, 201, 205, 223, 237, 251}


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, cond, detail):
        self.checked += 1
        if not cond:
            self.failures.append(detail)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        head = f"{status} {self.name}: {self.checked} checks, {len(self.failures)} failures"
        if self.failures:
            head += f" (first: {self.failures[0]})"
        return head


def suite_cycles(counter=count_covers, **_) -> SuiteResult:
    r = SuiteResult("cycles")
    for k, want in [(4, 7), (6, 18), (8, 47), (10, 123)]:
        g = cycle_graph(k)
        r.check(counter(g) == want, f"C{k}: {counter(g)} != {want}")
    r.check(count_covers_bruteforce(cycle_graph(10)) == 123, "C10 brute force != 123")
    return r


def suite_named(counter=count_covers, **_) -> SuiteResult:
    r = SuiteResult("named")
    for name, g, want in [("K23", complete_bipartite(2, 3), 25), ("C6apex", c6_apex(), 66),
                          ("C6chord", c6_chord(), count_covers_bruteforce(c6_chord()))]:
        r.check(counter(g) == want, f"{name}: {counter(g)} != {want}")
    r.check(36 <= count_covers_bruteforce(c6_chord()) <= 67, "C6chord outside 36..67")
    return r


def _corpus(quick: bool, seed: int):
    max_exh, n_rand = (6, 300) if quick else (9, 10_000)
    layers = connected_graphs(max_exh)
    for m in sorted(layers):
        yield from layers[m]
    rng = random.Random(seed)
    for _ in range(n_rand):
        yield random_graph(rng, max_edges=12)


def suite_oracle(counter=count_covers, quick=False, seed=0, **_) -> SuiteResult:
    r = SuiteResult("oracle")
    for g in _corpus(quick, seed):
        a, b = counter(g), count_covers_bruteforce(g)
        r.check(a == b, f"{g}: recursion {a} vs brute force {b}")
    return r


def suite_precover(counter=count_covers, quick=False, seed=1, **_) -> SuiteResult:
    r = SuiteResult("precover")
    for g in _corpus(quick, seed):
        if g.n == 0 or not is_connected(g):
            continue
        for root in range(g.n):
            rg = RootedGraph(g, root)
            p = rooted_profile(rg, counter)
            bf = count_precovers_bruteforce(rg)
            r.check(p.s == bf, f"{g} root {root}: s={p.s} vs brute force {bf}")
    return r


def _add_path(g: Graph, a: int, b: int, inner: int) -> Graph:
    new = list(range(g.n, g.n + inner))
    chain = [a] + new + [b]
    return make_graph(g.n + inner, list(g.edges) + list(zip(chain, chain[1:])))


def suite_lemmas(counter=count_covers, quick=False, seed=2, **_) -> SuiteResult:
    r = SuiteResult("lemmas")
    rng = random.Random(seed)
    trials = 300 if quick else 10_000
    done = {"edge": 0, "vertex": 0, "path": 0}
    while min(done.values()) < trials:
        g = random_graph(rng, max_edges=10, max_vertices=8, connected=True)
        base = counter(g)
        a, b = rng.sample(range(g.n), 2)
        if done["edge"] < trials and not g.has_edge(a, b):
            h = make_graph(g.n, list(g.edges) + [(a, b)])
            r.check(counter(h) >= 2 * base, f"edge {a}-{b} on {g}")
            done["edge"] += 1
        if done["vertex"] < trials:
            r.check(counter(_add_path(g, a, b, 1)) >= 3 * base, f"vertex path {a}-{b} on {g}")
            done["vertex"] += 1
        if done["path"] < trials:
            k = rng.randint(2, 4)
            r.check(counter(_add_path(g, a, b, k)) >= 5 * base, f"{k}-vertex path {a}-{b} on {g}")
            done["path"] += 1
    return r


def suite_atoms(quick=False, **_) -> SuiteResult:
    r = SuiteResult("atoms")
    aug = enumerate_atoms(67, 8, "augment")
    exh = enumerate_atoms(67, 8 if quick else 9, "exhaustive")
    r.check(len(aug) == 7, f"augment found {len(aug)} atoms")
    r.check([g for g, _ in aug.atoms] == [g for g, _ in exh.atoms], "generators disagree")
    x = count_covers(c6_chord())
    r.check(sorted(aug.alphas()) == sorted([1, 7, 18, 25, 47, 66, x]), f"alphas {aug.alphas()}")
    ref = [g for _, g in seven_atoms().atoms]
    r.check(all(any(isomorphic(g, h) for h in ref) for g, _ in aug.atoms),
            "catalog differs from the built-in seven atoms")
    return r


def check_pool_witnesses(pool, result: SuiteResult, sample: int = 1000, seed: int = 3,
                         exhaustive_edges: int = 14):
    atoms = pool.atoms.as_dict()
    rng = random.Random(seed)
    big = []
    memo: dict = {}
    for i, pair in enumerate(pool.pairs):
        rg = realize_witness(pool._witness(i, memo), atoms)
        if rg.graph.m <= exhaustive_edges:
            _check_realized(rg, pair, result)
        else:
            big.append((rg, pair))
    for rg, pair in rng.sample(big, min(sample, len(big))):
        _check_realized(rg, pair, result)


def _check_realized(rg, pair, result):
    g = rg.graph
    result.check(is_connected(g) and is_bipartite(g), f"{pair}: realization not connected/bipartite")
    got = rooted_profile(rg)
    result.check(tuple(got) == tuple(pair), f"{pair}: realization gives {tuple(got)}")


def check_achievable_witnesses(pool, result: SuiteResult):
    """Every achievable value gets its reported witness re-counted."""
    atoms = pool.atoms.as_dict()
    for x in sorted(achievable_alphas(pool)):
        rg = realize_witness(pool.witness_for_alpha(x), atoms)
        g = rg.graph
        result.check(is_connected(g) and is_bipartite(g), f"alpha {x}: realization not connected/bipartite")
        result.check(count_covers(g) == x, f"alpha {x}: realization has {count_covers(g)} covers")


def suite_search(quick=False, **_) -> SuiteResult:
    r = SuiteResult("search")
    p67 = run_closure(seven_atoms(), 67)
    r.check(certified_impossible(p67) == SEVEN_EXCEPTIONS, f"L=67 impossible {sorted(certified_impossible(p67))}")
    trees = run_closure(tree_atoms(), 256)
    missing = set(range(1, 257)) - achievable_alphas(trees)
    r.check(missing == TREE_EXCEPTIONS_256, f"trees missing {sorted(missing)}")
    if not quick:
        p1000 = run_closure(seven_atoms(), 1000)
        r.check(certified_impossible(p1000) == SEVEN_EXCEPTIONS, "L=1000 certified set")
        unres = unresolved(p1000)
        r.check(unres == UNRESOLVED_1000, f"L=1000 unresolved {sorted(unres)}")
    return r


def suite_witness(quick=False, **_) -> SuiteResult:
    r = SuiteResult("witness")
    for atoms, L in [(seven_atoms(), 67 if quick else 1000), (tree_atoms(), 256)]:
        pool = run_closure(atoms, L)
        check_achievable_witnesses(pool, r)
        check_pool_witnesses(pool, r, sample=100 if quick else 1000)
    return r


def suite_pruning(**_) -> SuiteResult:
    r = SuiteResult("pruning")
    small = run_closure(seven_atoms(), 67)
    large = run_closure(seven_atoms(), 200)
    restricted = {p for p in large.pairs if p.alpha <= 67 and p.beta <= 67}
    r.check(restricted == small.pair_set(), "L=200 pool restricted to 67 differs from L=67 pool")
    r.check(not extra_round(small), "extra round on L=67 pool added pairs")
    r.check(not extra_round(large), "extra round on L=200 pool added pairs")
    return r


SUITES = {
    "cycles": suite_cycles,
    "named": suite_named,
    "oracle": suite_oracle,
    "precover": suite_precover,
    "lemmas": suite_lemmas,
    "atoms": suite_atoms,
    "search": suite_search,
    "witness": suite_witness,
    "pruning": suite_pruning,
}


def run_suites(names=None, quick=False, inject_fault=False) -> list[SuiteResult]:
    counter = CoverCounter(edge_coef=1) if inject_fault else count_covers
    out = []
    for name in names or list(SUITES):
        out.append(SUITES[name](counter=counter, quick=quick))
    return out
