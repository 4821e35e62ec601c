"""Extend the atom set to every atomic bipartite graph with at most 97
covers and rerun the search.

The impossibility claims for the extra values are conditional: the
enumeration only looks at graphs with at most --max-vertices vertices.

    python scripts/eighth_atom.py
"""

import argparse

from covercount.atoms import enumerate_atoms
from covercount.atomsets import AtomSet
from covercount.search import certified_impossible, run_closure, unresolved


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--threshold", type=int, default=97)
    ap.add_argument("--max-vertices", type=int, default=10)
    ap.add_argument("--max", type=int, default=1000)
    args = ap.parse_args()

    cat = enumerate_atoms(args.threshold, args.max_vertices, "augment")
    cross = enumerate_atoms(args.threshold, min(args.max_vertices, 9), "exhaustive")
    print(f"{len(cat)} atoms with alpha <= {args.threshold} on <= {args.max_vertices} vertices")
    for g, a in cat.atoms:
        print(f"  n={g.n} m={g.m} alpha={a} edges={list(g.edges)}")
    print("exhaustive generator (<= 9 vertices) agrees:", cross.atoms == enumerate_atoms(
        args.threshold, min(args.max_vertices, 9), "augment").atoms)

    atoms = AtomSet(f"upto{args.threshold}", tuple((f"a{i}", g) for i, (g, _) in enumerate(cat.atoms)),
                    args.threshold)
    pool = run_closure(atoms, args.max)
    print(f"L={args.max}: {len(pool)} pairs, {pool.elapsed:.1f}s")
    print("impossible (conditional on the vertex bound):", sorted(certified_impossible(pool)))
    print("unresolved:", sorted(unresolved(pool)))


if __name__ == "__main__":
    main()
