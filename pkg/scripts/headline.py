"""Seven-atom search: which cover counts up to L do bipartite graphs reach?

Prints the certified-impossible and unresolved values, compares them with
the published exception list, and for any listed value that turns out to
be reachable prints the graph and its brute-force cover count.

    python scripts/headline.py --max 1000
"""

import argparse

from covercount.atomsets import seven_atoms
from covercount.counting import count_covers_bruteforce
from covercount.formats import format_edge_list
from covercount.graph import is_bipartite, is_connected
from covercount.search import (achievable_alphas, certified_impossible, format_term,
                               realize_witness, run_closure, unresolved)

PUBLISHED = [19, 37, 41, 59, 67, 82, 97, 149, 197, 223, 257, 291, 379]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max", type=int, default=1000)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    pool = run_closure(seven_atoms(), args.max, jobs=args.jobs,
                       progress=lambda r, d, n: print(f"  round {r:2d}: +{d} pairs, pool {n}"))
    print(f"L={args.max}: {len(pool)} pairs in {len(pool.round_sizes)} rounds, {pool.elapsed:.1f}s")
    print("certified impossible:", sorted(certified_impossible(pool)))
    print("unresolved:          ", sorted(unresolved(pool)))

    listed = [x for x in PUBLISHED if x <= args.max]
    reached = [x for x in listed if x in achievable_alphas(pool)]
    print("published exceptions:", listed)
    for x in reached:
        w = pool.witness_for_alpha(x)
        g = realize_witness(w, pool.atoms.as_dict()).graph
        print(f"\n{x} is reachable: {format_term(w)}")
        print(f"  connected={is_connected(g)} bipartite={is_bipartite(g)} "
              f"brute-force covers={count_covers_bruteforce(g, max_edges=30)}")
        print("  " + format_edge_list(g).replace("\n", "\n  "))


if __name__ == "__main__":
    main()
