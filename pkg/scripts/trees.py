"""Tree mode: cover counts reachable by trees (atom set {K2}).

    python scripts/trees.py --max 256
"""

import argparse

from covercount.atomsets import tree_atoms
from covercount.search import achievable_alphas, run_closure


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max", type=int, default=256)
    args = ap.parse_args()
    pool = run_closure(tree_atoms(), args.max)
    missing = sorted(set(range(1, args.max + 1)) - achievable_alphas(pool))
    print(f"L={args.max}: {len(pool)} pairs, {pool.elapsed:.2f}s")
    print(f"{len(missing)} counts no tree has:", missing)


if __name__ == "__main__":
    main()
