"""``covercount`` command line.

Exit codes: 0 ok, 1 usage or parse error, 2 guard exceeded, 3 verification
failure.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .atoms import enumerate_atoms
from .atomsets import AtomSet, seven_atoms, tree_atoms
from .counting import count_covers, count_covers_bruteforce, rooted_profile
from .formats import format_atom_file, parse_atom_file, read_graphs
from .graph import GraphError, GuardExceeded, RootedGraph
from .search import format_term, run_closure, statuses
from .verify import SUITES, run_suites

EXIT_OK, EXIT_USAGE, EXIT_GUARD, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    inputs: list[str] = field(default_factory=list)
    max_alpha: int = 67
    tree_mode: bool = False
    atoms_file: str | None = None
    certify: int | None = None
    force: bool = False
    output: str = "table"
    out: str | None = None
    jobs: int = 1
    symmetry: bool = True

    def __post_init__(self):
        if self.max_alpha < 1:
            raise UsageError("--max must be at least 1")
        if self.jobs < 1:
            raise UsageError("--jobs must be positive")
        if self.tree_mode and self.atoms_file:
            raise UsageError("--trees and --atoms-file are mutually exclusive")


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_count(args) -> int:
    for path in args.paths:
        for g in read_graphs(path, args.format):
            value = count_covers_bruteforce(g) if args.brute else count_covers(g)
            print(value)
    return EXIT_OK


def cmd_profile(args) -> int:
    for path in args.paths:
        for g in read_graphs(path, args.format):
            roots = range(g.n) if args.root is None else [args.root]
            for r in roots:
                p = rooted_profile(RootedGraph(g, r))
                print(f"root={r} alpha={p.alpha} beta={p.beta} s={p.s}")
    return EXIT_OK


def _atomset(cfg: RunConfig) -> AtomSet:
    if cfg.tree_mode:
        return tree_atoms()
    if cfg.atoms_file:
        # a user-supplied catalog certifies only what the user asserts
        atoms, _threshold = parse_atom_file(Path(cfg.atoms_file).read_text(), Path(cfg.atoms_file).stem)
        return AtomSet(atoms.name, atoms.atoms, cfg.certify or 0)
    return seven_atoms()


def search_report(cfg: RunConfig) -> str:
    atoms = _atomset(cfg)
    pool = run_closure(atoms, cfg.max_alpha, jobs=cfg.jobs, symmetry=cfg.symmetry)
    T = min(atoms.certified_bound, pool.alpha_bound)
    if cfg.certify is not None:
        T = cfg.certify
        if T > atoms.certified_bound and not cfg.force:
            raise UsageError(f"atom set {atoms.name!r} is certified only up to "
                             f"{atoms.certified_bound}; pass --force to claim T={T}")
        if T > pool.alpha_bound:
            raise UsageError(f"--certify {T} exceeds --max {pool.alpha_bound}")
    rows = list(statuses(pool, T, force=True))
    if cfg.output == "records":
        lines = [f"#covercount v1 L={cfg.max_alpha} atoms={atoms.name} T={T}"]
        lines += [f"{x}\t{st}\t{format_term(w) if w is not None else '-'}" for x, st, w in rows]
        return "\n".join(lines) + "\n"
    by = {"achievable": [], "certified_impossible": [], "unresolved": []}
    for x, st, _ in rows:
        by[st].append(x)
    width = len(str(cfg.max_alpha))
    lines = [f"atoms: {atoms.name} ({len(atoms.atoms)} atoms)  L={cfg.max_alpha}  T={T}  "
             f"pool={len(pool)} pairs  rounds={len(pool.round_sizes)}",
             f"{'value':>{width}}  {'status':<20}  witness"]
    for x, st, w in rows:
        lines.append(f"{x:>{width}}  {st:<20}  {format_term(w) if w is not None else '-'}")
    lines.append(f"achievable: {len(by['achievable'])} of {cfg.max_alpha}")
    lines.append("certified_impossible: " + " ".join(map(str, by["certified_impossible"])))
    lines.append("unresolved: " + " ".join(map(str, by["unresolved"])))
    return "\n".join(lines) + "\n"


def cmd_search(args) -> int:
    cfg = RunConfig("search", max_alpha=args.max, tree_mode=args.trees, atoms_file=args.atoms_file,
                    certify=args.certify, force=args.force, output=args.output, out=args.out,
                    jobs=args.jobs, symmetry=not args.no_symmetry)
    _emit(search_report(cfg), cfg.out)
    return EXIT_OK


def cmd_atoms(args) -> int:
    methods = ["augment", "exhaustive"] if args.method == "both" else [args.method]
    cats = [enumerate_atoms(args.max_alpha, args.max_vertices, m) for m in methods]
    if len(cats) == 2 and cats[0].atoms != cats[1].atoms:
        print("generators disagree", file=sys.stderr)
        return EXIT_VERIFY
    cat = cats[0]
    ids = [f"a{k}" for k in range(len(cat))]
    _emit(format_atom_file(list(zip(ids, (g for g, _ in cat.atoms))), cat.threshold, cat.alphas()), args.out)
    print(f"{len(cat)} atoms with alpha <= {args.max_alpha} on <= {args.max_vertices} vertices: "
          + " ".join(map(str, cat.alphas())), file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_suites(args.suite, quick=args.quick, inject_fault=args.inject_fault)
    for r in results:
        print(r.line())
    return EXIT_OK if all(r.ok for r in results) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="covercount", description="Exact edge-cover counting and achievability search.")
    p.add_argument("--version", action="version", version=f"covercount {__version__}")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    fmt = dict(choices=["auto", "edgelist", "graph6"], default="auto")
    c = sub.add_parser("count", help="print the number of edge covers of each input graph")
    c.add_argument("paths", nargs="+")
    c.add_argument("--format", **fmt)
    c.add_argument("--brute", action="store_true", help="use exhaustive enumeration")
    c.set_defaults(func=cmd_count)

    pr = sub.add_parser("profile", help="print (alpha, beta) of rooted input graphs")
    pr.add_argument("paths", nargs="+")
    pr.add_argument("--root", type=int, default=None, help="root vertex (default: all)")
    pr.add_argument("--format", **fmt)
    pr.set_defaults(func=cmd_profile)

    s = sub.add_parser("search", help="run the pool closure and report achievable counts")
    s.add_argument("--max", type=int, default=67, help="alpha bound L")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--trees", action="store_true", help="atoms = {K2}")
    g.add_argument("--atoms-file")
    s.add_argument("--certify", type=int, default=None, help="completeness bound T to claim")
    s.add_argument("--force", action="store_true", help="allow T above the atom set's bound")
    s.add_argument("--output", choices=["table", "records"], default="table")
    s.add_argument("--out")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--no-symmetry", action="store_true", help="try every core root")
    s.set_defaults(func=cmd_search)

    a = sub.add_parser("atoms", help="enumerate atomic bipartite graphs")
    a.add_argument("--max-alpha", type=int, default=67)
    a.add_argument("--max-vertices", type=int, default=8)
    a.add_argument("--method", choices=["augment", "exhaustive", "both"], default="both")
    a.add_argument("--out")
    a.set_defaults(func=cmd_atoms)

    v = sub.add_parser("verify", help="run the verification suites")
    v.add_argument("--suite", action="append", choices=sorted(SUITES))
    v.add_argument("--quick", action="store_true", help="small corpora")
    v.add_argument("--inject-fault", action="store_true",
                   help="run with a deliberately wrong recursion coefficient")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except GuardExceeded as exc:
        print(f"covercount: guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (UsageError, GraphError, ValueError, OSError) as exc:
        print(f"covercount: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
