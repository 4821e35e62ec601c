"""Exact edge-cover counting for graphs and the achievability search for
cover counts of bipartite graphs and trees."""

__version__ = "0.1.0"

from .graph import (Graph, GraphError, GuardExceeded, RootedGraph, cache_key, delete_edge,
                    delete_vertices, induced_subgraph, is_atomic, is_bipartite, is_connected,
                    make_graph)
from .counting import (PairAB, count_covers, count_covers_bruteforce, count_precovers_bruteforce,
                       rooted_profile)
from .algebra import CoreTable, build_core_table, glue_at_root, glue_on_core
from .atomsets import AtomSet, seven_atoms, tree_atoms
from .search import (Pool, achievable_alphas, certified_impossible, format_term, parse_term,
                     realize_witness, run_closure, unresolved, witness_pair)
from .atoms import AtomCatalog, enumerate_atoms, isomorphic
