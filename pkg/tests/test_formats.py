import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs
from covercount.atomsets import seven_atoms
from covercount.formats import (ParseError, detect_format, format_atom_file, format_edge_list,
                                format_graph6, parse_atom_file, parse_edge_list, parse_graph6,
                                parse_graphs)
from covercount.graph import cycle_graph, make_graph, path_graph


def test_edge_list_basic():
    text = "# a 4-cycle\n4 4\n0 1\n1 2  # inline\n2 3\n3 0\n"
    assert parse_edge_list(text) == [cycle_graph(4)]


def test_edge_list_multiple_blocks_and_empty():
    text = "2 1\n0 1\n\n3 0\n"
    assert parse_edge_list(text) == [make_graph(2, [(0, 1)]), make_graph(3, [])]


@pytest.mark.parametrize("text", ["4\n", "3 2\n0 1\n", "3 1\n0 0\n", "3 1\n0 5\n", "2 1\na b\n",
                                  "3 2\n0 1\n1 0\n"])
def test_edge_list_errors(text):
    with pytest.raises(ParseError):
        parse_edge_list(text)


@given(graphs(max_vertices=10, max_edges=20))
def test_edge_list_roundtrip(g):
    assert parse_edge_list(format_edge_list(g)) == [g]


@given(graphs(max_vertices=10, max_edges=20))
def test_graph6_matches_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    if g.n:
        ref = nx.to_graph6_bytes(h, header=False).decode().strip()
        assert format_graph6(g) == ref
        assert parse_graph6(ref) == g


def test_graph6_large_n():
    g = path_graph(100)
    s = format_graph6(g)
    assert s[0] == "~"
    assert parse_graph6(s) == g
    assert parse_graph6(">>graph6<<" + s) == g


@pytest.mark.parametrize("bad", ["", "C~~~~~", "A\x01", "Dx", "Dxxx"])
def test_graph6_errors(bad):
    with pytest.raises(ParseError):
        parse_graph6(bad)


def test_detect_format():
    assert detect_format("# c\n4 4\n") == "edgelist"
    assert detect_format("GhCGKC\n") == "graph6"
    assert detect_format(">>graph6<<GhCGKC\n") == "graph6"
    assert parse_graphs("GhCGKC\n") == [cycle_graph(8)]
    with pytest.raises(ParseError):
        parse_graphs("   \n")


def test_atom_file_roundtrip():
    atoms = list(seven_atoms().atoms)
    text = format_atom_file(atoms, 67, [1, 7, 18, 25, 43, 47, 66])
    assert text.startswith("#covercount-atoms v1 T=67\n")
    loaded, threshold = parse_atom_file(text)
    assert threshold == 67
    assert list(loaded.atoms) == atoms
    assert loaded.certified_bound == 0


def test_atom_file_errors():
    with pytest.raises(ParseError):
        parse_atom_file("2 1\n0 1\n")
    with pytest.raises(ParseError):
        parse_atom_file("#covercount-atoms v1 T=5\n# atom a\n# atom b\n2 1\n0 1\n")
