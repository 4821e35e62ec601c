import subprocess
import sys

import pytest

from covercount.atomsets import seven_atoms, tree_atoms
from covercount.cli import main
from covercount.counting import count_covers
from covercount.formats import format_atom_file, format_edge_list, format_graph6
from covercount.graph import cycle_graph, disjoint_union, make_graph
from covercount.search import parse_term, realize_witness


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count(capsys, write):
    c8 = write("c8.txt", format_edge_list(cycle_graph(8)))
    k2 = write("k2.txt", format_edge_list(make_graph(2, [(0, 1)])))
    two = write("two.txt", format_edge_list(disjoint_union(cycle_graph(4), cycle_graph(4))))
    assert run(capsys, "count", c8)[:2] == (0, "47\n")
    assert run(capsys, "count", k2)[:2] == (0, "1\n")
    assert run(capsys, "count", two)[:2] == (0, "49\n")
    assert run(capsys, "count", "--brute", two)[:2] == (0, "49\n")


def test_count_graph6(capsys, write):
    p = write("c8.g6", format_graph6(cycle_graph(8)) + "\n" + format_graph6(cycle_graph(4)) + "\n")
    assert run(capsys, "count", p)[:2] == (0, "47\n7\n")
    assert run(capsys, "count", "--format", "graph6", p)[:2] == (0, "47\n7\n")


def test_count_parse_failure(capsys, write):
    p = write("bad.txt", "3 1\n0 0\n")
    code, _, err = run(capsys, "count", p)
    assert code == 1 and "self-loop" in err
    assert run(capsys, "count", str(p) + ".missing")[0] == 1


def test_guard_exit_code(capsys, write, monkeypatch):
    p = write("c8.txt", format_edge_list(cycle_graph(8)))
    monkeypatch.setenv("COVERCOUNT_MAX_BRUTE_EDGES", "4")
    assert run(capsys, "count", "--brute", p)[0] == 2


def test_profile(capsys, write):
    p = write("c4.txt", format_edge_list(cycle_graph(4)))
    code, out, _ = run(capsys, "profile", "--root", "0", p)
    assert code == 0 and out == "root=0 alpha=7 beta=1 s=8\n"
    assert len(run(capsys, "profile", p)[1].splitlines()) == 4


def test_usage_errors(capsys):
    assert run(capsys, "search", "--max", "0")[0] == 1
    assert run(capsys, "search", "--trees", "--atoms-file", "x")[0] == 1
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys, "search", "--max", "100", "--certify", "90")[0] == 1


def test_search_67(capsys):
    code, out, _ = run(capsys, "search", "--max", "67")
    assert code == 0
    assert "certified_impossible: 19 37 41 59 67\n" in out
    assert out.endswith("unresolved: \n")


def test_search_trees_records(capsys):
    code, out, _ = run(capsys, "search", "--max", "256", "--trees", "--output", "records")
    lines = out.splitlines()
    assert lines[0] == "#covercount v1 L=256 atoms=trees T=256"
    rows = [l.split("\t") for l in lines[1:]]
    assert [int(r[0]) for r in rows] == list(range(1, 257))
    missing = [int(r[0]) for r in rows if r[1] != "achievable"]
    assert missing == [19, 37, 41, 57, 59, 67, 79, 82, 97, 111, 131, 149, 177, 179, 197, 201,
                       205, 223, 237, 251]
    assert all(r[1] == "certified_impossible" and r[2] == "-" for r in rows if int(r[0]) in missing)
    atoms = tree_atoms().as_dict()
    for value, status, term in rows:
        if status == "achievable":
            g = realize_witness(parse_term(term), atoms).graph
            assert count_covers(g) == int(value)


def test_records_witnesses_reparse(capsys):
    code, out, _ = run(capsys, "search", "--max", "200", "--output", "records")
    atoms = seven_atoms().as_dict()
    lines = out.splitlines()
    assert lines[0] == "#covercount v1 L=200 atoms=bipartite7 T=67"
    status = {}
    for line in lines[1:]:
        value, st, term = line.split("\t")
        status[int(value)] = st
        if st == "achievable":
            assert count_covers(realize_witness(parse_term(term), atoms).graph) == int(value)
    assert [v for v, s in status.items() if s == "unresolved"] == [82, 97, 149, 197]
    assert [v for v, s in status.items() if s == "certified_impossible"] == [19, 37, 41, 59, 67]


def test_records_stable_across_jobs(capsys, tmp_path):
    a, b = tmp_path / "a.tsv", tmp_path / "b.tsv"
    assert run(capsys, "search", "--max", "150", "--output", "records", "--out", str(a))[0] == 0
    assert run(capsys, "search", "--max", "150", "--output", "records", "--jobs", "2",
               "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_search_atoms_file(capsys, write):
    atoms = [a for a in seven_atoms().atoms if a[0] in ("K2", "C4")]
    p = write("atoms.txt", format_atom_file(atoms, 7))
    code, out, _ = run(capsys, "search", "--max", "30", "--atoms-file", p)
    assert code == 0 and "T=0" in out and "certified_impossible: \n" in out
    code, out, _ = run(capsys, "search", "--max", "30", "--atoms-file", p, "--certify", "20")
    assert code == 0 and "certified_impossible: 19\n" in out and "unresolved: \n" in out
    assert run(capsys, "search", "--max", "30", "--atoms-file", p, "--certify", "40")[0] == 1


def test_atoms_command(capsys, tmp_path):
    out_file = tmp_path / "atoms.txt"
    code, _, err = run(capsys, "atoms", "--max-alpha", "67", "--out", str(out_file))
    assert code == 0 and "7 atoms" in err
    text = out_file.read_text()
    assert text.startswith("#covercount-atoms v1 T=67")
    code, out, _ = run(capsys, "search", "--max", "67", "--atoms-file", str(out_file),
                       "--certify", "67")
    assert code == 0 and "certified_impossible: 19 37 41 59 67\n" in out


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "cycles")
    assert code == 0 and out.startswith("PASS cycles: 5 checks")
    code, out, _ = run(capsys, "verify", "--quick", "--suite", "oracle", "--suite", "precover")
    assert code == 0 and out.count("PASS") == 2


def test_verify_catches_injected_fault(capsys):
    code, out, _ = run(capsys, "verify", "--quick", "--suite", "oracle", "--inject-fault")
    assert code == 3 and out.startswith("FAIL oracle")


def test_module_entry_point(write):
    p = write("c6.txt", format_edge_list(cycle_graph(6)))
    res = subprocess.run([sys.executable, "-m", "covercount", "count", p],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "18\n"
