"""Edge-list and graph6 readers/writers, and atom catalog files.

Edge-list: a block is a line ``n m`` followed by ``m`` lines ``u v``
(0-based); ``#`` starts a comment. A file may hold several blocks.
Atom catalogs are edge-list files whose first line is
``#covercount-atoms v1 T=<threshold>`` and whose blocks are each preceded
by ``# atom <id> alpha=<count>``.
"""

from __future__ import annotations

import re
from pathlib import Path

from .atomsets import AtomSet
from .graph import Graph, GraphError, make_graph


class ParseError(GraphError):
    pass


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_edge_list(text: str) -> list[Graph]:
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        body = _strip(line)
        if body:
            rows.append((lineno, body.split()))
    graphs = []
    k = 0
    while k < len(rows):
        lineno, head = rows[k]
        try:
            n, m = (int(x) for x in head)
        except ValueError:
            raise ParseError(f"line {lineno}: expected 'n m', got {' '.join(head)!r}") from None
        edges = []
        for lineno_e, parts in rows[k + 1:k + 1 + m]:
            try:
                u, v = (int(x) for x in parts)
            except ValueError:
                raise ParseError(f"line {lineno_e}: expected 'u v', got {' '.join(parts)!r}") from None
            edges.append((u, v))
        if len(edges) != m:
            raise ParseError(f"line {lineno}: header promises {m} edges, found {len(edges)}")
        try:
            graphs.append(make_graph(n, edges))
        except GraphError as exc:
            raise ParseError(f"graph at line {lineno}: {exc}") from None
        k += 1 + m
    return graphs


def format_edge_list(g: Graph) -> str:
    return "\n".join([f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]) + "\n"


def _g6_size(data: list[int]) -> tuple[int, list[int]]:
    if data[0] != 63 + 63:
        return data[0] - 63, data[1:]
    if len(data) > 1 and data[1] == 126:
        vals, rest = data[2:8], data[8:]
    else:
        vals, rest = data[1:4], data[4:]
    n = 0
    for c in vals:
        n = (n << 6) | (c - 63)
    return n, rest


def parse_graph6(line: str) -> Graph:
    line = line.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise ParseError("empty graph6 string")
    data = [ord(c) for c in line]
    if any(c < 63 or c > 126 for c in data):
        raise ParseError(f"invalid graph6 character in {line!r}")
    n, body = _g6_size(data)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    bits = []
    for c in body:
        v = c - 63
        bits.extend((v >> (5 - k)) & 1 for k in range(6))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return make_graph(n, edges)


def format_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [n + 63]
    elif n <= 258047:
        out = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        out = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        out.append(v + 63)
    return "".join(chr(c) for c in out)


_EDGE_HEAD = re.compile(r"^\s*\d+\s+\d+\s*$")


def detect_format(text: str) -> str:
    if text.lstrip().startswith(">>graph6<<"):
        return "graph6"
    for line in text.splitlines():
        body = _strip(line)
        if body:
            return "edgelist" if _EDGE_HEAD.match(body) else "graph6"
    return "edgelist"


def parse_graphs(text: str, fmt: str = "auto") -> list[Graph]:
    if fmt == "auto":
        fmt = detect_format(text)
    if fmt == "edgelist":
        graphs = parse_edge_list(text)
    elif fmt == "graph6":
        graphs = [parse_graph6(l) for l in text.splitlines() if l.strip()]
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if not graphs:
        raise ParseError("no graph found in input")
    return graphs


def read_graphs(path, fmt: str = "auto") -> list[Graph]:
    return parse_graphs(Path(path).read_text(), fmt)


# ------------------------------------------------------------ atom catalogs

_ATOM_HEADER = re.compile(r"^#covercount-atoms v1 T=(\d+)\s*$")
_ATOM_NAME = re.compile(r"^#\s*atom\s+(\S+)")


def format_atom_file(atoms: list[tuple[str, Graph]], threshold: int, alphas=None) -> str:
    parts = [f"#covercount-atoms v1 T={threshold}\n"]
    for k, (aid, g) in enumerate(atoms):
        extra = f" alpha={alphas[k]}" if alphas is not None else ""
        parts.append(f"# atom {aid}{extra}\n")
        parts.append(format_edge_list(g))
    return "".join(parts)


def parse_atom_file(text: str, name: str = "file") -> tuple[AtomSet, int]:
    """Returns the atoms (with no certification: callers must opt in) and
    the threshold recorded in the header."""
    lines = text.splitlines()
    if not lines or not _ATOM_HEADER.match(lines[0]):
        raise ParseError("atom file must start with '#covercount-atoms v1 T=<n>'")
    threshold = int(_ATOM_HEADER.match(lines[0]).group(1))
    names = [m.group(1) for m in (_ATOM_NAME.match(l) for l in lines[1:]) if m]
    graphs = parse_edge_list(text)
    if names and len(names) != len(graphs):
        raise ParseError(f"{len(names)} atom names for {len(graphs)} graphs")
    ids = names or [f"a{k}" for k in range(len(graphs))]
    return AtomSet(name, tuple(zip(ids, graphs)), 0), threshold
