"""Edge-list files and DOT export.

Format: a header line ``n m`` followed by ``m`` lines ``u v`` with
``0 <= u < v < n``.  Blank lines and lines starting with ``#`` are ignored.
Solutions use the same format, with ``m`` the number of chosen edges.
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Tuple

from .errors import ParseError
from .graph import Edge, EdgeSet, Graph, GraphError


def _tokens(text: str, source: str) -> List[Tuple[int, List[int]]]:
    rows = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"{source}:{no}: expected two integers, got {line!r}")
        try:
            rows.append((no, [int(p) for p in parts]))
        except ValueError:
            raise ParseError(f"{source}:{no}: expected two integers, got {line!r}") from None
    return rows


def parse_edge_list(text: str, source: str = "<input>") -> Tuple[int, List[Edge]]:
    rows = _tokens(text, source)
    if not rows:
        raise ParseError(f"{source}: missing 'n m' header")
    no, (n, m) = rows[0]
    if n < 1 or m < 0:
        raise ParseError(f"{source}:{no}: bad header 'n={n} m={m}'")
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"{source}: header announces {m} edges, found {len(body)}")
    seen = set()
    edges = []
    for no, (u, v) in body:
        if u == v:
            raise ParseError(f"{source}:{no}: self-loop at {u}")
        if not (0 <= u < v < n):
            raise ParseError(f"{source}:{no}: need 0 <= u < v < {n}, got {u} {v}")
        if (u, v) in seen:
            raise ParseError(f"{source}:{no}: duplicate edge {u} {v}")
        seen.add((u, v))
        edges.append((u, v))
    return n, edges


def parse_graph(text: str, source: str = "<input>") -> Graph:
    n, edges = parse_edge_list(text, source)
    try:
        return Graph.from_edges(n, edges)
    except GraphError as exc:
        raise ParseError(f"{source}: {exc}") from None


def read_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read(), path)


def parse_solution(text: str, g: Graph, source: str = "<solution>") -> EdgeSet:
    n, edges = parse_edge_list(text, source)
    if n != g.n:
        raise ParseError(f"{source}: solution is for n={n}, graph has n={g.n}")
    bad = sorted(set(edges) - g.edges)
    if bad:
        raise ParseError(f"{source}: edges not in the graph: {bad[:5]}")
    return EdgeSet(g, frozenset(edges))


def format_edges(n: int, edges: Iterable[Edge], comments: Optional[List[str]] = None) -> str:
    es = sorted(edges)
    lines = [f"# {c}" for c in comments or []]
    lines.append(f"{n} {len(es)}")
    lines += [f"{u} {v}" for u, v in es]
    return "\n".join(lines) + "\n"


def format_graph(g: Graph, comments: Optional[List[str]] = None) -> str:
    return format_edges(g.n, g.edges, comments)


def format_solution(s: EdgeSet) -> str:
    return format_edges(s.graph.n, s.edges)


def to_dot(g: Graph, solution: Iterable[Edge], cover: Iterable[Edge] = ()) -> str:
    """Solution edges solid, dropped cover edges dashed, other edges dotted grey."""
    sol, cov = set(solution), set(cover)
    out = ["graph G {", "  node [shape=circle];"]
    out += [f"  {v};" for v in range(g.n)]
    for u, v in g.sorted_edges():
        if (u, v) in sol:
            style = "style=solid"
        elif (u, v) in cov:
            style = "style=dashed"
        else:
            style = 'style=dotted color="grey"'
        out.append(f"  {u} -- {v} [{style}];")
    out.append("}")
    return "\n".join(out) + "\n"
