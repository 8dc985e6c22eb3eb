import random
import time
from dataclasses import dataclass
from typing import Dict, List, Tuple

import pytest
from hypothesis import strategies as st

from twovcss.generators import random_2vc, structured
from twovcss.graph import Graph, is_2vc
from twovcss.structure import is_structured

RANDOM_CORPUS_SIZE = 520
SMALL_N = range(3, 9)

# (criterion number) -> (passed, detail); filled in by test_acceptance.py
TIMINGS: Dict[str, float] = {}
ACCEPTANCE: Dict[int, Tuple[bool, str]] = {}


def record(criterion: int, ok: bool, detail: str = "") -> None:
    ACCEPTANCE[criterion] = (ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")


def random_corpus() -> List[Graph]:
    """The frozen corpus: seed i gives n = 3 + i % 6."""
    return [random_2vc(3 + i % 6, seed=i) for i in range(RANDOM_CORPUS_SIZE)]


def atlas_graphs(max_n=7):
    """Every graph on 3..max_n vertices up to isomorphism (networkx atlas)."""
    import networkx as nx

    for G in nx.graph_atlas_g():
        n = G.number_of_nodes()
        if 3 <= n <= max_n and G.number_of_edges() > 0:
            yield Graph.from_edges(n, [tuple(sorted(e)) for e in G.edges()])


def structured_corpus() -> List[Graph]:
    """All structured graphs with n <= 7, plus generated structured graphs with n = 6..8."""
    out = [g for g in atlas_graphs(7) if is_2vc(g) and is_structured(g)]
    seen = {(g.n, frozenset(g.edges)) for g in out}
    for n in (6, 7, 8):
        for seed in range(60):
            g = structured(n, seed)
            key = (g.n, frozenset(g.edges))
            if key not in seen:
                seen.add(key)
                out.append(g)
    return out


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    es = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, es)


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


@dataclass
class Run:
    g: Graph
    res: object
    opt: int


@pytest.fixture(scope="session")
def corpus_runs() -> List[Run]:
    from twovcss.oracle import opt
    from twovcss.pipeline import solve

    t0 = time.perf_counter()
    graphs = random_corpus() + structured_corpus()
    runs = [Run(g, solve(g), opt(g)) for g in graphs]
    TIMINGS["corpus"] = time.perf_counter() - t0
    return runs


def tree_of_cycles(k: int, seed: int, pendants: int = 0, reach: int = 3):
    """A complex 2-edge-cover and a structured 2VC graph containing it.

    The cover is a tree of k cycles (5 to 7 vertices) joined by paths, plus
    ``pendants`` disjoint 4-cycles.  Random chords, mostly between vertices
    at cover distance <= ``reach``, are added until the graph is structured.
    Returns (graph, cover edges) or None when the budget runs out.
    """
    from twovcss.graph import adjacency, edge

    rng = random.Random(seed)
    es, n, attach = set(), 0, []
    for _ in range(k):
        size = rng.choice([5, 5, 6, 7])
        vs = list(range(n, n + size))
        n += size
        es |= {edge(vs[j], vs[(j + 1) % size]) for j in range(size)}
        if attach:
            a, b = rng.choice(attach), rng.choice(vs)
            plen = rng.choice([1, 1, 2, 3, 4, 5])
            chain = [a] + list(range(n, n + plen - 1)) + [b]
            n += plen - 1
            es |= {edge(x, y) for x, y in zip(chain, chain[1:])}
            attach += chain[1:-1]
        attach += vs
    for _ in range(pendants):
        vs = list(range(n, n + 4))
        n += 4
        es |= {edge(vs[j], vs[(j + 1) % 4]) for j in range(4)}
    cover = frozenset(es)
    sadj = adjacency(cover)

    def near(u):
        seen = {u: 0}
        queue = [u]
        for x in queue:
            if seen[x] < reach:
                for y in sadj[x]:
                    if y not in seen:
                        seen[y] = seen[x] + 1
                        queue.append(y)
        return [y for y in seen if y != u]

    for _ in range(40 * n):
        g = Graph(n, frozenset(es))
        if is_2vc(g) and is_structured(g):
            return g, cover
        if rng.random() < 0.85:
            u = rng.randrange(n)
            v = rng.choice(near(u))
        else:
            u, v = rng.sample(range(n), 2)
        es.add(edge(u, v))
    return None
