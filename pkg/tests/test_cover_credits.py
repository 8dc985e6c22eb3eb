import random
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, random_graph
from twovcss.cover import canonicalize, classify, is_canonical, max_simple_2matching, min_2edge_cover
from twovcss.credits import certify_move, check_initial_bound, cost, ledger, trace_line
from twovcss.errors import InvariantError
from twovcss.generators import random_2vc
from twovcss.graph import EdgeSet, Graph, complete_graph, cycle_graph, petersen_graph, wheel_graph
from twovcss.matching import Matching, bipartite_matching, maximum_matching
from twovcss.oracle import exact_max_matching, exact_min_2edge_cover


def two_pentagons_bridge(extra_n=0):
    es = [(i, (i + 1) % 5) for i in range(5)] + [(5 + i, 5 + (i + 1) % 5) for i in range(5)] + [(0, 5)]
    return Graph.from_edges(10 + extra_n, es)


# --- matching ---------------------------------------------------------------

@pytest.mark.parametrize("g, size", [
    (cycle_graph(6), 3),
    (cycle_graph(5), 2),
    (petersen_graph(), 5),
    (complete_graph(5), 2),
])
def test_matching_examples(g, size):
    assert len(maximum_matching(g)) == size
    assert len(exact_max_matching(g)) == size


@settings(max_examples=300, deadline=None)
@given(graphs(min_n=1, max_n=11))
def test_blossom_matches_networkx(g):
    G = nx.Graph()
    G.add_edges_from(g.edges)
    m = maximum_matching(g)
    assert len(m) == len(nx.max_weight_matching(G, maxcardinality=True))
    assert m.edges <= g.edges


def test_matching_rejects_shared_vertex():
    with pytest.raises(ValueError):
        Matching(frozenset({(0, 1), (1, 2)}))


def test_bipartite_matching():
    m = bipartite_matching([(0, 10), (0, 11), (1, 10), (2, 12)])
    assert len(m) == 3
    assert m.mate(2) == 12


# --- 2-edge-covers ----------------------------------------------------------

@pytest.mark.parametrize("g, size", [
    (cycle_graph(7), 7),
    (petersen_graph(), 10),
    (complete_graph(4), 4),
    (wheel_graph(5), 6),  # frozen from exact_min_2edge_cover
])
def test_cover_examples(g, size):
    assert len(min_2edge_cover(g)) == size
    assert len(exact_min_2edge_cover(g)) == size


def test_cover_of_cycle_is_the_cycle():
    g = cycle_graph(9)
    assert min_2edge_cover(g).edges == g.edges


def test_cover_needs_min_degree_two():
    with pytest.raises(ValueError):
        min_2edge_cover(Graph.from_edges(3, [(0, 1), (1, 2)]))


def test_cover_matches_oracle_and_identity():
    rng = random.Random(11)
    seen = 0
    while seen < 150:
        g = random_graph(rng, rng.randint(3, 10), rng.choice([0.4, 0.6]))
        if any(g.degree(v) < 2 for v in range(g.n)):
            continue
        seen += 1
        h = min_2edge_cover(g)
        assert h.is_2_edge_cover()
        assert len(h) == len(exact_min_2edge_cover(g))
        # min cover = 2n - max simple 2-matching
        assert len(h) == 2 * g.n - len(max_simple_2matching(g))


def test_two_matching_degrees():
    g = complete_graph(6)
    m = max_simple_2matching(g)
    assert len(m) == 6
    deg = EdgeSet.of(g, m).degrees()
    assert max(deg) <= 2


@settings(max_examples=300, deadline=None)
@given(graphs(min_n=3, max_n=10))
def test_two_matching_is_simple_and_maximum(g):
    m = max_simple_2matching(g)
    assert max(EdgeSet.of(g, m).degrees(), default=0) <= 2
    if all(g.degree(v) >= 2 for v in range(g.n)):
        assert len(m) == 2 * g.n - len(exact_min_2edge_cover(g))


# --- canonical form ---------------------------------------------------------

def test_canonical_fixed_point_on_cycles():
    g = Graph.from_edges(9, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 3), (0, 3)])
    h = EdgeSet(g, g.edges - {(0, 3)})
    assert is_canonical(h)
    assert canonicalize(h).edges == h.edges


def test_canonical_rejects_small_non_cycle():
    k4 = complete_graph(4)
    h = EdgeSet.of(k4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])
    assert not is_canonical(h)


def test_canonicalize_merges_triangle_leaf_block():
    # triangle 0-1-2 hangs off a 6-cycle 3..8 by the bridge 2-3; edge 1-4 lets it join
    es = [(0, 1), (1, 2), (0, 2), (2, 3)] + [(3 + i, 3 + (i + 1) % 6) for i in range(6)] + [(1, 4), (0, 8)]
    g = Graph.from_edges(9, es)
    h = EdgeSet(g, g.edges - {(1, 4), (0, 8)})
    assert not is_canonical(h)
    s = canonicalize(h)
    assert len(s) == len(h)
    assert is_canonical(s)


def test_canonicalize_keeps_size_on_corpus():
    for seed in range(120):
        g = random_2vc(3 + seed % 10, seed)
        h = min_2edge_cover(g)
        s = canonicalize(h)
        assert len(s) == len(h) and is_canonical(s) and s.is_2_edge_cover()


def test_classify_components():
    host = [(i, (i + 1) % 6) for i in range(6)]
    c4 = [(6, 7), (7, 8), (8, 9), (6, 9)]
    g = Graph.from_edges(10, host + c4 + [(6, 0), (8, 3)])
    cl = classify(EdgeSet.of(g, host + c4))
    kinds = sorted((c.size, c.kind, c.pendant) for c in cl.components)
    assert kinds == [("large", "2vc", False), ("small", "cycle", True)]

    g2 = two_pentagons_bridge()
    cl2 = classify(EdgeSet(g2, g2.edges))
    (c,) = cl2.complex()
    assert len(c.leaf_blocks) == 2


# --- credits ----------------------------------------------------------------

def test_credit_examples():
    tri = cycle_graph(3)
    assert ledger(EdgeSet(tri, tri.edges)).cr == 1
    assert cost(EdgeSet(tri, tri.edges)) == 4
    c6 = cycle_graph(6)
    assert ledger(EdgeSet(c6, c6.edges)).cr == 2
    assert cost(EdgeSet(c6, c6.edges)) == 8
    g = two_pentagons_bridge()
    led = ledger(EdgeSet(g, g.edges))
    assert led.cr == Fraction(13, 4)
    assert led.cost == Fraction(57, 4)


def test_initial_bound_tight_and_failing():
    c6 = cycle_graph(6)
    assert check_initial_bound(EdgeSet(c6, c6.edges)) == 8
    two = Graph.from_edges(12, [(i, (i + 1) % 6) for i in range(6)] + [(6 + i, 6 + (i + 1) % 6) for i in range(6)])
    assert check_initial_bound(EdgeSet(two, two.edges)) == 16
    # triangle plus 5-cycle: (3 + 1) + (5 + 5/3) = 32/3 = 4/3 * 8, tight
    g = Graph.from_edges(8, [(0, 1), (1, 2), (0, 2)] + [(3 + i, 3 + (i + 1) % 5) for i in range(5)])
    assert check_initial_bound(EdgeSet(g, g.edges)) == Fraction(32, 3)
    # a complex component with 3-node leaf blocks is over budget
    bow = Graph.from_edges(7, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 6)])
    s = EdgeSet(bow, bow.edges)
    assert cost(s) == 8 + 1 + 2 + Fraction(2, 4)
    with pytest.raises(InvariantError):
        check_initial_bound(s)


def test_certify_move_identity_and_trace():
    c6 = cycle_graph(6)
    s = EdgeSet(c6, c6.edges)
    assert certify_move(s, s) == 0
    assert trace_line("glue", 2, 0, Fraction(16), Fraction(16)) == \
        "move=glue added=2 removed=0 cost_before=16/1 cost_after=16/1"


def test_credits_need_cover():
    g = cycle_graph(4)
    with pytest.raises(InvariantError):
        ledger(EdgeSet.of(g, [(0, 1)]))
