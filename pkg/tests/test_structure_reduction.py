from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import atlas_graphs, graphs
from twovcss.errors import BudgetExceeded, InvariantError, NotTwoVCError
from twovcss.generators import random_2vc
from twovcss.graph import EdgeSet, Graph, complete_graph, cycle_graph, is_2vc, petersen_graph
from twovcss.oracle import OracleBudget, exact_2vcss, naive_two_cuts, opt
from twovcss.pipeline import bound, solve
from twovcss.reduction import ReductionConfig, RedStats, brute_force_small, red, split_on_cut
from twovcss.structure import (
    classify_cut,
    cut_pairs,
    find_irrelevant_edge,
    find_non_isolating_cut,
    find_removable_5cycle,
    is_structured,
    removable_cycles,
    two_cuts,
)


def exact(sub):
    return exact_2vcss(sub, OracleBudget(max_vertices=max(8, sub.n)))


def strip_irrelevant(g):
    while True:
        e = find_irrelevant_edge(g)
        if e is None:
            return g
        g = g.without_edges([e])


# --- detectors --------------------------------------------------------------

def test_irrelevant_edge_examples():
    u, v, a, b, c = range(5)
    g = Graph.from_edges(5, [(u, a), (a, v), (u, b), (b, v), (u, c), (c, v), (u, v)])
    assert find_irrelevant_edge(g) == (u, v)
    assert find_irrelevant_edge(complete_graph(4)) is None
    assert find_irrelevant_edge(cycle_graph(6)) is None


def test_non_isolating_cut_examples():
    cut = find_non_isolating_cut(cycle_graph(6))
    assert cut.pair == (0, 3)  # (0, 2) isolates vertex 1
    assert cut.sides == ((1, 2), (4, 5))
    assert find_non_isolating_cut(cycle_graph(5)) is None
    assert find_non_isolating_cut(complete_graph(4)) is None


def test_non_isolating_cut_on_c6_opposite_pair():
    c = classify_cut(cycle_graph(6), 0, 3)
    assert c.kind == "non-isolating"
    assert sorted(c.components_after_removal) == [(1, 2), (4, 5)]


def test_detectors_need_2vc():
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    with pytest.raises(NotTwoVCError):
        find_irrelevant_edge(path)
    with pytest.raises(NotTwoVCError):
        find_non_isolating_cut(path)


def pentagon_on_k4():
    """5-cycle 0..4 (deg(0) = deg(2) = 2) attached to a K4 through 1, 3 and 4."""
    k4 = [(5, 6), (5, 7), (5, 8), (6, 7), (6, 8), (7, 8)]
    return Graph.from_edges(9, [(i, (i + 1) % 5) for i in range(5)] + k4 + [(1, 5), (3, 6), (4, 7)])


def test_removable_cycle_example():
    g = pentagon_on_k4()
    assert is_2vc(g)
    rc = find_removable_5cycle(g)
    assert rc.cycle == (0, 1, 2, 3, 4)
    assert rc.degree2_vertices == (0, 2)
    assert rc.removable_edge == (3, 4)
    assert opt(g.without_edges([rc.removable_edge]), OracleBudget(max_vertices=9)) == \
        opt(g, OracleBudget(max_vertices=9))


def test_removable_cycle_needs_six_vertices():
    with pytest.raises(InvariantError):
        find_removable_5cycle(cycle_graph(5))
    assert find_removable_5cycle(complete_graph(6)) is None


def test_adjacent_degree_two_vertices_force_a_cut():
    """On graphs with no irrelevant edge and no non-isolating cut, no 5-cycle
    has adjacent degree-2 vertices or three of them."""
    checked = 0
    graphs_ = [g for g in atlas_graphs(7) if is_2vc(g)] + [random_2vc(n, s) for n in range(6, 13) for s in range(80)]
    for g in graphs_:
        if g.n < 6 or find_irrelevant_edge(g) is not None or find_non_isolating_cut(g) is not None:
            continue
        removable_cycles(g)  # raises on a bad 5-cycle
        checked += 1
    assert checked > 50


@pytest.mark.parametrize("g, expect", [
    (complete_graph(4), True),
    (cycle_graph(6), False),
    (petersen_graph(), True),
])
def test_is_structured_examples(g, expect):
    assert bool(is_structured(g)) is expect


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=3, max_n=8))
def test_two_cuts_match_naive(g):
    if not is_2vc(g):
        return
    naive = naive_two_cuts(g)
    assert cut_pairs(g) == sorted(naive)
    for c in two_cuts(g):
        assert [list(x) for x in c.components_after_removal] == naive[c.pair]


# --- reduction --------------------------------------------------------------

@pytest.mark.parametrize("g, size", [
    (cycle_graph(5), 5),
    (complete_graph(4), 4),
    (complete_graph(5), 5),
])
def test_brute_force_small(g, size):
    s = brute_force_small(g)
    assert len(s) == size and is_2vc(s)


def test_config_validation():
    assert ReductionConfig().small_threshold == 6
    assert ReductionConfig(Fraction(6, 5)).small_threshold == 10
    with pytest.raises(ValueError):
        ReductionConfig(Fraction(1))
    with pytest.raises(ValueError):
        ReductionConfig(Fraction(8, 5))


def test_split_c6_gives_two_c5():
    # each side keeps its 2 vertices, the cut pair and the contracted node
    g = cycle_graph(6)
    cut = find_non_isolating_cut(g)
    w = split_on_cut(g, cut, exact)
    assert w.g1.m == w.g2.m == 5 and w.g1.n == w.g2.n == 5
    assert is_2vc(w.g1) and is_2vc(w.g2)
    assert w.stitched(g).edges == g.edges


def split_instances(limit=100):
    out = []
    seed = 0
    while len(out) < limit:
        g = strip_irrelevant(random_2vc(6 + seed % 5, seed))
        seed += 1
        cut = find_non_isolating_cut(g)
        if cut is not None:
            out.append((g, cut))
    return out


def test_split_sides_are_smaller_2vc_graphs():
    for g, cut in split_instances():
        w = split_on_cut(g, cut, exact)
        assert is_2vc(w.g1) and is_2vc(w.g2)
        assert w.g1.m < g.m and w.g2.m < g.m
        s = w.stitched(g)
        assert is_2vc(s)
        if g.n <= 8:
            assert len(s) <= bound(opt(g))


def test_split_rejects_bad_cuts():
    g = cycle_graph(6)
    iso = classify_cut(g, 0, 2)
    with pytest.raises(InvariantError):
        split_on_cut(g, iso, exact)


def test_red_counts_and_budget():
    g = cycle_graph(12)
    stats = RedStats()
    s = red(g, ReductionConfig(), exact, stats)
    assert s.edges == g.edges
    assert 0 < stats.splits <= g.n * g.n
    with pytest.raises(BudgetExceeded):
        red(g, ReductionConfig(recursion_budget=2), exact)
    with pytest.raises(ValueError):
        red(g)


def test_red_deletes_irrelevant_edge_first():
    u, v, a, b, c, d = range(6)
    g = Graph.from_edges(7, [(u, a), (a, v), (u, b), (b, v), (u, c), (c, d), (d, v), (u, v), (a, 6), (6, b)])
    stats = RedStats()
    s = red(g, ReductionConfig(), exact, stats)
    assert stats.irrelevant >= 1
    assert (u, v) not in s.edges
    assert is_2vc(s)


@settings(max_examples=60, deadline=None)
@given(st.integers(6, 8), st.integers(0, 10_000))
def test_red_with_exact_core_is_within_bound(n, seed):
    g = random_2vc(n, seed)
    s = red(g, ReductionConfig(), exact)
    assert is_2vc(s)
    assert len(s) <= bound(opt(g))


def test_solve_rejects_non_2vc():
    with pytest.raises(NotTwoVCError):
        solve(Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)]))
