"""Moves, small components, complex components, pendant 4-cycles and gluing."""

import itertools
import random
from fractions import Fraction

import pytest

from conftest import tree_of_cycles
from twovcss import complex_components as cx
from twovcss.cover import canonicalize, is_canonical, min_2edge_cover, pendant_host
from twovcss.credits import cost
from twovcss.errors import InvariantError
from twovcss.generators import random_cubic, structured
from twovcss.gluing import Partition, glue_components, nice_cycle
from twovcss.graph import EdgeSet, Graph, complete_graph, cycle_graph, decompose, edge, is_2vc, petersen_graph
from twovcss.moves import Move, Rewriter, progress_measure
from twovcss.oracle import is_nice_cycle
from twovcss.small_components import find_shortcut_pair, remove_small_components, run_small_phase, three_matching


def cyc(vs):
    return [edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def audit(log):
    for r in log:
        assert r.cost_after <= r.cost_before, r.line()
        assert r.measure_after < r.measure_before, r.line()


# --- the move validator -------------------------------------------------------

def test_rewriter_rejections():
    g = Graph.from_edges(8, cyc(range(4)) + cyc(range(4, 8)) + [(0, 4), (1, 5), (2, 6)])
    rw = Rewriter(EdgeSet.of(g, cyc(range(4)) + cyc(range(4, 8))))
    assert rw.cost == 8 + Fraction(8, 3)
    assert "outside S" in rw.evaluate(Move.of("x", removed=[(0, 4)]), "small")
    assert "outside S" in rw.evaluate(Move.of("x", added=[(0, 1)]), "small")
    assert rw.evaluate(Move.of("x", added=[(0, 2)]), "small") == "adds a non-edge"
    assert rw.evaluate(Move.of("x", removed=[(0, 1)]), "small") == "not a 2-edge-cover"
    assert rw.evaluate(Move.of("x", added=[(0, 4)]), "small").startswith("not canonical")
    assert rw.evaluate(Move.of("x", added=[(0, 4), (1, 5)]), "small").startswith("cost rises")
    ok = Move.of("x", added=[(0, 4), (1, 5)], removed=[(0, 1), (4, 5)])
    assert rw.apply(ok, "small")
    assert len(rw.log) == 1 and rw.log[0].delta == Fraction(8, 3) + 8 - 10
    assert len(rw.d.components) == 1


def test_progress_measures():
    g = Graph.from_edges(10, cyc(range(5)) + cyc(range(5, 10)) + [(0, 5)])
    d = decompose(EdgeSet(g, g.edges))
    assert progress_measure("small", d) == (1,)
    assert progress_measure("complex", d) == (1, 3)


# --- 3-matchings and shortcut pairs ----------------------------------------------

def test_three_matching_examples():
    m = three_matching(complete_graph(6), [0, 1, 2], [3, 4, 5])
    assert len(m) == 3
    p = petersen_graph()
    m = three_matching(p, range(5), range(5, 10))
    assert len(m) == 3 and all(b - a == 5 for a, b in m.edges)


def test_three_matching_preconditions():
    g = cycle_graph(6)
    with pytest.raises(InvariantError):
        three_matching(g, [0, 1, 2], [3, 4, 5])  # sides of 3 must be triangles
    with pytest.raises(InvariantError):
        three_matching(g, [0, 1], [2, 3, 4, 5])
    with pytest.raises(InvariantError):
        three_matching(g, [0, 1, 2, 3], [3, 4, 5])


def test_three_matching_on_structured_graphs():
    rng = random.Random(4)
    checked = 0
    for seed in range(250):
        g = structured(rng.randint(8, 14), seed)
        verts = list(range(g.n))
        rng.shuffle(verts)
        k = rng.randint(3, g.n - 3)
        v1, v2 = verts[:k], verts[k:]
        if any(len(s) == 3 and sum(g.has_edge(a, b) for a, b in itertools.combinations(s, 2)) < 3 for s in (v1, v2)):
            continue
        assert len(three_matching(g, v1, v2)) == 3
        checked += 1
    assert checked > 100


def triangle_on_hexagon():
    es = cyc([0, 1, 2]) + cyc(range(3, 9)) + [(0, 3), (1, 5), (2, 7)]
    g = Graph.from_edges(9, es)
    s = EdgeSet.of(g, cyc([0, 1, 2]) + cyc(range(3, 9)))
    return g, s


def test_shortcut_pairs_of_triangle():
    g, s = triangle_on_hexagon()
    comp = decompose(s).component(0)
    pairs = find_shortcut_pair(g, comp, 0, 3)
    assert sorted(tuple(sorted((p.u, p.v))) for p in pairs) == [(0, 1), (0, 2)]
    for p in pairs:
        p.check(g, comp)
        assert (0, 3) in p.matching


def test_shortcut_pair_of_square():
    es = cyc(range(4)) + cyc(range(4, 10)) + [(0, 4), (1, 6), (2, 8)]
    g = Graph.from_edges(10, es)
    comp = decompose(EdgeSet.of(g, cyc(range(4)) + cyc(range(4, 10)))).component(0)
    (p,) = find_shortcut_pair(g, comp, 0, 4)
    p.check(g, comp)
    assert g.has_edge(p.u, p.v)  # adjacent on the cycle
    missing = set(comp.edges) - {edge(a, b) for a, b in zip(p.path, p.path[1:])}
    assert missing == {edge(p.u, p.v)}


# --- small components -------------------------------------------------------------

def test_two_squares_become_one_cycle():
    g = Graph.from_edges(8, cyc(range(4)) + cyc(range(4, 8)) + [(0, 4), (1, 5), (2, 6)])
    log = []
    out = remove_small_components(EdgeSet.of(g, cyc(range(4)) + cyc(range(4, 8))), log)
    (c,) = decompose(out).components
    assert c.is_cycle() and len(c.edges) >= 6
    assert len(log) == 1
    audit(log)


def test_triangle_between_components_is_absorbed():
    g, s = triangle_on_hexagon()
    log = []
    out = remove_small_components(s, log)
    assert len(decompose(out).components) == 1
    assert cost(out) <= cost(s)
    audit(log)


def structured_covers(count, lo=10, hi=30):
    rng = random.Random(8)
    for seed in range(count):
        g = structured(rng.randint(lo, hi), seed)
        yield g, canonicalize(min_2edge_cover(g))


def test_small_phase_postcondition():
    runs = 0
    for g, h in structured_covers(150):
        rw = Rewriter(h)
        run_small_phase(rw)
        audit(rw.log)
        assert is_canonical(rw.edge_set)
        for c in rw.d.components:
            if c.is_small:
                assert pendant_host(g, rw.d, c) is not None
        runs += len(rw.log)
    assert runs > 20


def test_small_phase_on_cubic_graphs():
    for seed in range(30):
        g = random_cubic(20 + 2 * (seed % 10), seed)
        rw = Rewriter(canonicalize(min_2edge_cover(g)))
        run_small_phase(rw)
        audit(rw.log)


# --- complex components -------------------------------------------------------

@pytest.fixture(scope="module")
def tree_instances():
    out = []
    for seed in range(60):
        inst = tree_of_cycles(4 + seed % 3, seed, pendants=seed % 2)
        if inst is not None:
            out.append(inst)
    return out


def test_complex_phase_postcondition(tree_instances):
    stats = {}
    rules = set()
    for g, cover in tree_instances:
        s = EdgeSet(g, cover)
        rw = Rewriter(s)
        run_small_phase(rw)
        bridges = set(rw.d.bridges)
        cx.run_complex_phase(rw, stats)
        audit(rw.log)
        assert set(rw.d.bridges) <= bridges
        for c in rw.d.components:
            assert (c.is_large and c.is_2vc) or pendant_host(g, rw.d, c) is not None
        rules |= {r.rule for r in rw.log}
    assert stats.get("generic", 0) == 0
    assert {"complex-1", "complex-2"} <= rules


def test_case_generators_emit_wellformed_moves(tree_instances):
    """Run every anchored case generator directly, out of the solver's order.

    Candidates must be well-formed.  Their validity relies on the earlier
    cases failing, so here we only count how many the validator accepts.
    """
    valid = {}
    for g, cover in tree_instances:
        rw = Rewriter(EdgeSet(g, cover))
        run_small_phase(rw)
        while cx.complex_indices(rw):
            ci = cx.complex_indices(rw)[0]
            ctx = cx.ComplexContext(rw.graph, rw.edges, rw.d, ci)
            anomalies = []
            for an in ctx.anatomies():
                gens = (cx.case_to_a1(ctx, an), cx.case_to_a2(ctx, an), cx.case_two_paths(ctx, an, anomalies),
                        cx.case_degenerate(ctx, an, anomalies))
                for mv in itertools.chain.from_iterable(itertools.islice(gen, 200) for gen in gens):
                    assert mv.removed <= rw.edges and not (mv.added & rw.edges)
                    assert mv.added <= g.edges
                    if not isinstance(rw.evaluate(mv, "complex"), str):
                        valid[mv.rule] = valid.get(mv.rule, 0) + 1
            cx.bridge_covering_step(rw, ci)
    assert {"complex-3", "complex-5.2", "complex-6.3", "complex-6.6"} <= set(valid)


def test_auxiliary_graph_without_outside_structure():
    g = Graph.from_edges(10, cyc(range(5)) + cyc(range(5, 10)) + [(0, 5)])
    aux, witness = cx.auxiliary_graph(EdgeSet(g, g.edges), 0)
    assert aux.edges == g.edges
    assert all(w is None for w in witness.values())


def test_auxiliary_graph_records_hops():
    # complex C = two pentagons + bridge; a hexagon outside links 1 and 7
    c = cyc(range(5)) + cyc(range(5, 10)) + [(0, 5)]
    hexagon = cyc(range(10, 16))
    g = Graph.from_edges(16, c + hexagon + [(1, 10), (13, 7), (2, 12), (8, 15)])
    aux, witness = cx.auxiliary_graph(EdgeSet.of(g, c + hexagon), 0)
    assert aux.n == 10
    hops = {e: w for e, w in witness.items() if w is not None}
    assert (1, 7) in hops and hops[(1, 7)].clean


# --- pendant 4-cycles -----------------------------------------------------------

def test_pendant_square_on_hexagon():
    es = cyc(range(6)) + cyc(range(6, 10)) + [(6, 0), (7, 1), (8, 3)]
    g = Graph.from_edges(10, es)
    s = EdgeSet.of(g, cyc(range(6)) + cyc(range(6, 10)))
    log = []
    out = cx.absorb_pendant_4cycles(s, log)
    assert is_2vc(out) and len(out) == 11
    assert log[0].delta == Fraction(1, 3)


def test_two_pendant_squares():
    es = cyc(range(8)) + cyc(range(8, 12)) + cyc(range(12, 16))
    es += [(8, 0), (9, 1), (10, 3), (12, 4), (13, 5), (14, 7)]
    g = Graph.from_edges(16, es)
    s = EdgeSet.of(g, cyc(range(8)) + cyc(range(8, 12)) + cyc(range(12, 16)))
    log = []
    out = cx.absorb_pendant_4cycles(s, log)
    assert is_2vc(out)
    assert [r.rule for r in log] == ["pendant", "pendant"]
    assert min(log[0].added) < min(log[1].added)


def test_pendant_phase_identity():
    g = cycle_graph(7)
    s = EdgeSet(g, g.edges)
    assert cx.absorb_pendant_4cycles(s).edges == s.edges


# --- gluing -----------------------------------------------------------------------

def test_nice_cycle_on_c6():
    g = cycle_graph(6)
    p = Partition.of(6, [[0, 1, 2], [3, 4, 5]])
    n = nice_cycle(g, p)
    assert sorted(n.edges) == [(0, 5), (2, 3)]


def test_nice_cycle_on_k6():
    g = complete_graph(6)
    p = Partition.of(6, [[0, 1, 2], [3, 4, 5]])
    n = nice_cycle(g, p)
    assert len(n) == 2
    assert is_nice_cycle(g, p.parts, n.edges)
    a, b = n.edges
    assert not set(a) & set(b)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition.of(4, [[0, 1], [1, 2, 3]])
    with pytest.raises(ValueError):
        Partition.of(4, [[0, 1], []])
    with pytest.raises(ValueError):
        nice_cycle(cycle_graph(4), Partition.of(4, [[0, 1, 2, 3]]))


def test_glue_two_hexagons():
    es = cyc(range(6)) + cyc(range(6, 12)) + [(0, 6), (3, 9)]
    g = Graph.from_edges(12, es)
    s = EdgeSet.of(g, cyc(range(6)) + cyc(range(6, 12)))
    log = []
    out = glue_components(s, log)
    assert is_2vc(out) and len(out) == 14
    assert log[0].delta == 0


def test_glue_three_hexagons():
    es = cyc(range(6)) + cyc(range(6, 12)) + cyc(range(12, 18)) + [(0, 6), (9, 12), (15, 3)]
    g = Graph.from_edges(18, es)
    s = EdgeSet.of(g, cyc(range(6)) + cyc(range(6, 12)) + cyc(range(12, 18)))
    log = []
    out = glue_components(s, log)
    assert is_2vc(out) and len(out) == 21
    assert [r.delta for r in log] == [1]


def test_glue_identity_and_precondition():
    g = cycle_graph(6)
    s = EdgeSet(g, g.edges)
    assert glue_components(s).edges == s.edges
    g2 = Graph.from_edges(10, cyc(range(6)) + cyc(range(6, 10)) + [(0, 6), (3, 8)])
    with pytest.raises(InvariantError):
        glue_components(EdgeSet.of(g2, cyc(range(6)) + cyc(range(6, 10))))
