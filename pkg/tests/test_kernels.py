"""The compiled kernels against the pure-Python ones, result for result."""

import os
import random
import subprocess
import sys

import pytest
from hypothesis import given, settings

from conftest import graphs, random_graph
from twovcss import _pykernels as py
from twovcss import kernels
from twovcss.errors import BudgetExceeded
from twovcss.generators import random_2vc

c = pytest.importorskip("twovcss._ckernels")


def adj_of(g):
    return [list(a) for a in g.adj]


@settings(max_examples=300, deadline=None)
@given(graphs(min_n=1, max_n=12))
def test_articulation_points_agree(g):
    assert c.articulation_points(g.n, adj_of(g)) == py.articulation_points(g.n, adj_of(g))
    if g.n > 1:
        assert c.articulation_points(g.n, adj_of(g), 0) == py.articulation_points(g.n, adj_of(g), 0)


@settings(max_examples=300, deadline=None)
@given(graphs(min_n=1, max_n=12))
def test_max_matching_agree(g):
    mc = c.max_matching(g.n, adj_of(g))
    mp = py.max_matching(g.n, adj_of(g))
    assert list(mc) == list(mp)


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=3, max_n=10))
def test_two_vertex_cuts_agree(g):
    assert list(c.two_vertex_cuts(g.n, adj_of(g))) == list(py.two_vertex_cuts(g.n, adj_of(g)))


def test_exact_searches_agree():
    rng = random.Random(3)
    for seed in range(60):
        g = random_2vc(rng.randint(3, 8), seed)
        es = g.sorted_edges()
        assert list(c.exact_2vcss(g.n, es)) == list(py.exact_2vcss(g.n, es))
        assert list(c.exact_min_2edge_cover(g.n, es)) == list(py.exact_min_2edge_cover(g.n, es))


def test_node_limit_refuses():
    g = random_graph(random.Random(1), 10, 0.8)
    es = g.sorted_edges()
    with pytest.raises(BudgetExceeded):
        c.exact_min_2edge_cover(g.n, es, 1)
    with pytest.raises(BudgetExceeded):
        py.exact_min_2edge_cover(g.n, es, 1)


def test_backend_selection():
    assert kernels.BACKEND == "cython"
    env = dict(os.environ, TWOVCSS_FORCE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from twovcss import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
