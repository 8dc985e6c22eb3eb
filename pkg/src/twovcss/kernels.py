"""Kernel selection.

The compiled ``_ckernels`` module is used when it imports cleanly and the
environment variable ``TWOVCSS_FORCE_PYTHON`` is unset or ``0``.  ``BACKEND``
names the choice.  Exact searches over more than 64 edges always run in
Python, since the compiled version packs edge sets into 64-bit words, and
so does any search given a wall-clock deadline.
"""

import os

from . import _pykernels as _py

BACKEND = "python"
_c = None
if os.environ.get("TWOVCSS_FORCE_PYTHON", "0") in ("", "0"):
    try:
        from . import _ckernels as _c

        BACKEND = "cython"
    except ImportError:  # extension not built
        _c = None

_impl = _c if _c is not None else _py

articulation_points = _impl.articulation_points
two_vertex_cuts = _impl.two_vertex_cuts
max_matching = _impl.max_matching
exact_max_matching = _py.exact_max_matching


def exact_2vcss(n, edges, node_limit=2_000_000, deadline=None):
    if _c is not None and len(edges) <= 64 and deadline is None:
        return _c.exact_2vcss(n, edges, node_limit)
    return _py.exact_2vcss(n, edges, node_limit, deadline)


def exact_min_2edge_cover(n, edges, node_limit=2_000_000, deadline=None):
    if _c is not None and len(edges) <= 64 and deadline is None:
        return _c.exact_min_2edge_cover(n, edges, node_limit)
    return _py.exact_min_2edge_cover(n, edges, node_limit, deadline)
