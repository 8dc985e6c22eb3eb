"""Seeded instance families.

All randomness comes from ``random.Random(seed)`` (Mersenne Twister), whose
sequence is fixed across platforms and Python versions for the calls used
here (``random``, ``randrange``, ``shuffle``, ``sample``).
"""

from __future__ import annotations

import random
from typing import Callable, Dict, List, Optional, Set

from . import kernels
from .errors import BudgetExceeded
from .graph import Edge, Graph, edge, is_2vc
from .structure import is_structured

RETRY_CAP = 2000


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_2vc(n: int, seed=0, extra: Optional[float] = None) -> Graph:
    """Random open ear decomposition plus a few random chords."""
    if n < 3:
        raise ValueError("2VC graphs need at least 3 vertices")
    rng = _rng(seed)
    verts = list(range(n))
    rng.shuffle(verts)
    k = rng.randint(3, n)
    es: Set[Edge] = {edge(verts[i], verts[(i + 1) % k]) for i in range(k)}
    used = verts[:k]
    rest = verts[k:]
    while rest:
        a, b = rng.sample(used, 2)
        length = rng.randint(1, min(3, len(rest)))
        inner, rest = rest[:length], rest[length:]
        chain = [a] + inner + [b]
        es.update(edge(x, y) for x, y in zip(chain, chain[1:]))
        used += inner
    p = rng.random() * 0.35 if extra is None else extra
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                es.add(edge(u, v))
    return Graph.from_edges(n, es)


def hamiltonian_plus(n: int, seed=0, chords: Optional[int] = None) -> Graph:
    """Cycle 0..n-1 plus random chords; the cycle certifies opt = n."""
    rng = _rng(seed)
    es = {edge(i, (i + 1) % n) for i in range(n)}
    want = n // 2 if chords is None else chords
    cap = n * (n - 1) // 2
    while len(es) < min(cap, n + want):
        u, v = rng.sample(range(n), 2)
        es.add(edge(u, v))
    return Graph.from_edges(n, es)


def random_cubic(n: int, seed=0) -> Graph:
    """Random 2VC cubic graph from the configuration model (n even, >= 4)."""
    if n < 4 or n % 2:
        raise ValueError("cubic graphs need an even n >= 4")
    rng = _rng(seed)
    for _ in range(RETRY_CAP):
        stubs = [v for v in range(n) for _ in range(3)]
        rng.shuffle(stubs)
        es = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or edge(u, v) in es:
                ok = False
                break
            es.add(edge(u, v))
        if ok:
            g = Graph(n, frozenset(es))
            if is_2vc(g):
                return g
    raise BudgetExceeded("could not sample a simple 2VC cubic graph")


def _repair_edge(rng, g: Graph) -> Optional[Edge]:
    """A random new edge that breaks one obstruction to being structured.

    Cut vertex or 2-cut: join two of the pieces left after deleting it.
    Removable 5-cycle: give one of its degree-2 vertices a new neighbour.
    None if ``g`` is already 2VC and structured.
    """
    aps = kernels.articulation_points(g.n, [list(a) for a in g.adj])
    if aps:
        pieces = g.induced_components((rng.choice(sorted(aps)),))
    else:
        rep = is_structured(g)
        if rep.structured:
            return None
        if rep.violation == "removable":
            v = rng.choice(rep.witness.degree2_vertices)
            far = [w for w in range(g.n) if w != v and w not in rep.witness.cycle and not g.has_edge(v, w)]
            if not far:
                far = [w for w in range(g.n) if w != v and not g.has_edge(v, w)]
            return edge(v, rng.choice(far))
        u, v = rep.witness if rep.violation == "irrelevant" else rep.witness.pair
        pieces = g.induced_components((u, v))
    a, b = rng.sample(range(len(pieces)), 2)
    return edge(rng.choice(sorted(pieces[a])), rng.choice(sorted(pieces[b])))


def _complete(rng, n: int, base: Set[Edge]) -> Graph:
    """Add edges to ``base`` until the graph is 2VC and structured."""
    es = set(base)
    for _ in range(RETRY_CAP + n * n):
        e = _repair_edge(rng, Graph(n, frozenset(es)))
        if e is None:
            return Graph(n, frozenset(es))
        es.add(e)
    raise BudgetExceeded("generation retry cap reached")


def structured(n: int, seed=0) -> Graph:
    """Random 2VC graph, resampled until it is structured."""
    rng = _rng(seed)
    for _ in range(RETRY_CAP):
        g = random_2vc(n, rng)
        if is_structured(g):
            return g
    raise BudgetExceeded("generation retry cap reached")


def dumbbell(n: int = 12, seed=0) -> Graph:
    """Two 5-cycles joined by a bridge, plus edges making the graph structured."""
    if n < 10:
        raise ValueError("dumbbell needs n >= 10")
    rng = _rng(seed)
    base = {edge(i, (i + 1) % 5) for i in range(5)}
    base |= {edge(5 + i, 5 + (i + 1) % 5) for i in range(5)}
    base.add(edge(0, 5))
    for v in range(10, n):
        base.add(edge(v, rng.randrange(v)))
    return _complete(rng, n, base)


def pendant(n: int = 12, seed=0) -> Graph:
    """A 4-cycle whose outside neighbours all lie on one large cycle, structured."""
    if n < 10:
        raise ValueError("pendant needs n >= 10")
    rng = _rng(seed)
    host = n - 4
    base = {edge(i, (i + 1) % host) for i in range(host)}
    base |= {edge(host + i, host + (i + 1) % 4) for i in range(4)}
    for i, v in enumerate(rng.sample(range(host), 3)):
        base.add(edge(host + i, v))
    return _complete(rng, n, base)


FAMILIES: Dict[str, Callable[..., Graph]] = {
    "random-2vc": random_2vc,
    "structured": structured,
    "dumbbell": dumbbell,
    "pendant": pendant,
    "hamiltonian-plus": hamiltonian_plus,
    "cubic": random_cubic,
}


def generate(kind: str, n: int, seed: int = 0) -> Graph:
    try:
        fn = FAMILIES[kind]
    except KeyError:
        raise ValueError(f"unknown family {kind!r}; choose from {', '.join(FAMILIES)}") from None
    return fn(n, seed)
