"""Seeded random instances used by the test suite and ``markedord corpus``."""

import random

from .coloring import Graph, PartialColoring
from .marked import Marking
from .poset import build_poset


def random_poset(rng, max_size=7, density=None):
    n = rng.randint(1, max_size)
    density = rng.uniform(0.15, 0.6) if density is None else density
    labels = [f"x{i}" for i in range(1, n + 1)]
    hidden = labels[:]
    rng.shuffle(hidden)
    covers = [
        (hidden[i], hidden[j])
        for i in range(n) for j in range(i + 1, n)
        if rng.random() < density
    ]
    return build_poset(labels, covers)


def random_marked_set(rng, P, extra=0.3):
    forced = set(P.minimal()) | set(P.maximal())
    return [x for x in P.elements if x in forced or rng.random() < extra]


def random_values(rng, P, A, lo=-3, hi=5, max_step=4):
    """Order preserving integer values on A within [lo, hi]."""
    A = set(A)
    values = {}
    for x in P.linear_extension():
        if x not in A:
            continue
        floor = max([values[a] for a in values if P.leq(a, x)] + [lo])
        values[x] = rng.randint(floor, min(hi, floor + max_step))
    return values


def random_marking(rng, max_size=7, lo=-3, hi=5):
    P = random_poset(rng, max_size)
    A = random_marked_set(rng, P)
    return Marking(P, random_values(rng, P, A, lo, hi))


def marking_corpus(seed=0, count=200, max_size=7, lo=-3, hi=5):
    rng = random.Random(seed)
    return [random_marking(rng, max_size, lo, hi) for _ in range(count)]


def random_graph(rng, max_vertices=5):
    n = rng.randint(1, max_vertices)
    verts = tuple(f"v{i}" for i in range(1, n + 1))
    p = rng.uniform(0.2, 0.8)
    edges = tuple((verts[i], verts[j]) for i in range(n) for j in range(i + 1, n)
                  if rng.random() < p)
    return Graph(verts, edges)


def random_partial_coloring(rng, g, max_k=3):
    k = rng.randint(1, max_k)
    A = [v for v in g.vertices if rng.random() < 0.4]
    return PartialColoring(k, {a: rng.randint(1, k) for a in A})


def coloring_corpus(seed=0, count=100, max_vertices=5, max_k=3):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        g = random_graph(rng, max_vertices)
        out.append((g, random_partial_coloring(rng, g, max_k)))
    return out
