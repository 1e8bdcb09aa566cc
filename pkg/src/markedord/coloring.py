"""Extensions of partial graph colorings and their reciprocity.

The orientation machinery works on the suspension of the graph: two extra
vertices wired to every vertex, carrying colors 0 and m + 1.  Each acyclic
orientation then defines a poset on which proper extensions are exactly the
strict order preserving extensions of the partial coloring.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .errors import CycleError, InvalidGraph, PaletteTooSmall, UnknownLabel
from .marked import Marking, count_strict_extensions
from .polynomial import MultiPoly, interpolate_univariate
from .poset import Poset

BOTTOM = ("suspension", 0)
TOP = ("suspension", 1)


@dataclass(frozen=True)
class Graph:
    vertices: tuple
    edges: tuple

    def __post_init__(self):
        verts = tuple(self.vertices)
        if len(set(verts)) != len(verts):
            raise InvalidGraph(message="duplicate vertex")
        pos = {v: i for i, v in enumerate(verts)}
        seen = []
        for e in self.edges:
            u, v = tuple(e)
            if u not in pos:
                raise UnknownLabel(u)
            if v not in pos:
                raise UnknownLabel(v)
            if u == v:
                raise InvalidGraph(u, v, message="loop")
            edge = (u, v) if pos[u] < pos[v] else (v, u)
            if edge in seen:
                raise InvalidGraph(u, v, message="multi-edge")
            seen.append(edge)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple(seen))

    def adjacent(self, u, v):
        return (u, v) in self.edges or (v, u) in self.edges

    def to_dict(self):
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges]}


@dataclass(frozen=True)
class PartialColoring:
    k: int
    colors: dict = field(hash=False)

    def __post_init__(self):
        for a, col in self.colors.items():
            if not 1 <= col <= self.k:
                raise PaletteTooSmall(a, col, message=f"color {col} of {a!r} outside [1, {self.k}]")

    def classes(self):
        out = {}
        for a, col in self.colors.items():
            out.setdefault(col, []).append(a)
        return out

    def to_dict(self):
        return {"k": self.k, "colors": dict(self.colors)}


def _check(g, c, m=None):
    for a in c.colors:
        if a not in g.vertices:
            raise UnknownLabel(a)
    if m is not None and m < c.k:
        raise PaletteTooSmall(m, c.k)


def count_proper_extensions(g, c, m):
    """Brute-force count of proper m-colorings agreeing with c on its domain."""
    _check(g, c, m)
    color = dict(c.colors)
    for u, v in g.edges:
        if u in color and v in color and color[u] == color[v]:
            return 0
    free = [v for v in g.vertices if v not in color]
    nbrs = {v: [u for e in g.edges for u in e if v in e and u != v] for v in g.vertices}

    def rec(i):
        if i == len(free):
            return 1
        v = free[i]
        taken = {color[u] for u in nbrs[v] if u in color}
        total = 0
        for col in range(1, m + 1):
            if col not in taken:
                color[v] = col
                total += rec(i + 1)
                del color[v]
        return total

    return rec(0)


def contract_equal_colors(g, c):
    """Identify equal-colored marked vertices; None if two of them are adjacent.

    Merged vertices are labelled by the tuple of their original labels.
    """
    _check(g, c)
    classes = c.classes()
    label = {v: v for v in g.vertices}
    for col, members in classes.items():
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                if g.adjacent(a, b):
                    return None
        if len(members) > 1:
            merged = tuple(members)
            for a in members:
                label[a] = merged
    vertices = list(dict.fromkeys(label[v] for v in g.vertices))
    edges = []
    for u, v in g.edges:
        e = (label[u], label[v])
        if e not in edges and e[::-1] not in edges:
            edges.append(e)
    colors = {}
    for a, col in c.colors.items():
        colors[label[a]] = col
    return Graph(tuple(vertices), tuple(edges)), PartialColoring(c.k, colors)


def chi_polynomial(g, c, var="m"):
    """The extension polynomial, or None when no proper extension can exist."""
    _check(g, c)
    reduced = contract_equal_colors(g, c)
    if reduced is None:
        return None
    d = len(g.vertices) - len(c.colors)
    start = max(c.k, 0)
    pts = [(m, count_proper_extensions(g, c, m)) for m in range(start, start + d + 1)]
    poly = interpolate_univariate(pts, var=var)
    return None if poly.is_zero() else poly


def _reachability(vertices, arcs):
    """Reachability sets (reflexive) of a digraph, or None if it has a cycle."""
    succ = {v: [] for v in vertices}
    for u, v in arcs:
        succ[u].append(v)
    reach = {}
    state = {}

    def visit(v):
        state[v] = 1
        acc = {v}
        for w in succ[v]:
            s = state.get(w)
            if s == 1:
                return False
            if s is None and not visit(w):
                return False
            acc |= reach[w]
        reach[v] = acc
        state[v] = 2
        return True

    for v in vertices:
        if v not in state and not visit(v):
            return None
    return reach


def _orientations(edges):
    for flips in product((False, True), repeat=len(edges)):
        yield [(v, u) if f else (u, v) for (u, v), f in zip(edges, flips)]


def acyclic_orientations(g):
    for arcs in _orientations(g.edges):
        reach = _reachability(g.vertices, arcs)
        if reach is not None:
            yield arcs, reach


def orientation_sum_count(g, c, m):
    """Proper extensions counted as strict extensions over oriented suspensions."""
    _check(g, c, m)
    reduced = contract_equal_colors(g, c)
    if reduced is None:
        return 0
    g, c = reduced
    if BOTTOM in g.vertices or TOP in g.vertices:
        raise InvalidGraph(message="vertex label collides with suspension vertices")
    verts = (BOTTOM,) + g.vertices + (TOP,)
    fixed = [(BOTTOM, v) for v in g.vertices] + [(v, TOP) for v in g.vertices]
    values = {BOTTOM: 0, TOP: m + 1, **c.colors}
    total = 0
    for arcs in _orientations(g.edges):
        all_arcs = fixed + arcs
        reach = _reachability(verts, all_arcs)
        if reach is None:
            continue
        if any(b in reach[a] and values[a] > values[b] for a in values for b in values):
            continue
        try:
            P = Poset(verts, all_arcs)
        except CycleError:
            continue
        total += count_strict_extensions(Marking(P, values))
    return total


def _class_paths_ok(reach, classes):
    for members in classes:
        for a in members:
            for b in members:
                if a != b and b in reach[a]:
                    return False
    return True


def reciprocity_pairs(g, c, m):
    """Pairs (coloring extending c, weakly compatible acyclic orientation)."""
    _check(g, c, m)
    classes = [ms for ms in c.classes().values() if len(ms) > 1]
    free = [v for v in g.vertices if v not in c.colors]

    @lru_cache(maxsize=None)
    def orientations_for(forced, loose):
        count = 0
        for arcs in _orientations(list(loose)):
            reach = _reachability(g.vertices, list(forced) + arcs)
            if reach is not None and _class_paths_ok(reach, classes):
                count += 1
        return count

    total = 0
    for cols in product(range(1, m + 1), repeat=len(free)):
        color = dict(c.colors)
        color.update(zip(free, cols))
        forced, loose = [], []
        for u, v in g.edges:
            if color[u] < color[v]:
                forced.append((u, v))
            elif color[u] > color[v]:
                forced.append((v, u))
            else:
                loose.append((u, v))
        total += orientations_for(tuple(forced), tuple(loose))
    return total


def constrained_acyclic_count(g, c):
    """Acyclic orientations with no path a -> b for marked a != b, c(a) >= c(b)."""
    _check(g, c)
    colors = c.colors
    count = 0
    for _, reach in acyclic_orientations(g):
        if any(b in reach[a] and colors[a] >= colors[b]
               for a in colors for b in colors if a != b):
            continue
        count += 1
    return count


def chromatic_polynomial(g, var="m"):
    """Deletion-contraction, kept independent of the extension machinery."""
    x = MultiPoly.var(var)

    @lru_cache(maxsize=None)
    def rec(n, edges):
        if not edges:
            return x ** n
        (u, v), rest = edges[0], edges[1:]
        deleted = rec(n, rest)
        # contract v into u and relabel vertices 0..n-2
        relabel = lambda w: u if w == v else (w - 1 if w > v else w)
        merged = set()
        for a, b in rest:
            a, b = relabel(a), relabel(b)
            if a != b:
                merged.add((min(a, b), max(a, b)))
        return deleted - rec(n - 1, tuple(sorted(merged)))

    pos = {v: i for i, v in enumerate(g.vertices)}
    edges = tuple(sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in g.edges))
    return rec(len(g.vertices), edges)
