"""Finite posets stored by Hasse diagram plus a transitive-closure bitmatrix.

Element order in the constructor fixes every iteration order downstream, so
all enumerations here are deterministic.  Subsets of a poset (ideals, blocks,
components) are handled internally as integer bitmasks over element indices.
"""

import logging
from dataclasses import dataclass
from functools import cached_property

from .errors import CycleError, NotAFacePartition, UnknownLabel

log = logging.getLogger(__name__)


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """A finite poset given by labels and cover relations.

    Transitive input covers are dropped and recorded in ``stripped``.
    """

    def __init__(self, elements, covers=()):
        elements = tuple(elements)
        index = {}
        for i, x in enumerate(elements):
            if x in index:
                raise UnknownLabel(x, message=f"duplicate label {x!r}")
            index[x] = i
        n = len(elements)
        succ = [0] * n
        for lo, hi in covers:
            if lo not in index:
                raise UnknownLabel(lo)
            if hi not in index:
                raise UnknownLabel(hi)
            if lo == hi:
                raise CycleError(lo, hi)
            succ[index[lo]] |= 1 << index[hi]

        order = self._toposort(elements, succ)
        up = [0] * n
        for i in reversed(order):
            acc = 1 << i
            for j in _bits(succ[i]):
                acc |= up[j]
            up[i] = acc
        down = [0] * n
        for i in range(n):
            for j in _bits(up[i]):
                down[j] |= 1 << i

        kept, stripped = [], []
        seen = set()
        for lo, hi in covers:
            if (lo, hi) in seen:
                continue
            seen.add((lo, hi))
            i, j = index[lo], index[hi]
            between = (up[i] & down[j]) & ~((1 << i) | (1 << j))
            (stripped if between else kept).append((lo, hi))
        if stripped:
            log.info("stripped transitive covers: %s", stripped)

        self.elements = elements
        self.covers = tuple(kept)
        self.stripped = tuple(stripped)
        self._index = index
        self._up = tuple(up)
        self._down = tuple(down)
        self._order = tuple(order)

    @staticmethod
    def _toposort(elements, succ):
        n = len(elements)
        indeg = [0] * n
        for i in range(n):
            for j in _bits(succ[i]):
                indeg[j] += 1
        ready = [i for i in range(n) if indeg[i] == 0]
        order = []
        while ready:
            # smallest input index first keeps the linear extension canonical
            ready.sort()
            i = ready.pop(0)
            order.append(i)
            for j in _bits(succ[i]):
                indeg[j] -= 1
                if indeg[j] == 0:
                    ready.append(j)
        if len(order) != n:
            stuck = [elements[i] for i in range(n) if indeg[i] > 0]
            raise CycleError(*stuck)
        return order

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self._index

    def __repr__(self):
        return f"Poset({list(self.elements)!r}, {list(self.covers)!r})"

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and set(self.covers) == set(other.covers)

    def __hash__(self):
        return hash((self.elements, frozenset(self.covers)))

    def index(self, x):
        try:
            return self._index[x]
        except KeyError:
            raise UnknownLabel(x) from None

    def leq(self, p, q):
        return bool(self._up[self.index(p)] >> self.index(q) & 1)

    def lt(self, p, q):
        return p != q and self.leq(p, q)

    def comparable(self, p, q):
        return self.leq(p, q) or self.leq(q, p)

    # bitmask helpers -------------------------------------------------
    @property
    def full_mask(self):
        return (1 << len(self.elements)) - 1

    def mask(self, labels):
        m = 0
        for x in labels:
            m |= 1 << self.index(x)
        return m

    def labels(self, mask):
        return [self.elements[i] for i in _bits(mask)]

    def up_mask(self, x):
        return self._up[self.index(x)]

    def down_mask(self, x):
        return self._down[self.index(x)]

    def up_set(self, x):
        return frozenset(self.labels(self.up_mask(x)))

    def down_set(self, x):
        return frozenset(self.labels(self.down_mask(x)))

    def interval(self, p, q):
        return frozenset(self.labels(self.up_mask(p) & self.down_mask(q)))

    def minimal(self):
        return [x for i, x in enumerate(self.elements) if self._down[i] == 1 << i]

    def maximal(self):
        return [x for i, x in enumerate(self.elements) if self._up[i] == 1 << i]

    def linear_extension(self):
        return [self.elements[i] for i in self._order]

    def lower_covers(self, x):
        return [lo for lo, hi in self.covers if hi == x]

    def upper_covers(self, x):
        return [hi for lo, hi in self.covers if lo == x]

    def is_chain(self, labels):
        labels = list(labels)
        return all(self.comparable(p, q) for i, p in enumerate(labels) for q in labels[i + 1:])

    def is_ideal_mask(self, mask):
        return all(self._down[i] & ~mask == 0 for i in _bits(mask))

    def subposet(self, labels):
        """Induced subposet on ``labels`` (kept in this poset's element order)."""
        keep = self.mask(labels)
        elems = self.labels(keep)
        rel = [(p, q) for p in elems for q in elems if p != q and self.leq(p, q)]
        return Poset(elems, rel)

    @cached_property
    def ideal_masks(self):
        """All order ideals as bitmasks, sorted by size then mask value."""
        strict_down = [self._down[i] & ~(1 << i) for i in range(len(self.elements))]
        found = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for ideal in frontier:
                for i in range(len(self.elements)):
                    b = 1 << i
                    if not ideal & b and strict_down[i] & ~ideal == 0:
                        new = ideal | b
                        if new not in found:
                            found.add(new)
                            nxt.append(new)
            frontier = nxt
        return tuple(sorted(found, key=lambda m: (bin(m).count("1"), m)))

    def to_dict(self):
        return {"elements": list(self.elements), "covers": [list(c) for c in self.covers]}


def build_poset(labels, covers=()):
    """Validate and build a poset; transitive covers are stripped and logged."""
    return Poset(labels, [tuple(c) for c in covers])


def leq(P, p, q):
    return P.leq(p, q)


@dataclass(frozen=True)
class IdealChain:
    """I_0 < I_1 < ... < I_k = P, stored as frozensets of labels."""

    ideals: tuple

    @property
    def blocks(self):
        prev = frozenset()
        out = []
        for ideal in self.ideals:
            out.append(ideal - prev)
            prev = ideal
        return out

    def index_of(self, a):
        for j, ideal in enumerate(self.ideals):
            if a in ideal:
                return j
        raise UnknownLabel(a)

    def __len__(self):
        return len(self.ideals)


def _chain_from_masks(P, masks):
    return IdealChain(tuple(frozenset(P.labels(m)) for m in masks))


def enumerate_ideal_chains(P, max_len=None):
    """Yield every chain of order ideals ending at P, depth first.

    Chains are emitted in a fixed order determined by the element order of P.
    ``max_len`` bounds the number of ideals in a chain.
    """
    ideals = P.ideal_masks
    full = P.full_mask
    if not P.elements:
        return

    def extend(prefix, current):
        if current == full:
            yield _chain_from_masks(P, prefix)
            return
        if max_len is not None and len(prefix) >= max_len:
            return
        for nxt in ideals:
            if nxt != current and nxt & current == current:
                prefix.append(nxt)
                yield from extend(prefix, nxt)
                prefix.pop()

    yield from extend([], 0)


def count_linear_extensions(P):
    """Backtracking count, independent of the ideal machinery."""
    n = len(P)
    preds = [P.down_mask(x) & ~(1 << i) for i, x in enumerate(P.elements)]
    memo = {}

    def rec(placed):
        if placed == (1 << n) - 1:
            return 1
        if placed in memo:
            return memo[placed]
        total = 0
        for i in range(n):
            if not placed >> i & 1 and preds[i] & ~placed == 0:
                total += rec(placed | 1 << i)
        memo[placed] = total
        return total

    return rec(0)


# face partitions -------------------------------------------------------

def _check_covers(P, covers):
    allowed = set(P.covers)
    covers = [tuple(c) for c in covers]
    for c in covers:
        if c not in allowed:
            raise NotAFacePartition(*c, message=f"{c!r} is not a cover relation of P")
    return covers


def _components(P, covers):
    parent = list(range(len(P)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for lo, hi in covers:
        a, b = find(P.index(lo)), find(P.index(hi))
        if a != b:
            parent[max(a, b)] = min(a, b)
    return [find(i) for i in range(len(P))]


def is_face_partition(P, covers):
    """Interval criterion for a set of cover relations G.

    Read ``p <=_G q`` as "every map constant on the components of G and order
    preserving on P has phi(p) <= phi(q)", i.e. reachability in P with free
    moves inside a component.  Whenever p <= q in P and also q <=_G p, the
    interval [p, q]_P must sit inside one component with all of its cover
    relations in G.
    """
    covers = _check_covers(P, covers)
    inside = set(covers)
    comp = _components(P, covers)
    roots = sorted(set(comp))
    succ = {r: set() for r in roots}
    for lo, hi in P.covers:
        a, b = comp[P.index(lo)], comp[P.index(hi)]
        if a != b:
            succ[a].add(b)
    reach = {}
    for r in roots:
        seen, stack = {r}, [r]
        while stack:
            for w in succ[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        reach[r] = seen
    n = len(P)
    for p in range(n):
        for q in _bits(P._up[p] & ~(1 << p)):
            if comp[p] not in reach[comp[q]]:
                continue
            interval = P._up[p] & P._down[q]
            if any(comp[r] != comp[p] for r in _bits(interval)):
                return False
            for lo, hi in P.covers:
                i, j = P.index(lo), P.index(hi)
                if interval >> i & 1 and interval >> j & 1 and (lo, hi) not in inside:
                    return False
    return True


def contraction_is_acyclic(P, covers):
    """The other characterization: contracting G in the Hasse diagram is acyclic."""
    covers = _check_covers(P, covers)
    comp = _components(P, covers)
    inside = set(covers)
    succ = {}
    for lo, hi in P.covers:
        if (lo, hi) in inside:
            continue
        a, b = comp[P.index(lo)], comp[P.index(hi)]
        if a == b:
            return False
        succ.setdefault(a, set()).add(b)
    state = {}

    def visit(v):
        state[v] = 1
        for w in succ.get(v, ()):
            s = state.get(w)
            if s == 1 or (s is None and not visit(w)):
                return False
        state[v] = 2
        return True

    return all(state.get(v) == 2 or visit(v) for v in set(comp))


def quotient(P, covers):
    """Contract the components of a face partition.

    Returns ``(P/G, mapping)``.  A singleton class keeps its label; larger
    classes are labelled by the tuple of their members in P's order.
    """
    covers = _check_covers(P, covers)
    if not is_face_partition(P, covers) or not contraction_is_acyclic(P, covers):
        raise NotAFacePartition(*covers)
    comp = _components(P, covers)
    members = {}
    for i, root in enumerate(comp):
        members.setdefault(root, []).append(P.elements[i])
    label_of_root = {
        root: (ms[0] if len(ms) == 1 else tuple(ms)) for root, ms in members.items()
    }
    roots = sorted(members, key=lambda r: min(P.index(x) for x in members[r]))
    new_labels = [label_of_root[r] for r in roots]
    edges = []
    for lo, hi in P.covers:
        a, b = comp[P.index(lo)], comp[P.index(hi)]
        if a != b:
            edges.append((label_of_root[a], label_of_root[b]))
    Q = Poset(new_labels, list(dict.fromkeys(edges)))
    mapping = {x: label_of_root[comp[i]] for i, x in enumerate(P.elements)}
    return Q, mapping
