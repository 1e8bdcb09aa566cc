"""Lattice points of marked order polytopes.

Counting goes through the canonical subdivision: every integer extension of a
marking has a unique chain of level-set ideals, and the extensions sharing a
chain are strictly increasing block values squeezed between marker values.
For a chain whose j-th marker gap has ``d_j`` marker-free blocks and width
``D_j`` the contribution is the product of ``C(D_j - 1, d_j)``.  So both the
numeric count and the per-cell polynomial only need the multiset of gap
profiles ``(d_0, ..., d_{r-1})`` over compatible chains.
"""

from collections import Counter
from dataclasses import dataclass, field
from math import comb

from .errors import (
    InvalidCell,
    MissingExtremes,
    NotAChain,
    NotAFacePartition,
    NotOrderPreserving,
    UnknownLabel,
)
from .polynomial import LinForm, MultiPoly, interpolate_univariate, rising_binomial
from .poset import IdealChain, _bits, _components, is_face_partition

CellSignature = IdealChain


@dataclass(frozen=True)
class Marking:
    """A poset P, marked elements A and integer values on A."""

    poset: object
    values: dict = field(hash=False)

    @property
    def marked(self):
        return [x for x in self.poset.elements if x in self.values]

    def __post_init__(self):
        for a in self.values:
            if a not in self.poset:
                raise UnknownLabel(a)
        object.__setattr__(self, "values", {a: int(v) for a, v in self.values.items()})

    def negated(self):
        return Marking(self.poset, {a: -v for a, v in self.values.items()})

    def scaled(self, n):
        return Marking(self.poset, {a: n * v for a, v in self.values.items()})

    def to_dict(self):
        return {
            "poset": self.poset.to_dict(),
            "marked": list(self.marked),
            "values": {a: self.values[a] for a in self.marked},
        }


def check_extremes(P, A):
    A = set(A)
    for x in P.elements:
        if x not in A and (x in P.minimal() or x in P.maximal()):
            raise MissingExtremes(x)


def validate(m):
    """Raise MissingExtremes / NotOrderPreserving, otherwise return None."""
    P = m.poset
    check_extremes(P, m.values)
    marked = m.marked
    for a in marked:
        for b in marked:
            if a != b and P.leq(a, b) and m.values[a] > m.values[b]:
                raise NotOrderPreserving(a, b)


# compatible chains -------------------------------------------------------

def _cell_blocks(P, A, cell):
    """Normalize and check a cell: a list of disjoint marker blocks."""
    if isinstance(cell, IdealChain):
        blocks = [frozenset(b) for b in cell.blocks]
    else:
        blocks = [frozenset(b) for b in cell]
    A = set(A)
    seen = set()
    for b in blocks:
        if not b or b & seen or not b <= A:
            raise InvalidCell(*sorted(map(str, b)))
        seen |= b
    if seen != A:
        raise InvalidCell(*sorted(map(str, A - seen)))
    # every prefix must be an order ideal of the induced order on A
    before = set()
    for b in blocks:
        for x in b:
            for y in A:
                if y != x and P.leq(y, x) and y not in before and y not in b:
                    raise InvalidCell(y, x)
        before |= b
    return blocks


def gap_profiles(P, blocks):
    """Counter of gap profiles over chains of ideals of P compatible with ``blocks``.

    A profile is the tuple of marker-free block counts between consecutive
    marker blocks.  Marker blocks must hold exactly one cell block each, in
    order.
    """
    cell_masks = [P.mask(b) for b in blocks]
    a_mask = 0
    for cm in cell_masks:
        a_mask |= cm
    ncell = len(cell_masks)
    full = P.full_mask
    ideals = P.ideal_masks
    memo = {}

    def rec(cur, c):
        key = (cur, c)
        if key in memo:
            return memo[key]
        out = Counter()
        if cur == full:
            if c == ncell:
                out[(0,)] = 1
            memo[key] = out
            return out
        for nxt in ideals:
            if nxt == cur or nxt & cur != cur:
                continue
            block = nxt & ~cur
            mb = block & a_mask
            if mb == 0:
                if 1 <= c < ncell:
                    for prof, mult in rec(nxt, c).items():
                        out[(prof[0] + 1,) + prof[1:]] += mult
            elif c < ncell and mb == cell_masks[c]:
                for prof, mult in rec(nxt, c + 1).items():
                    out[(0,) + prof] += mult
        memo[key] = out
        return out

    result = Counter()
    for prof, mult in rec(0, 0).items():
        # prof = (lead, d_0, ..., d_{r-1}, tail); lead/tail are forced to 0
        if prof[0] == 0 and prof[-1] == 0:
            result[prof[1:-1]] += mult
    return result


def cell_of(m):
    """Chain of ideals of A given by the level sets of the marking."""
    validate(m)
    levels = sorted(set(m.values.values()))
    marked = m.marked
    ideals, acc = [], set()
    for t in levels:
        acc |= {a for a in marked if m.values[a] == t}
        ideals.append(frozenset(acc))
    return IdealChain(tuple(ideals))


def _level_values(m, blocks):
    return [m.values[next(iter(b))] for b in blocks]


def count_extensions(m):
    """Number of integer points in the marked order polytope."""
    validate(m)
    blocks = cell_of(m).blocks
    vals = _level_values(m, blocks)
    total = 0
    for prof, mult in gap_profiles(m.poset, blocks).items():
        term = mult
        for j, d in enumerate(prof):
            term *= comb(vals[j + 1] - vals[j] - 1, d)
            if not term:
                break
        total += term
    return total


def _bounds(m):
    P = m.poset
    lows, highs = {}, {}
    for x in P.elements:
        lows[x] = {v for a, v in m.values.items() if P.leq(a, x)}
        highs[x] = {v for b, v in m.values.items() if P.leq(x, b)}
    return lows, highs


def _extensions(m, strict=False):
    """Yield-free counter over integer extensions along a linear extension."""
    P = m.poset
    lows, highs = _bounds(m)
    order = [x for x in P.linear_extension() if x not in m.values]
    lower_covers = {x: P.lower_covers(x) for x in P.elements}
    value = dict(m.values)

    def ok_strict(x, v):
        # equality along x's lower covers must be excused by equal markers
        for q in lower_covers[x]:
            if value[q] == v and not (v in lows[q] and v in highs[x]):
                return False
        return True

    def rec(i):
        if i == len(order):
            if strict:
                for x in m.values:
                    if not ok_strict(x, value[x]):
                        return 0
            return 1
        x = order[i]
        lo = max([value[q] for q in lower_covers[x]] + [max(lows[x])])
        hi = min(highs[x])
        total = 0
        for v in range(lo, hi + 1):
            if strict and not ok_strict(x, v):
                continue
            value[x] = v
            total += rec(i + 1)
        value.pop(x, None)
        return total

    return rec(0)


def count_extensions_bruteforce(m):
    """Definitional oracle: enumerate every integer extension."""
    validate(m)
    return _extensions(m)


def count_strict_extensions(m):
    """Extensions whose equalities along p < q sit between equal markers."""
    validate(m)
    return _extensions(m, strict=True)


def dimension(m):
    validate(m)
    lows, highs = _bounds(m)
    return sum(1 for x in m.poset.elements if not lows[x] & highs[x])


def symbolic_polynomial(P, A, cell, names=None):
    """Polynomial in one variable per marker, valid on the relative interior of ``cell``.

    ``names`` optionally maps marker labels to variable names; by default the
    labels themselves are the variables.
    """
    A = [x for x in P.elements if x in set(A)]
    check_extremes(P, A)
    blocks = _cell_blocks(P, A, cell)
    names = names or {}
    variables = tuple(names.get(a, a) for a in A)
    reps = [names.get(min(b, key=P.index), min(b, key=P.index)) for b in blocks]
    factor_cache = {}

    def factor(j, d):
        key = (j, d)
        if key not in factor_cache:
            # C(D - 1, d) with D = x_{j+1} - x_j, written as C(t + d, d)
            t = LinForm({reps[j + 1]: 1, reps[j]: -1}, -1 - d)
            factor_cache[key] = rising_binomial(t, d, variables)
        return factor_cache[key]

    result = MultiPoly.zero(variables)
    for prof, mult in sorted(gap_profiles(P, blocks).items()):
        term = MultiPoly.constant(mult, variables)
        for j, d in enumerate(prof):
            if d:
                term = term * factor(j, d)
        result = result + term
    return result


def reciprocity_count(m):
    """(-1)^dim times the cell polynomial of m evaluated at -m."""
    validate(m)
    poly = symbolic_polynomial(m.poset, m.marked, cell_of(m))
    value = poly.eval({a: -v for a, v in m.values.items()})
    assert value.denominator == 1
    sign = -1 if dimension(m) % 2 else 1
    return sign * int(value)


def count_chain_polytope_points(m):
    """Integer points of the marked chain polytope, by pruned enumeration."""
    validate(m)
    P = m.poset
    A = m.marked
    lam = m.values
    order = P.linear_extension()
    lower_covers = {x: P.lower_covers(x) for x in P.elements}
    # cap[a][x]: budget for chains from a up to x, i.e. min over markers b >= x
    cap = {}
    for a in A:
        for x in P.elements:
            if P.leq(a, x):
                above = [lam[b] - lam[a] for b in A if P.leq(x, b)]
                cap[a, x] = min(above)
    span = max(lam.values()) - min(lam.values())
    weight = {}
    best = {}

    def rec(i):
        if i == len(order):
            return 1
        x = order[i]
        choices = [0] if x in lam else range(0, span + 1)
        total = 0
        for v in choices:
            ok = True
            new = {}
            for a in A:
                if (a, x) not in cap:
                    continue
                prev = max((best[a, q] for q in lower_covers[x] if (a, q) in best), default=0)
                w = prev + v
                if w > cap[a, x]:
                    ok = False
                    break
                new[a, x] = w
            if not ok:
                # weights only grow with v
                break
            weight[x] = v
            best.update(new)
            total += rec(i + 1)
            for k in new:
                del best[k]
        return total

    return rec(0)


def mu_coords(m):
    """Minkowski coordinates of a marking on a chain: value of a_0, then gaps."""
    P = m.poset
    A = m.marked
    if not P.is_chain(A):
        raise NotAChain(*A)
    chain = sorted(A, key=lambda a: len(P.down_set(a)))
    vals = [m.values[a] for a in chain]
    return [vals[0]] + [vals[i] - vals[i - 1] for i in range(1, len(vals))]


def _sorted_chain(P, A):
    A = list(A)
    if not P.is_chain(A):
        raise NotAChain(*A)
    return sorted(A, key=lambda a: len(P.down_set(a)))


def mu_degrees(P, A, cell=None):
    """Degrees of the strict-cell polynomial in each gap coordinate mu_1..mu_k."""
    chain = _sorted_chain(P, A)
    if cell is None:
        cell = [[a] for a in chain]
    blocks = _cell_blocks(P, chain, cell)
    if any(len(b) != 1 for b in blocks):
        raise InvalidCell(message="mu-degrees need the strictly increasing cell")
    poly = symbolic_polynomial(P, chain, blocks)
    mus = [f"mu{i}" for i in range(len(chain))]
    subst = {}
    acc = MultiPoly.zero(tuple(mus))
    for i, a in enumerate(chain):
        acc = acc + MultiPoly.var(mus[i], mus)
        subst[a] = acc
    f = poly.substitute(subst).with_variables(mus)
    return [f.degree_in(mus[i]) for i in range(1, len(chain))]


def mu_degree_formula(P, A):
    """|P minus (down-set of a_{i-1} union up-set of a_i)| for i = 1..k."""
    chain = _sorted_chain(P, A)
    out = []
    for i in range(1, len(chain)):
        covered = P.down_set(chain[i - 1]) | P.up_set(chain[i])
        out.append(len(P) - len(covered))
    return out


def check_compatible_face_partition(m, covers):
    """Does Ext(lambda) meet the face of G in its relative interior?"""
    validate(m)
    P = m.poset
    covers = [tuple(c) for c in covers]
    if not is_face_partition(P, covers):
        raise NotAFacePartition(*covers)
    comp = _components(P, covers)
    members = {}
    for i, r in enumerate(comp):
        members[r] = members.get(r, 0) | (1 << i)
    down_hull, up_hull = {}, {}
    for r, mask in members.items():
        d = u = 0
        for i in _bits(mask):
            d |= P._down[i]
            u |= P._up[i]
        down_hull[r], up_hull[r] = d, u
    A = m.marked
    for a in A:
        ra = comp[P.index(a)]
        for b in A:
            rb = comp[P.index(b)]
            if m.values[a] < m.values[b]:
                if down_hull[ra] & up_hull[rb]:
                    return False
            elif m.values[a] == m.values[b] and a != b and P.comparable(a, b):
                if ra != rb:
                    return False
    return True


def ehrhart_in_dilation(m, samples=None):
    """Interpolate n -> count_extensions(n * m) over n = 1..dim+2."""
    d = dimension(m)
    samples = samples or d + 2
    pts = [(n, count_extensions(m.scaled(n))) for n in range(1, samples + 1)]
    return interpolate_univariate(pts, var="n")


def enumerate_cells(P, A):
    """All cells of the canonical subdivision of the order cone of A."""
    from .poset import enumerate_ideal_chains

    return list(enumerate_ideal_chains(P.subposet(A)))
