"""Monotone triangles as lattice points of a Gelfand-Tsetlin marked order polytope.

Positions are ``(i, j)`` with ``1 <= j <= i <= n``; row 1 is the apex and row
``n`` is the marked bottom row.  Triangles list rows top to bottom.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb

from ._parallel import pmap
from .errors import NotADMT, NotDecreasing, NotIncreasing, QuotientInconsistent
from .marked import Marking, count_extensions, symbolic_polynomial
from .polynomial import MultiPoly
from .poset import Poset, quotient


def gt_leq(p, q):
    (i, j), (k, l) = p, q
    return k - i <= l - j and j <= l


def gt_poset(n):
    """The Gelfand-Tsetlin poset of order n."""
    if n < 1:
        raise ValueError("n must be positive")
    elements = [(i, j) for i in range(1, n + 1) for j in range(1, i + 1)]
    covers = []
    for i, j in elements:
        if j < i:
            covers.append(((i, j), (i - 1, j)))
        if i < n:
            covers.append(((i, j), (i + 1, j + 1)))
    return Poset(elements, covers)


def bottom_row(n):
    return [(n, j) for j in range(1, n + 1)]


def bad_positions(n):
    return [(i, j) for i in range(2, n) for j in range(1, i)]


def diamond_covers(i, j):
    """The four cover relations of the diamond forcing a_{i,j} = a_{i,j+1}."""
    return [
        ((i, j), (i - 1, j)),
        ((i - 1, j), (i, j + 1)),
        ((i, j), (i + 1, j + 1)),
        ((i + 1, j + 1), (i, j + 1)),
    ]


@dataclass(frozen=True)
class DiamondSet:
    n: int
    cells: tuple

    def covers(self):
        out = []
        for i, j in self.cells:
            for c in diamond_covers(i, j):
                if c not in out:
                    out.append(c)
        return out

    @property
    def sign(self):
        return -1 if len(self.cells) % 2 else 1

    def is_essential(self):
        cells = set(self.cells)
        return not any((i, j + 1) in cells for i, j in cells)


def enumerate_qess(n):
    """Diamond sets without horizontally adjacent diamonds, in a fixed order."""
    bad = bad_positions(n)
    for mask in range(1 << len(bad)):
        cells = tuple(bad[t] for t in range(len(bad)) if mask >> t & 1)
        ds = DiamondSet(n, cells)
        if ds.is_essential():
            yield ds


def _check_increasing(k):
    k = [int(x) for x in k]
    for a, b in zip(k, k[1:]):
        if a > b:
            raise NotIncreasing(*k)
    return k


def _check_decreasing(k):
    k = [int(x) for x in k]
    for a, b in zip(k, k[1:]):
        if a < b:
            raise NotDecreasing(*k)
    return k


def count_mt_direct(n, k):
    """Monotone triangles with bottom row k, built row by row upwards."""
    k = _check_increasing(k)
    if len(k) != n:
        raise ValueError("bottom row must have length n")

    @lru_cache(maxsize=None)
    def above(row):
        if len(row) == 1:
            return 1
        ranges = [range(row[j], row[j + 1] + 1) for j in range(len(row) - 1)]
        total = 0
        for cand in product(*ranges):
            if all(a < b for a, b in zip(cand, cand[1:])):
                total += above(cand)
        return total

    return above(tuple(k))


def _quotient_for(ds):
    P = gt_poset(ds.n)
    if not ds.cells:
        return P, {x: x for x in P.elements}
    return quotient(P, ds.covers())


def _pushed_values(ds, mapping, k):
    values = {}
    for j, kappa in enumerate(bottom_row(ds.n)):
        img = mapping[kappa]
        if img in values and values[img] != k[j]:
            raise QuotientInconsistent(kappa, img)
        values[img] = k[j]
    return values


def _moebius_term(args):
    ds, k = args
    Q, mapping = _quotient_for(ds)
    return ds.sign * count_extensions(Marking(Q, _pushed_values(ds, mapping, k)))


def alpha_via_moebius(n, k):
    """Signed sum of marked-order counts over the essential diamond quotients."""
    k = _check_increasing(k)
    if len(k) != n:
        raise ValueError("bottom row must have length n")
    return sum(pmap(_moebius_term, [(ds, tuple(k)) for ds in enumerate_qess(n)]))


def k_variables(n):
    return tuple(f"k{j}" for j in range(1, n + 1))


def _poly_term(ds):
    Q, mapping = _quotient_for(ds)
    kvars = k_variables(ds.n)
    images = [mapping[kappa] for kappa in bottom_row(ds.n)]
    if len(set(images)) != len(images):
        raise QuotientInconsistent(*images)
    names = dict(zip(images, kvars))
    poly = symbolic_polynomial(Q, images, [[x] for x in images], names=names)
    return poly.with_variables(kvars) * ds.sign


@lru_cache(maxsize=None)
def alpha_polynomial(n):
    """alpha(n; k) as a polynomial in k1..kn (from the strictly increasing cell)."""
    total = MultiPoly.zero(k_variables(n))
    for term in pmap(_poly_term, list(enumerate_qess(n))):
        total = total + term
    return total


def eval_alpha(n, k):
    value = alpha_polynomial(n).eval(dict(zip(k_variables(n), k)))
    assert value.denominator == 1
    return int(value)


# decreasing monotone triangles ----------------------------------------

@dataclass(frozen=True)
class Triangle:
    """Integer triangle; ``rows[0]`` is the apex, ``rows[-1]`` the bottom row."""

    n: int
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        if len(rows) != self.n or any(len(r) != i + 1 for i, r in enumerate(rows)):
            raise ValueError("row i must have i entries")
        object.__setattr__(self, "rows", rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i - 1][j - 1]

    @property
    def bottom(self):
        return self.rows[-1]

    def to_dict(self):
        return {"n": self.n, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_dict(cls, data):
        return cls(int(data["n"]), tuple(tuple(r) for r in data["rows"]))


def _row_ok(row):
    # (W3)
    return not any(row[t] == row[t + 1] == row[t + 2] for t in range(len(row) - 2))


def _rows_ok(upper, lower):
    # (W4): no integer occurs exactly once in both rows
    for v in set(upper):
        if upper.count(v) == 1 and lower.count(v) == 1:
            return False
    return True


def is_dmt(t):
    rows = t.rows
    for i in range(1, len(rows)):
        up, low = rows[i - 1], rows[i]
        for j in range(len(up)):
            if not low[j] >= up[j] >= low[j + 1]:
                return False
    if not all(_row_ok(r) for r in rows):
        return False
    return all(_rows_ok(rows[i - 1], rows[i]) for i in range(1, len(rows)))


def enumerate_dmt(n, k):
    """All decreasing monotone triangles with bottom row k."""
    k = tuple(_check_decreasing(k))
    if len(k) != n:
        raise ValueError("bottom row must have length n")
    if not _row_ok(k):
        return

    def build(row):
        if len(row) == 1:
            yield (row,)
            return
        ranges = [range(row[j + 1], row[j] + 1) for j in range(len(row) - 1)]
        for cand in product(*ranges):
            if _row_ok(cand) and _rows_ok(cand, row):
                for upper in build(cand):
                    yield upper + (row,)

    for rows in build(k):
        yield Triangle(n, rows)


def dd(t):
    """Number of duplicate-descendant pairs of a DMT."""
    if not is_dmt(t):
        raise NotADMT(*t.rows)
    rows = t.rows
    count = 0
    for r, row in enumerate(rows):
        for j in range(len(row) - 1):
            if row[j] != row[j + 1]:
                continue
            if r == len(rows) - 1:
                count += 1
                continue
            below = rows[r + 1]
            v = row[j]
            if (below[j] == below[j + 1] == v) or (below[j + 1] == below[j + 2] == v):
                count += 1
    return count


def signed_dmt_sum(n, k):
    """(-1)^C(n,2) times the dd-signed number of DMTs with bottom row k."""
    total = sum(-1 if dd(t) % 2 else 1 for t in enumerate_dmt(n, k))
    return -total if comb(n, 2) % 2 else total
