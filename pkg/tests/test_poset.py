import random
from itertools import combinations, permutations

import pytest

from markedord.corpus import random_poset
from markedord.errors import CycleError, NotAFacePartition, UnknownLabel
from markedord.poset import (
    build_poset,
    contraction_is_acyclic,
    count_linear_extensions,
    enumerate_ideal_chains,
    is_face_partition,
    quotient,
)
from markedord.triangles import diamond_covers, gt_poset


def test_singleton():
    P = build_poset(["a"], [])
    assert P.elements == ("a",) and P.covers == ()


def test_chain_and_transitive_cover_reported(chain3):
    P = build_poset(["x1", "x2", "x3"], [("x1", "x2"), ("x2", "x3"), ("x1", "x3")])
    assert P.covers == chain3.covers
    assert P.stripped == (("x1", "x3"),)


def test_cycle_rejected():
    with pytest.raises(CycleError):
        build_poset(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])


def test_unknown_label():
    with pytest.raises(UnknownLabel):
        build_poset(["a"], [("a", "z")])


def test_leq(chain3):
    assert chain3.leq("x1", "x3")
    assert not chain3.leq("x3", "x1")
    assert all(chain3.leq(x, x) for x in chain3)
    with pytest.raises(UnknownLabel):
        chain3.leq("x1", "nope")


def _brute_ideal_chains(P):
    """All strictly increasing sequences of ideals ending at P, by subset search."""
    elems = list(P.elements)
    ideals = []
    for r in range(1, len(elems) + 1):
        for S in combinations(elems, r):
            S = frozenset(S)
            if all(y in S for x in S for y in elems if P.leq(y, x)):
                ideals.append(S)
    full = frozenset(elems)
    out = []

    def grow(seq):
        if seq and seq[-1] == full:
            out.append(tuple(seq))
            return
        for I in ideals:
            if not seq or (seq[-1] < I):
                grow(seq + [I])

    grow([])
    return set(out)


def test_ideal_chains_antichain():
    P = build_poset(["p", "q"])
    chains = [c.ideals for c in enumerate_ideal_chains(P)]
    assert len(chains) == 3
    assert set(chains) == _brute_ideal_chains(P)
    maximal = [c for c in chains if len(c) == 2]
    assert len(maximal) == 2 == count_linear_extensions(P)


def test_ideal_chains_two_chain():
    P = build_poset(["x1", "x2"], [("x1", "x2")])
    chains = [c.ideals for c in enumerate_ideal_chains(P)]
    assert chains == [(frozenset({"x1"}), frozenset({"x1", "x2"})), (frozenset({"x1", "x2"}),)]


def test_ideal_chain_order_is_deterministic():
    P = random_poset(random.Random(3), 6)
    assert list(enumerate_ideal_chains(P)) == list(enumerate_ideal_chains(P))


def test_max_len():
    P = build_poset(["p", "q", "r"])
    assert all(len(c) <= 2 for c in enumerate_ideal_chains(P, max_len=2))


def _brute_linear_extensions(P):
    return sum(
        1 for perm in permutations(P.elements)
        if all(not P.lt(perm[j], perm[i]) for i in range(len(perm)) for j in range(i + 1, len(perm)))
    )


@pytest.mark.parametrize("seed", range(40))
def test_maximal_chains_are_linear_extensions(seed):
    P = random_poset(random.Random(seed), 6)
    n = len(P)
    maximal = sum(1 for c in enumerate_ideal_chains(P) if len(c) == n)
    assert maximal == count_linear_extensions(P) == _brute_linear_extensions(P)


def test_face_partition_examples(chain3, diamond):
    assert is_face_partition(chain3, [])
    assert is_face_partition(chain3, chain3.covers)
    assert not is_face_partition(diamond, [("0", "p"), ("p", "1")])


def test_face_partition_rejects_non_cover(chain3):
    with pytest.raises(NotAFacePartition):
        is_face_partition(chain3, [("x1", "x3")])


@pytest.mark.parametrize("seed", range(60))
def test_face_partition_characterizations_agree(seed):
    P = random_poset(random.Random(seed), 5)
    covers = list(P.covers)
    for r in range(len(covers) + 1):
        for G in combinations(covers, r):
            assert is_face_partition(P, G) == contraction_is_acyclic(P, G), G


def test_crown_zigzag_is_not_a_face_partition():
    P = build_poset(["x1", "x2", "x3", "x4", "x5"],
                    [("x3", "x1"), ("x1", "x4"), ("x3", "x5"), ("x2", "x4"), ("x2", "x5")])
    G = [("x3", "x5"), ("x2", "x4"), ("x1", "x4")]
    assert not contraction_is_acyclic(P, G)
    assert not is_face_partition(P, G)


def test_quotient_identity(chain3):
    Q, mp = quotient(chain3, [])
    assert Q == chain3 and all(mp[x] == x for x in chain3)


def test_quotient_single_contraction(chain3):
    Q, mp = quotient(chain3, [("x1", "x2")])
    assert Q.elements == (("x1", "x2"), "x3")
    assert Q.covers == ((("x1", "x2"), "x3"),)
    assert mp["x1"] == mp["x2"] == ("x1", "x2")


def test_quotient_gt3_diamond():
    P = gt_poset(3)
    Q, mp = quotient(P, diamond_covers(2, 1))
    block = {(1, 1), (2, 1), (2, 2), (3, 2)}
    assert len({mp[x] for x in block}) == 1
    assert len(Q) == 3
    assert Q.leq(mp[(3, 1)], mp[(1, 1)]) and Q.leq(mp[(1, 1)], mp[(3, 3)])


def test_quotient_requires_face_partition(diamond):
    with pytest.raises(NotAFacePartition):
        quotient(diamond, [("0", "p"), ("p", "1")])


@pytest.mark.parametrize("seed", range(30))
def test_quotient_preserves_order(seed):
    rng = random.Random(seed)
    P = random_poset(rng, 6)
    faces = [G for r in range(len(P.covers) + 1) for G in combinations(P.covers, r)
             if is_face_partition(P, G)]
    G = rng.choice(faces)
    Q, mp = quotient(P, G)
    for p in P:
        for q in P:
            if P.leq(p, q):
                assert Q.leq(mp[p], mp[q])
