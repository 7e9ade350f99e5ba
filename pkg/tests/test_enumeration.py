import math

import pytest

from kemeny_trees.enumeration import (
    MAX_ORDER,
    compositions,
    enumerate_trees,
    labelled_trees,
    prufer_decode,
    trees_up_to,
)
from kemeny_trees.errors import CapExceeded, OutOfRange
from kemeny_trees.graph import canonical_code

COUNTS = (1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551)


def codes(n, method):
    return [canonical_code(g) for g in enumerate_trees(n, method)]


@pytest.mark.parametrize("n", range(1, 9))
def test_three_generators_agree(n):
    want = codes(n, "prufer")
    assert len(want) == COUNTS[n - 1]
    assert codes(n, "leaf") == want
    assert codes(n, "centroid") == want


@pytest.mark.parametrize("n", [9, 10])
def test_leaf_and_centroid_agree(n):
    want = codes(n, "centroid")
    assert len(want) == COUNTS[n - 1]
    assert codes(n, "leaf") == want


@pytest.mark.parametrize("n", range(1, MAX_ORDER + 1))
def test_counts_and_distinct_codes(n):
    trees = list(enumerate_trees(n))
    assert len(trees) == COUNTS[n - 1]
    cs = [canonical_code(g) for g in trees]
    assert cs == sorted(set(cs))
    assert all(g.is_tree and g.n == n for g in trees)


def test_small_examples():
    assert len(list(enumerate_trees(4))) == 2
    assert len(list(enumerate_trees(7))) == 11


def test_caps():
    with pytest.raises(CapExceeded):
        enumerate_trees(MAX_ORDER + 1)
    with pytest.raises(CapExceeded):
        enumerate_trees(9, "prufer")
    with pytest.raises(OutOfRange):
        enumerate_trees(0)
    with pytest.raises(ValueError):
        enumerate_trees(5, "magic")


def test_trees_up_to():
    assert sum(1 for _ in trees_up_to(8)) == sum(COUNTS[:8])


def test_prufer_decode():
    assert sorted(map(sorted, prufer_decode([3, 3], 4))) == [[0, 3], [1, 3], [2, 3]]
    assert prufer_decode([], 2) == [(0, 1)]
    # Cayley: n^(n-2) distinct labelled trees
    for n in range(2, 6):
        edge_sets = {frozenset(map(frozenset, g.edges)) for g in labelled_trees(n)}
        assert len(edge_sets) == n ** (n - 2)


def test_compositions_examples():
    assert list(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert list(compositions(0, 3)) == [(0, 0, 0)]
    assert sum(1 for _ in compositions(8, 7)) == 3003


def test_compositions_properties():
    for total in range(0, 6):
        for parts in range(1, 5):
            out = list(compositions(total, parts))
            assert len(out) == math.comb(total + parts - 1, parts - 1)
            assert out == sorted(set(out))
            assert all(sum(p) == total and min(p) >= 0 for p in out)
    with pytest.raises(OutOfRange):
        list(compositions(1, 0))
