"""Exhaustive generation of unlabelled trees and integer compositions.

Three independent tree generators are provided so that each can check the
others:

``prufer``
    every Prufer sequence, deduplicated by canonical code (n <= 8).
``leaf``
    every way of hanging a new leaf on every tree of order n - 1,
    deduplicated by canonical code.
``centroid``
    trees built directly around their centroid from multisets of smaller
    rooted trees; each isomorphism class is produced exactly once.
"""
from __future__ import annotations

from functools import lru_cache
import heapq
import itertools

from .errors import CapExceeded, OutOfRange
from .graph import build_graph, canonical_code, tree_code

MAX_ORDER = 12
PRUFER_MAX_ORDER = 8


def prufer_decode(seq, n: int):
    """Edges of the labelled tree on ``0..n-1`` with Prufer sequence ``seq``."""
    if n == 1:
        return []
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def labelled_trees(n: int):
    """All ``n ** (n - 2)`` labelled trees on ``0..n-1``."""
    if n == 1:
        yield build_graph(1, [])
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield build_graph(n, prufer_decode(seq, n))


def _by_code(graphs):
    out = {}
    for g in graphs:
        out.setdefault(canonical_code(g), g)
    return tuple(out[c] for c in sorted(out))


@lru_cache(maxsize=None)
def _prufer(n):
    if n == 1:
        return (build_graph(1, []),)
    found = {}
    for seq in itertools.product(range(n), repeat=n - 2):
        edges = prufer_decode(seq, n)
        adj = [[] for _ in range(n)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        code = tree_code(n, adj)
        if code not in found:
            found[code] = edges
    return tuple(build_graph(n, found[c]) for c in sorted(found))


@lru_cache(maxsize=None)
def _leaf(n):
    if n == 1:
        return (build_graph(1, []),)
    grown = (build_graph(n, g.edges + ((v, n - 1),)) for g in _leaf(n - 1) for v in range(n - 1))
    return _by_code(grown)


# Rooted trees are nested tuples of children, children in non-decreasing
# (size, index) order, so each rooted isomorphism class has one form.


@lru_cache(maxsize=None)
def _rooted(size):
    """All rooted trees with ``size`` vertices."""
    if size == 1:
        return ((),)
    return tuple(tuple(_rooted(s)[i] for s, i in forest)
                 for forest in _forests(size - 1, size - 1, (0, 0)))


def _forests(total, max_size, min_key):
    """Multisets of rooted-tree keys ``(size, index)`` with sizes summing to
    ``total``, every size at most ``max_size``, listed in non-decreasing key
    order starting at ``min_key``."""
    if total == 0:
        yield ()
        return
    for size in range(max(1, min_key[0]), min(max_size, total) + 1):
        start = min_key[1] if size == min_key[0] else 0
        for idx in range(start, len(_rooted(size))):
            for rest in _forests(total - size, max_size, (size, idx)):
                yield ((size, idx),) + rest


def _rooted_to_edges(tree, edges, counter):
    me = counter[0]
    for child in tree:
        counter[0] += 1
        edges.append((me, counter[0]))
        _rooted_to_edges(child, edges, counter)


def _graph_from_root(children):
    edges = []
    _rooted_to_edges(children, edges, [0])
    return build_graph(len(edges) + 1, edges)


@lru_cache(maxsize=None)
def _centroid(n):
    trees = []
    if n == 1:
        return (build_graph(1, []),)
    for forest in _forests(n - 1, (n - 1) // 2, (0, 0)):
        trees.append(_graph_from_root(tuple(_rooted(s)[i] for s, i in forest)))
    if n % 2 == 0:
        half = _rooted(n // 2)
        for i, j in itertools.combinations_with_replacement(range(len(half)), 2):
            # two halves joined root-to-root
            trees.append(_graph_from_root(half[i] + (half[j],)))
    return _by_code(trees)


def enumerate_trees(n: int, method: str = "auto"):
    """One representative per isomorphism class of trees of order ``n``,
    ordered by canonical code."""
    if n < 1:
        raise OutOfRange("tree order must be positive")
    if n > MAX_ORDER:
        raise CapExceeded(f"tree enumeration is capped at n = {MAX_ORDER}")
    if method == "auto":
        method = "prufer" if n <= PRUFER_MAX_ORDER else "centroid"
    if method == "prufer":
        if n > PRUFER_MAX_ORDER:
            raise CapExceeded(f"Prufer enumeration is capped at n = {PRUFER_MAX_ORDER}")
        return iter(_prufer(n))
    if method == "leaf":
        return iter(_leaf(n))
    if method == "centroid":
        return iter(_centroid(n))
    raise ValueError(f"unknown method {method!r}")


def trees_up_to(n_max: int, n_min: int = 1):
    for n in range(n_min, n_max + 1):
        yield from enumerate_trees(n)


def compositions(total: int, parts: int):
    """Nonnegative integer vectors of length ``parts`` summing to ``total``,
    in lexicographic order."""
    if parts < 1 or total < 0:
        raise OutOfRange("need parts >= 1 and total >= 0")
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest
