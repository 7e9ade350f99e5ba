"""Simple undirected graphs, hop distances, rooted-tree moments and tree
canonical codes.

Vertices are ``0..n-1``.  Paper examples numbered from 1 are shifted down by
one wherever they appear in this package.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
import json

import numpy as np

from . import kernels
from .errors import (
    Disconnected,
    DuplicateEdge,
    InvalidSpec,
    InvalidVertex,
    NotATree,
    SelfLoop,
)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.  Construct with :func:`build_graph`."""

    n: int
    edges: tuple[tuple[int, int], ...]
    degrees: tuple[int, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False)
    is_connected: bool
    is_tree: bool
    bipartition: tuple[frozenset[int], frozenset[int]] | None = field(repr=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def csr(self):
        """``(indptr, indices)`` arrays for the kernels."""
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        indptr[1:] = np.cumsum([len(a) for a in self.adjacency])
        indices = np.fromiter(
            (v for a in self.adjacency for v in a), dtype=np.int64, count=2 * self.m
        )
        return indptr, indices

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "edges": [list(e) for e in self.edges]})

    def to_edgelist(self) -> str:
        lines = [f"n {self.n}"]
        lines += [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f'  {v} [label="{v}"];' for v in range(self.n)]
        lines += [f"  {u} -- {v};" for u, v in self.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class RootedTree:
    tree: Graph
    root: int

    def __post_init__(self):
        if not self.tree.is_tree:
            raise NotATree("rooted tree requires a tree")
        if not 0 <= self.root < self.tree.n:
            raise InvalidVertex(f"root {self.root} out of range for n={self.tree.n}")


def _two_colour(n, adjacency):
    colour = [-1] * n
    for s in range(n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in adjacency[u]:
                if colour[v] < 0:
                    colour[v] = 1 - colour[u]
                    queue.append(v)
                elif colour[v] == colour[u]:
                    return None
    return colour


def build_graph(n: int, edges) -> Graph:
    """Validate ``edges`` over ``0..n-1`` and return a :class:`Graph`.

    Disconnected input is accepted; metric and Kemeny operations reject it.
    """
    if n < 1:
        raise InvalidVertex("graph needs at least one vertex")
    seen = set()
    adj = [[] for _ in range(n)]
    for e in edges:
        u, v = (int(x) for x in e)
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidVertex(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(f"duplicate edge {key}")
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
    adjacency = tuple(tuple(sorted(a)) for a in adj)

    reached = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in adjacency[u]:
            if v not in reached:
                reached.add(v)
                stack.append(v)
    connected = len(reached) == n

    colour = _two_colour(n, adjacency)
    parts = None
    if colour is not None:
        parts = (
            frozenset(v for v in range(n) if colour[v] == 0),
            frozenset(v for v in range(n) if colour[v] == 1),
        )
    return Graph(
        n=n,
        edges=tuple(sorted(seen)),
        degrees=tuple(len(a) for a in adjacency),
        adjacency=adjacency,
        is_connected=connected,
        is_tree=connected and len(seen) == n - 1,
        bipartition=parts,
    )


def _require_connected(g):
    if not g.is_connected:
        raise Disconnected("graph is disconnected")


def _require_tree(g):
    if not g.is_tree:
        raise NotATree("graph is not a tree")


def distances_from(g: Graph, source: int) -> np.ndarray:
    _require_connected(g)
    indptr, indices = g.csr()
    return kernels.bfs_from(g.n, indptr, indices, source)


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs hop distances as a read-only ``int64`` array."""
    _require_connected(g)
    indptr, indices = g.csr()
    d = kernels.bfs_all_pairs(g.n, indptr, indices)
    d.flags.writeable = False
    return d


def diameter(g: Graph) -> int:
    if g.n == 1:
        _require_connected(g)
        return 0
    return int(distance_matrix(g).max())


def eccentricity(g: Graph, v: int) -> int:
    return int(distances_from(g, v).max())


def moment(t: RootedTree) -> int:
    """Sum over vertices of ``dist(v, root) * deg(v)``."""
    dist = distances_from(t.tree, t.root)
    return int(sum(int(d) * k for d, k in zip(dist, t.tree.degrees)))


def bipartition(g: Graph):
    _require_connected(g)
    return g.bipartition


def is_complete_bipartite(g: Graph) -> bool:
    if not g.is_connected or g.bipartition is None or g.n < 2:
        return False
    a, b = g.bipartition
    return len(a) * len(b) == g.m


def _centers(n, adjacency):
    if n <= 2:
        return list(range(n))
    degree = [len(a) for a in adjacency]
    layer = [v for v in range(n) if degree[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for u in layer:
            for v in adjacency[u]:
                degree[v] -= 1
                if degree[v] == 1:
                    nxt.append(v)
        layer = nxt
    return sorted(layer)


def _rooted_code(n, adjacency, root):
    parent = [-1] * n
    order = [root]
    parent[root] = root
    for u in order:
        for v in adjacency[u]:
            if parent[v] < 0:
                parent[v] = u
                order.append(v)
    kids: list[list[str]] = [[] for _ in range(n)]
    code = [""] * n
    for u in reversed(order):
        kids[u].sort()
        code[u] = "(" + "".join(kids[u]) + ")"
        if u != root:
            kids[parent[u]].append(code[u])
    return code[root]


def tree_code(n, adjacency) -> bytes:
    """Canonical code from raw adjacency lists of a tree (no validation)."""
    return min(_rooted_code(n, adjacency, c) for c in _centers(n, adjacency)).encode("ascii")


def centers(g: Graph) -> list[int]:
    """The one or two vertices of a tree with minimum eccentricity."""
    _require_tree(g)
    return _centers(g.n, g.adjacency)


def rooted_code(g: Graph, root: int) -> str:
    """Canonical parenthesis string of ``g`` rooted at ``root``.

    Children codes are sorted, so two rooted trees get the same string iff
    they are isomorphic as rooted trees.
    """
    _require_tree(g)
    return _rooted_code(g.n, g.adjacency, root)


def canonical_code(g: Graph) -> bytes:
    """Isomorphism-invariant code of a tree (minimum over its centre roots)."""
    _require_tree(g)
    return tree_code(g.n, g.adjacency)


def relabel(g: Graph, perm) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    return build_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


# --- text formats -----------------------------------------------------------


def parse_edgelist(text: str) -> Graph:
    """Parse ``u v`` lines with optional ``n <count>`` header; ``#`` comments."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if parts[0] == "n" and len(parts) == 2:
                if n is not None:
                    raise InvalidSpec(f"line {lineno}: repeated 'n' header")
                n = int(parts[1])
                continue
            if len(parts) != 2:
                raise ValueError
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise InvalidSpec(f"line {lineno}: expected 'u v', got {raw!r}") from None
    if n is None:
        if not edges:
            raise InvalidSpec("empty edge list needs an 'n <count>' header")
        n = 1 + max(max(e) for e in edges)
    return build_graph(n, edges)


def parse_json(text: str) -> Graph:
    try:
        data = json.loads(text)
        n = int(data["n"])
        edges = [tuple(e) for e in data["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidSpec(f"bad graph JSON: {exc}") from None
    return build_graph(n, edges)


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if str(path).endswith(".json"):
        return parse_json(text)
    return parse_edgelist(text)
