"""Named tree families and their extremal members.

Vertex numbering is deterministic:

* ``Path(n)``: ``0 - 1 - ... - n-1``.
* ``Star(n)``: centre ``0``, leaves ``1..n-1``.
* ``Caterpillar(k, p)``: central path ``0..k-1``; then the ``p[0]`` pendents of
  central vertex 0, the ``p[1]`` pendents of vertex 1, and so on.
* ``RootedBroom(x, y)``: path ``0..x-1`` rooted at ``0``; the ``y`` pendents
  ``x..x+y-1`` hang from ``x-1``.  ``RootedBroom(0, 1)`` is the trivial tree.
* ``BroomStar(t, q, p)``: centre ``0``; arm ``a`` is the path of its ``q-1``
  non-centre vertices followed by the ``p`` pendents at the far end.
* ``CompleteBipartite(a, b)``: parts ``0..a-1`` and ``a..a+b-1``.
* ``Concatenation(pieces)``: pieces laid out in order, consecutive roots joined.

Positions ``r`` that appear 1-based in the literature (``e_r``) are stored
0-based, i.e. at index ``r - 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
import math

from .errors import EmptyClass, InvalidSpec, OutOfRange
from .graph import Graph, RootedTree, build_graph


class FamilySpec:
    """Base class of the family specs.  Subclasses are frozen dataclasses."""

    root: int | None = None

    def edges(self) -> tuple[int, list[tuple[int, int]]]:
        raise NotImplementedError

    def build(self) -> Graph:
        n, edges = self.edges()
        return build_graph(n, edges)

    def rooted(self) -> RootedTree:
        if self.root is None:
            raise InvalidSpec(f"{self} has no designated root")
        return RootedTree(self.build(), self.root)


@dataclass(frozen=True)
class Path(FamilySpec):
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidSpec("path needs n >= 1")

    root = 0

    def edges(self):
        return self.n, [(i, i + 1) for i in range(self.n - 1)]


@dataclass(frozen=True)
class Star(FamilySpec):
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidSpec("star needs n >= 1")

    root = 0

    def edges(self):
        return self.n, [(0, i) for i in range(1, self.n)]


@dataclass(frozen=True)
class Caterpillar(FamilySpec):
    k: int
    p: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(int(x) for x in self.p))
        if self.k < 1 or len(self.p) != self.k or any(x < 0 for x in self.p):
            raise InvalidSpec("caterpillar needs k >= 1 and k nonnegative pendent counts")

    @property
    def order(self) -> int:
        return self.k + sum(self.p)

    def edges(self):
        edges = [(i, i + 1) for i in range(self.k - 1)]
        nxt = self.k
        for i, count in enumerate(self.p):
            for _ in range(count):
                edges.append((i, nxt))
                nxt += 1
        return nxt, edges


@dataclass(frozen=True)
class RootedBroom(FamilySpec):
    x: int
    y: int

    def __post_init__(self):
        if (self.x, self.y) != (0, 1) and (self.x < 1 or self.y < 0):
            raise InvalidSpec("broom needs x >= 1, y >= 0 (or x, y = 0, 1)")

    root = 0

    def edges(self):
        if self.x == 0:
            return 1, []
        edges = [(i, i + 1) for i in range(self.x - 1)]
        edges += [(self.x - 1, self.x + j) for j in range(self.y)]
        return self.x + self.y, edges


@dataclass(frozen=True)
class BroomStar(FamilySpec):
    t: int
    q: int
    p: int

    def __post_init__(self):
        if self.t < 2 or self.q < 2 or self.p < 1:
            raise InvalidSpec("broom-star needs t >= 2, q >= 2, p >= 1")

    root = 0

    @property
    def order(self) -> int:
        return self.t * self.p + self.t * self.q - self.t + 1

    def edges(self):
        edges = []
        nxt = 1
        for _ in range(self.t):
            prev = 0
            for _ in range(self.q - 1):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
            for _ in range(self.p):
                edges.append((prev, nxt))
                nxt += 1
        return nxt, edges


@dataclass(frozen=True)
class CompleteBipartite(FamilySpec):
    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise InvalidSpec("complete bipartite needs a, b >= 1")

    def edges(self):
        return self.a + self.b, [(i, self.a + j) for i in range(self.a) for j in range(self.b)]


@dataclass(frozen=True)
class Concatenation(FamilySpec):
    """Pieces ``(spec, root)`` joined by edges between consecutive roots."""

    pieces: tuple[tuple[FamilySpec, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple((s, int(r)) for s, r in self.pieces))
        if not self.pieces:
            raise InvalidSpec("concatenation needs at least one piece")

    def edges(self):
        edges = []
        offset = 0
        prev_root = None
        for spec, root in self.pieces:
            n, piece = spec.edges()
            if not 0 <= root < n:
                raise InvalidSpec(f"root {root} outside piece of order {n}")
            edges += [(u + offset, v + offset) for u, v in piece]
            if prev_root is not None:
                edges.append((prev_root, root + offset))
            prev_root = root + offset
            offset += n
        return offset, edges


def build_family(spec: FamilySpec) -> Graph:
    return spec.build()


def concatenate(pieces) -> Graph:
    """Concatenate :class:`RootedTree` pieces (graph-level, no specs needed)."""
    edges = []
    offset = 0
    prev = None
    for piece in pieces:
        edges += [(u + offset, v + offset) for u, v in piece.tree.edges]
        if prev is not None:
            edges.append((prev, piece.root + offset))
        prev = piece.root + offset
        offset += piece.tree.n
    return build_graph(offset, edges)


# --- text syntax --------------------------------------------------------------

def parse_spec(text: str) -> FamilySpec:
    """Parse ``path:n``, ``star:n``, ``caterpillar:k:p1,...,pk``, ``broom:x,y``,
    ``broomstar:t,q,p`` or ``kab:a,b``."""
    s = text.strip().lower()
    try:
        kind, _, rest = s.partition(":")
        if kind == "path":
            return Path(int(rest))
        if kind == "star":
            return Star(int(rest))
        if kind == "caterpillar":
            k, _, plist = rest.partition(":")
            return Caterpillar(int(k), tuple(int(x) for x in plist.split(",")))
        nums = tuple(int(x) for x in rest.split(","))
        if kind == "broom" and len(nums) == 2:
            return RootedBroom(*nums)
        if kind == "broomstar" and len(nums) == 3:
            return BroomStar(*nums)
        if kind == "kab" and len(nums) == 2:
            return CompleteBipartite(*nums)
    except ValueError as exc:
        if isinstance(exc, InvalidSpec):
            raise
        raise InvalidSpec(f"cannot parse family spec {text!r}") from None
    raise InvalidSpec(f"cannot parse family spec {text!r}")


def format_spec(spec: FamilySpec) -> str:
    if isinstance(spec, Path):
        return f"path:{spec.n}"
    if isinstance(spec, Star):
        return f"star:{spec.n}"
    if isinstance(spec, Caterpillar):
        return f"caterpillar:{spec.k}:" + ",".join(map(str, spec.p))
    if isinstance(spec, RootedBroom):
        return f"broom:{spec.x},{spec.y}"
    if isinstance(spec, BroomStar):
        return f"broomstar:{spec.t},{spec.q},{spec.p}"
    if isinstance(spec, CompleteBipartite):
        return f"kab:{spec.a},{spec.b}"
    raise InvalidSpec(f"{type(spec).__name__} has no text form")


# --- extremal members ---------------------------------------------------------


def extremal_caterpillar(n: int, k: int, which: str = "min") -> Caterpillar:
    """Minimiser or maximiser of Kemeny's constant among caterpillars with
    ``k`` central vertices and order ``n``.

    ``min`` puts all ``n - k`` pendents on central vertex ``ceil(k/2)``
    (1-based); ``max`` splits them ``ceil`` / ``floor`` between the two ends.
    """
    if not 2 <= k <= n:
        raise OutOfRange(f"need 2 <= k <= n, got n={n}, k={k}")
    p = [0] * k
    extra = n - k
    if which == "min":
        p[math.ceil(k / 2) - 1] = extra
    elif which == "max":
        p[0] += (extra + 1) // 2
        p[-1] += extra // 2
    else:
        raise ValueError(f"which must be 'min' or 'max', not {which!r}")
    return Caterpillar(k, tuple(p))


def class_nonempty(n: int, diameter: int) -> bool:
    """Whether some tree has ``n`` vertices and the given diameter."""
    if diameter == 0:
        return n == 1
    if diameter == 1:
        return n == 2
    return diameter >= 2 and n >= diameter + 1


def min_diameter_spec(n: int, diameter: int) -> Caterpillar:
    if not class_nonempty(n, diameter):
        raise EmptyClass(f"no tree has n={n} and diameter {diameter}")
    k = diameter + 1
    p = [0] * k
    p[math.ceil(k / 2) - 1] = n - k
    return Caterpillar(k, tuple(p))


def min_diameter_tree(n: int, diameter: int) -> Graph:
    """The tree of order ``n`` and given diameter with the least Kemeny's constant."""
    return min_diameter_spec(n, diameter).build()
