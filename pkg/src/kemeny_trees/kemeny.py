"""Kemeny's constant of a graph's random walk.

Exact routes (all return :class:`fractions.Fraction`):

* :func:`kappa_combinatorial` -- ``d^T D d / (4(n-1))`` for trees, with ``D``
  the distance matrix and ``d`` the degree vector.
* :func:`mfp_analysis` -- fundamental matrix and mean first passage times of
  the walk ``T = D^-1 A``; works for any connected graph.
* :func:`kappa_pendent_removal` -- strips pendent vertices one at a time.
* :func:`kappa_concatenation`, :func:`kappa_caterpillar`,
  :func:`kappa_broomstar` -- closed forms for structured trees.

:func:`kappa_spectral` is the floating-point route via the eigenvalues of the
symmetrised walk matrix.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import math

import numpy as np

from . import kernels
from .errors import (
    ConvergenceFailure,
    InvalidProfile,
    NotATree,
    OutOfRange,
    TrivialGraph,
)
from .graph import Graph, RootedTree, _require_connected, distance_matrix, moment
from .linalg import inverse, symmetric_eigenvalues

HALF = Fraction(1, 2)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_decimal(x) -> str:
    return f"{float(x):.12f}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s.strip())


def _toeplitz_forms(a, b):
    """``sum_ij a_i |i-j| b_j`` without building the matrix."""
    return sum(ai * abs(i - j) * bj
               for i, ai in enumerate(a) if ai
               for j, bj in enumerate(b) if bj)


# --- combinatorial ----------------------------------------------------------


def kappa_combinatorial(g: Graph) -> Fraction:
    if not g.is_tree:
        raise NotATree("the distance formula applies to trees only")
    if g.n == 1:
        return Fraction(0)
    dist = distance_matrix(g)
    q = kernels.degree_quadratic_form(dist, np.asarray(g.degrees, dtype=np.int64))
    return Fraction(q, 4 * (g.n - 1))


# --- mean first passage -----------------------------------------------------


@dataclass(frozen=True)
class MfpResult:
    w: tuple[Fraction, ...]
    M: tuple[tuple[Fraction, ...], ...]
    Z: tuple[tuple[Fraction, ...], ...]
    kappa: Fraction

    def row_constants(self):
        """``(M w)_i - 1`` for every start vertex ``i``."""
        return tuple(sum(m * w for m, w in zip(row, self.w)) - 1 for row in self.M)


def mfp_analysis(g: Graph) -> MfpResult:
    """Exact stationary distribution, fundamental matrix and passage times.

    ``Z = (I - T + e w^T)^-1``; ``m_ij = (Z_jj - Z_ij) / w_j`` off the
    diagonal and ``m_ii = 1 / w_i`` (mean return time), so that
    ``(M w)_i - 1 = w^T M w - 1 = trace(Z) - 1 = kappa``.
    """
    _require_connected(g)
    if g.n < 2:
        raise TrivialGraph("random walk needs at least two vertices")
    n = g.n
    two_m = 2 * g.m
    w = [Fraction(d, two_m) for d in g.degrees]
    a = []
    for i in range(n):
        inv_d = Fraction(1, g.degrees[i])
        row = [w[j] for j in range(n)]
        row[i] += 1
        for j in g.adjacency[i]:
            row[j] -= inv_d
        a.append(row)
    z = inverse(a)
    m = tuple(
        tuple(1 / w[j] if i == j else (z[j][j] - z[i][j]) / w[j] for j in range(n))
        for i in range(n)
    )
    kappa = sum(z[i][i] for i in range(n)) - 1
    res = MfpResult(w=tuple(w), M=m, Z=tuple(tuple(r) for r in z), kappa=kappa)
    if any(c != kappa for c in res.row_constants()):
        raise ArithmeticError("(M w)_i - 1 is not constant; exact solve is inconsistent")
    return res


# --- spectral ---------------------------------------------------------------


@dataclass(frozen=True)
class SpectralResult:
    eigenvalues: np.ndarray
    kappa: float


def kappa_spectral(g: Graph, tol: float = 1e-9, *, jacobi_tol: float = 1e-13,
                   max_sweeps: int = 100) -> SpectralResult:
    """Sum of ``1 / (1 - lambda_j)`` over the non-unit walk eigenvalues.

    Eigenvalues come from ``D^-1/2 A D^-1/2``, which is similar to the walk
    matrix.  ``tol`` bounds how far the top eigenvalue may sit from 1 and
    how far the spectrum may leave [-1, 1].
    """
    _require_connected(g)
    if g.n < 2:
        raise TrivialGraph("random walk needs at least two vertices")
    s = np.zeros((g.n, g.n))
    inv_sqrt = [1.0 / math.sqrt(d) for d in g.degrees]
    for u, v in g.edges:
        s[u, v] = s[v, u] = inv_sqrt[u] * inv_sqrt[v]
    eig = symmetric_eigenvalues(s, tol=jacobi_tol, max_sweeps=max_sweeps)
    if abs(eig[0] - 1.0) > tol or eig[-1] < -1.0 - tol:
        raise ConvergenceFailure(f"walk spectrum out of range: {eig[0]}, {eig[-1]}")
    kappa = float(sum(1.0 / (1.0 - lam) for lam in eig[1:]))
    return SpectralResult(eigenvalues=eig, kappa=kappa)


# --- concatenation and pendent removal ----------------------------------------


@dataclass(frozen=True)
class ConcatenationProfile:
    """Sizes (edge counts), moments and Kemeny constants of rooted pieces."""

    sizes: tuple[int, ...]
    moments: tuple[int, ...]
    kappas: tuple[Fraction, ...]

    @property
    def k(self) -> int:
        return len(self.sizes)

    @property
    def order(self) -> int:
        return self.k + sum(self.sizes)

    def validate(self):
        if self.k < 1:
            raise InvalidProfile("need at least one piece")
        if not (len(self.moments) == len(self.kappas) == self.k):
            raise InvalidProfile("sizes, moments and kappas differ in length")
        for m, mu in zip(self.sizes, self.moments):
            if m < 0:
                raise InvalidProfile("negative piece size")
            if mu < m:
                raise InvalidProfile(f"moment {mu} below piece size {m}")

    @classmethod
    def from_pieces(cls, pieces):
        """Profile of a sequence of :class:`RootedTree` pieces."""
        return cls(
            sizes=tuple(p.tree.n - 1 for p in pieces),
            moments=tuple(moment(p) for p in pieces),
            kappas=tuple(kappa_combinatorial(p.tree) for p in pieces),
        )


def kappa_concatenation(profile: ConcatenationProfile, n: int | None = None) -> Fraction:
    """Kemeny's constant of the concatenation described by ``profile``."""
    profile.validate()
    k = profile.k
    if n is None:
        n = profile.order
    elif n != profile.order:
        raise InvalidProfile(f"order {n} does not match profile order {profile.order}")
    if n < 2:
        raise TrivialGraph("concatenation is the trivial tree")
    m, mu = profile.sizes, profile.moments
    total = sum(mi * Fraction(ki) for mi, ki in zip(m, profile.kappas))
    total += _toeplitz_forms(m, [mi + 2 for mi in m])
    total += (n - 1) * sum(mu) - sum(a * b for a, b in zip(mu, m))
    total += Fraction(k ** 3, 3) - k * n + n + Fraction(k, 6) - HALF
    return total / (n - 1)


def pendent_removal_steps(g: Graph):
    """Strip the highest-indexed pendent vertex until one vertex remains.

    Returns ``[(n, mu), ...]`` in stripping order: ``n`` is the order before
    the removal, ``mu`` the moment of the remainder rooted at the neighbour.
    """
    if not g.is_tree:
        raise NotATree("pendent removal needs a tree")
    live = [set(a) for a in g.adjacency]
    alive = set(range(g.n))
    steps = []
    while len(alive) > 1:
        v = max(u for u in alive if len(live[u]) == 1)
        (w,) = live[v]
        live[w].discard(v)
        live[v].clear()
        alive.discard(v)
        mu = 0
        seen = {w}
        frontier = [w]
        depth = 0
        while frontier:
            mu += depth * sum(len(live[u]) for u in frontier)
            nxt = []
            for u in frontier:
                for x in live[u]:
                    if x not in seen:
                        seen.add(x)
                        nxt.append(x)
            frontier = nxt
            depth += 1
        steps.append((len(alive) + 1, mu))
    return steps


def kappa_pendent_removal(g: Graph) -> Fraction:
    kappa = Fraction(0)
    for n, mu in reversed(pendent_removal_steps(g)):
        kappa = ((n - 2) * kappa + mu + n - Fraction(3, 2)) / (n - 1)
    return kappa


# --- closed forms for families ----------------------------------------------


def kappa_caterpillar(k: int, p) -> Fraction:
    p = [int(x) for x in p]
    if k < 1 or len(p) != k or any(x < 0 for x in p):
        raise OutOfRange("caterpillar needs k >= 1 and k nonnegative pendent counts")
    n = k + sum(p)
    if n < 2:
        raise TrivialGraph("C_1((0)) is the trivial tree")
    num = _toeplitz_forms(p, p) + 2 * _toeplitz_forms(p, [1] * k)
    num += Fraction(k ** 3, 3) - 2 * n * k + n * n - Fraction(n, 2) + Fraction(5 * k, 3) - HALF
    return num / (n - 1)


def broomstar_base(q: int, p: int) -> Fraction:
    """Kemeny's constant of BS(2, q, p)."""
    q, p = Fraction(q), Fraction(p)
    num = (2 * p * p * q + 4 * p * q * q + Fraction(4, 3) * q ** 3 - 6 * p * q - 4 * q * q
           + Fraction(3, 2) * p + Fraction(25, 6) * q - Fraction(3, 2))
    return num / (p + q - 1)


def broomstar_step(kappa_t: Fraction, t: int, q: int, p: int) -> Fraction:
    """Kemeny's constant of BS(t+1, q, p) from that of BS(t, q, p)."""
    t, q, p = Fraction(t), Fraction(q), Fraction(p)
    a = p * t + q * t - t
    b = (q ** 3 / 3 - p * q + 4 * t * p + 6 * t * q - 2 * p * p * t - 6 * q * q * t
         + 2 * q ** 3 * t + p * q * q - HALF - p / 2 - 2 * t + p * p - q * q
         + 6 * p * q * q * t - 10 * p * q * t + 4 * p * p * q * t + Fraction(7, 6) * q)
    c = p * t + q * t + p + q - t - 1
    return (a * kappa_t + b) / c


def broomstar_closed(t: int, q: int, p: int) -> Fraction:
    t, q, p = Fraction(t), Fraction(q), Fraction(p)
    return (2 * p * q * t + q * q * t - Fraction(2, 3) * p * p - Fraction(4, 3) * p * q
            - t * p - Fraction(2, 3) * q * q - 2 * t * q + Fraction(4, 3) * p
            + Fraction(4, 3) * q + t - HALF + Fraction(2, 3) * p * (p * p - 1) / (p + q - 1))


def kappa_broomstar(t: int, q: int, p: int, method: str = "closed") -> Fraction:
    if t < 2 or q < 2 or p < 1:
        raise OutOfRange("broom-star needs t >= 2, q >= 2, p >= 1")
    if method == "closed":
        return broomstar_closed(t, q, p)
    if method == "recursive":
        kappa = broomstar_base(q, p)
        for s in range(2, t):
            kappa = broomstar_step(kappa, s, q, p)
        return kappa
    raise ValueError(f"unknown method {method!r}")


# --- dispatch -----------------------------------------------------------------

METHODS = ("auto", "eq1", "mfp", "spectral", "pendent")


def kappa(g: Graph, method: str = "auto"):
    """Kemeny's constant by the named route (``Fraction``, or ``float`` for spectral)."""
    if method == "auto":
        method = "eq1" if g.is_tree else "mfp"
    if method == "eq1":
        return kappa_combinatorial(g)
    if method == "mfp":
        _require_connected(g)
        if g.n == 1:
            return Fraction(0)
        return mfp_analysis(g).kappa
    if method == "pendent":
        return kappa_pendent_removal(g)
    if method == "spectral":
        _require_connected(g)
        if g.n == 1:
            return 0.0
        return kappa_spectral(g).kappa
    raise ValueError(f"unknown method {method!r}")


__all__ = [
    "ConcatenationProfile",
    "MfpResult",
    "RootedTree",
    "SpectralResult",
    "format_decimal",
    "format_rational",
    "kappa",
    "kappa_broomstar",
    "kappa_caterpillar",
    "kappa_combinatorial",
    "kappa_concatenation",
    "kappa_pendent_removal",
    "kappa_spectral",
    "mfp_analysis",
]
