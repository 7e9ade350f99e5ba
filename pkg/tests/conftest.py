from fractions import Fraction
import random

import pytest
import sympy

from kemeny_trees.families import Path, Star
from kemeny_trees.graph import build_graph
from kemeny_trees.enumeration import prufer_decode


def path(n):
    return Path(n).build()


def star(n):
    return Star(n).build()


def random_tree(rng, n):
    seq = [rng.randrange(n) for _ in range(n - 2)] if n > 2 else []
    return build_graph(n, prufer_decode(seq, n) if n > 1 else [])


def hitting_time_kappa(g):
    """Kemeny's constant from first-step equations, solved by sympy.

    For each target j: h_j = 0, h_i = 1 + mean of h over neighbours of i.
    Then kappa = sum_j h_0j w_j + w_0 * (1 / w_0) - 1 with the return time
    on the diagonal; independent of the fundamental-matrix route.
    """
    n = g.n
    two_m = 2 * g.m
    w = [sympy.Rational(d, two_m) for d in g.degrees]
    total = sympy.Integer(0)
    for j in range(n):
        a = sympy.zeros(n, n)
        b = sympy.zeros(n, 1)
        for i in range(n):
            a[i, i] = 1
            if i == j:
                continue
            b[i] = 1
            for k in g.adjacency[i]:
                a[i, k] -= sympy.Rational(1, g.degrees[i])
        h = a.LUsolve(b)
        total += (h[0] if j != 0 else 1 / w[0]) * w[j]
    value = total - 1
    return Fraction(int(value.p), int(value.q))


@pytest.fixture
def rng():
    return random.Random(20240611)
