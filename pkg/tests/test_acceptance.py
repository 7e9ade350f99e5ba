"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines.
"""
from fractions import Fraction
import math
import random
import time

import pytest

from kemeny_trees.bounds import (
    asymptotic_ratio,
    asymptotic_ratio_expression,
    bipartite_lower_bound,
    kappa_lower_bound,
    kappa_simple_lower_bound,
    kappa_upper_bound,
    moment_upper_bound,
)
from kemeny_trees.enumeration import compositions, enumerate_trees
from kemeny_trees.families import (
    BroomStar,
    Caterpillar,
    CompleteBipartite,
    RootedBroom,
    class_nonempty,
    concatenate,
    min_diameter_tree,
)
from kemeny_trees.graph import (
    RootedTree,
    build_graph,
    canonical_code,
    diameter,
    eccentricity,
    is_complete_bipartite,
    moment,
    rooted_code,
)
from kemeny_trees.kemeny import (
    ConcatenationProfile,
    kappa_broomstar,
    kappa_caterpillar,
    kappa_combinatorial,
    kappa_concatenation,
    kappa_pendent_removal,
    kappa_spectral,
    mfp_analysis,
    pendent_removal_steps,
)
from kemeny_trees.verify import bipartite_corpus

from conftest import random_tree

F = Fraction
RTOL = 1e-9


def report(number, title, ok, detail=""):
    print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title}"
          + (f" ({detail})" if detail else ""))
    assert ok, detail


def _close(x, exact):
    return abs(x - float(exact)) <= RTOL * abs(float(exact))


def test_01_worked_examples_all_methods():
    problems = []
    cases = [
        ("C_3((5,0,5))", Caterpillar(3, (5, 0, 5)).build(), F(43, 2),
         kappa_caterpillar(3, (5, 0, 5))),
        ("BS(3,2,3)", BroomStar(3, 2, 3).build(), F(47, 2), kappa_broomstar(3, 2, 3)),
    ]
    for name, g, want, family in cases:
        exact = {
            "eq1": kappa_combinatorial(g),
            "mfp": mfp_analysis(g).kappa,
            "pendent": kappa_pendent_removal(g),
            "family": family,
        }
        for method, value in exact.items():
            if value != want or value.denominator != 2:
                problems.append(f"{name} {method}={value}")
        spec = kappa_spectral(g).kappa
        if not _close(spec, want):
            problems.append(f"{name} spectral={spec!r}")
    report(1, "43/2 and 47/2 by every method", not problems, "; ".join(problems))


def test_02_example_compositions_brute_force():
    start = time.perf_counter()
    values = {p: kappa_caterpillar(7, p) for p in compositions(8, 7)}
    lo, hi = min(values.values()), max(values.values())
    argmin = {p for p, v in values.items() if v == lo}
    argmax = {p for p, v in values.items() if v == hi}
    elapsed = time.perf_counter() - start
    ok = (len(values) == 3003
          and argmin == {(0, 0, 0, 8, 0, 0, 0)}
          and argmax == {(4, 0, 0, 0, 0, 0, 4)}
          and elapsed < 1.0)
    report(2, "3003 compositions, unique argmin/argmax mod mirror", ok,
           f"min {lo} at {sorted(argmin)}, max {hi} at {sorted(argmax)}, {elapsed:.3f}s")


def _diam3_formula(n):
    base = F(3 * n, 2) - 3
    return base + F(1, 2 * n - 2) if n % 2 == 0 else base


def test_03_diameter_three_maximum():
    bad = []
    for n in range(4, 13):
        values = [kappa_combinatorial(g) for g in enumerate_trees(n) if diameter(g) == 3]
        if not values or max(values) != _diam3_formula(n):
            bad.append((n, max(values, default=None), _diam3_formula(n)))
    report(3, "diameter-3 maximum for n = 4..12", not bad, str(bad) if bad else "9 orders")


def test_04_oracle_equivalence():
    bad, count = [], 0
    for n in range(2, 10):
        for g in enumerate_trees(n):
            count += 1
            eq1 = kappa_combinatorial(g)
            if not eq1 == mfp_analysis(g).kappa == kappa_pendent_removal(g):
                bad.append((n, canonical_code(g)))
            if not _close(kappa_spectral(g).kappa, eq1):
                bad.append((n, canonical_code(g), "spectral"))
    report(4, "distance formula = MFP = pendent exactly, spectral within 1e-9", not bad,
           f"{count} trees" if not bad else str(bad[:3]))


def test_05_diameter_constrained_minimiser():
    bad, classes = [], 0
    for n in range(1, 11):
        by_d = {}
        for g in enumerate_trees(n):
            by_d.setdefault(diameter(g), []).append(g)
        for d, trees in by_d.items():
            if n < 2:
                continue
            classes += 1
            best = min(kappa_combinatorial(g) for g in trees)
            winners = [canonical_code(g) for g in trees if kappa_combinatorial(g) == best]
            bound = kappa_lower_bound(n, d)
            attaining = [canonical_code(g) for g in trees if kappa_combinatorial(g) == bound]
            want = canonical_code(min_diameter_tree(n, d))
            if winners != [want] or attaining != [want] or best != bound:
                bad.append((n, d))
    for n in range(2, 11):
        for d in range(1, n):
            if class_nonempty(n, d) and not any(diameter(g) == d for g in enumerate_trees(n)):
                bad.append((n, d, "empty"))
    report(5, "unique minimiser per (n, diameter) attains the lower bound", not bad,
           f"{classes} classes" if not bad else str(bad))


def test_06_sandwich_bounds():
    bad, count = [], 0
    for n in range(1, 11):
        for g in enumerate_trees(n):
            count += 1
            d = diameter(g)
            k = kappa_combinatorial(g)
            lo, hi = kappa_simple_lower_bound(n, d), kappa_upper_bound(n, d)
            if not lo <= k <= hi:
                bad.append((n, canonical_code(g)))
            if n >= 2 and k < kappa_lower_bound(n, d):
                bad.append((n, canonical_code(g), "parity bound"))
    report(6, "simple lower <= kappa <= upper, and parity lower bound", not bad,
           f"{count} trees" if not bad else str(bad[:3]))


def test_07_moment_bounds():
    bad, count = [], 0
    for n in range(1, 9):
        for g in enumerate_trees(n):
            for r in range(n):
                count += 1
                mu = moment(RootedTree(g, r))
                centre_star = g.degrees[r] == n - 1
                if mu < n - 1 or (mu == n - 1) != centre_star:
                    bad.append((n, canonical_code(g), r, "lower"))
                if n == 1:
                    continue
                e = eccentricity(g, r)
                broom = RootedBroom(e, n - e).rooted()
                is_broom = rooted_code(g, r) == rooted_code(broom.tree, broom.root)
                bound = moment_upper_bound(n, e)
                if mu > bound or (mu == bound) != is_broom:
                    bad.append((n, canonical_code(g), r, "upper"))
    report(7, "moment lower/upper bounds and their equality cases", not bad,
           f"{count} rooted trees" if not bad else str(bad[:3]))


def test_08_bipartite_bound():
    bad = []
    for a in range(1, 12):
        for b in range(1, 13 - a):
            if mfp_analysis(CompleteBipartite(a, b).build()).kappa != a + b - F(3, 2):
                bad.append(("K", a, b))
    count = 0
    for g in bipartite_corpus(7):
        count += 1
        k = mfp_analysis(g).kappa
        bound = bipartite_lower_bound(g.n)
        if k < bound or (k == bound) != is_complete_bipartite(g):
            bad.append((g.n, g.edges))
    report(8, "K_{a,b} = a + b - 3/2 and bipartite lower bound", not bad,
           f"{count} corpus graphs" if not bad else str(bad[:3]))


def test_09_broomstar_coherence():
    bad = []
    for t in (2, 3, 4):
        for q in (2, 3, 4):
            for p in (1, 2, 3, 4):
                rec = kappa_broomstar(t, q, p, "recursive")
                closed = kappa_broomstar(t, q, p, "closed")
                if not rec == closed == kappa_combinatorial(BroomStar(t, q, p).build()):
                    bad.append((t, q, p))
    start = time.perf_counter()
    g = BroomStar(10, 10, 100).build()
    big = kappa_combinatorial(g)
    elapsed = time.perf_counter() - start
    if g.n != 1091 or big != kappa_broomstar(10, 10, 100) or elapsed >= 60:
        bad.append(("BS(10,10,100)", g.n, big, elapsed))
    report(9, "recursion = closed form = distance formula, plus the 1091-vertex instance", not bad,
           f"36 small instances, large one {big} in {elapsed:.2f}s" if not bad else str(bad))


def test_10_ratio_sequence():
    r = {i: asymptotic_ratio(i) for i in range(2, 9)}
    ok = (all(r[i] == asymptotic_ratio_expression(i) for i in r)
          and r[2] == F(35, 72)
          and r[8] > r[2]
          and all(1 - r[i] < F(3, i) for i in range(4, 9)))
    report(10, "ratio closed form = displayed expression, r_2 = 35/72, trend", ok,
           f"r_2 = {r[2]}, r_8 = {float(r[8]):.6f}")


def test_11_concatenation_and_pendent_identities():
    rng = random.Random(20240611)
    bad, done = [], 0
    while done < 200:
        pieces = []
        for _ in range(rng.randint(1, 4)):
            t = random_tree(rng, rng.randint(1, 6))
            pieces.append(RootedTree(t, rng.randrange(t.n)))
        g = concatenate(pieces)
        if g.n < 2:
            continue
        done += 1
        if kappa_concatenation(ConcatenationProfile.from_pieces(pieces), g.n) != kappa_combinatorial(g):
            bad.append(("concat", done))
    count = 0
    for n in range(2, 10):
        for g in enumerate_trees(n):
            count += 1
            # one step of the recursion, checked against the distance formula on the remainder
            steps = pendent_removal_steps(g)
            n0, mu = steps[0]
            v = max(u for u in range(n) if g.degrees[u] == 1)
            rest = [(a if a < v else a - 1, b if b < v else b - 1)
                    for a, b in g.edges if v not in (a, b)]
            sub = build_graph(n - 1, rest)
            one_step = ((n - 2) * kappa_combinatorial(sub) + mu + n - F(3, 2)) / (n - 1)
            if n0 != n or one_step != kappa_combinatorial(g) or kappa_pendent_removal(g) != one_step:
                bad.append(("pendent", n, canonical_code(g)))
    report(11, "200 random concatenations and pendent recursion on all trees n <= 9", not bad,
           f"200 + {count} instances" if not bad else str(bad[:3]))
