"""Exhaustive desk-scale checks of the extremal and bound results.

Each check enumerates its full instance space for the given parameters and
returns a :class:`VerificationReport`; failure entries carry exact values.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import json
import math

from .bounds import (
    bipartite_lower_bound,
    kappa_lower_bound,
    kappa_simple_lower_bound,
    kappa_upper_bound,
    moment_upper_bound,
)
from .enumeration import MAX_ORDER, compositions, enumerate_trees
from .errors import CapExceeded, OutOfRange, UnknownCheck
from .families import (
    CompleteBipartite,
    RootedBroom,
    Star,
    class_nonempty,
    extremal_caterpillar,
    min_diameter_tree,
)
from .graph import (
    RootedTree,
    build_graph,
    canonical_code,
    diameter,
    eccentricity,
    is_complete_bipartite,
    moment,
    rooted_code,
)
from .kemeny import (
    format_rational,
    kappa_caterpillar,
    kappa_combinatorial,
    kappa_pendent_removal,
    kappa_spectral,
    mfp_analysis,
)

SPECTRAL_RTOL = 1e-9
MAX_COMPOSITIONS = 1_000_000


@dataclass
class VerificationReport:
    check_id: str
    params: dict
    instances_checked: int = 0
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures and self.instances_checked > 0

    def fail(self, instance, expected, actual):
        self.failures.append({"instance": str(instance), "expected": _show(expected),
                              "actual": _show(actual)})

    def to_dict(self):
        return {
            "check_id": self.check_id,
            "params": self.params,
            "instances_checked": self.instances_checked,
            "failures": sorted(self.failures, key=lambda f: f["instance"]),
            "passed": self.passed,
            **({"details": self.details} if self.details else {}),
        }

    def to_json(self, indent=2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=False)


def _show(x):
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, (list, tuple)):
        return [_show(v) for v in x]
    if isinstance(x, bytes):
        return x.decode("ascii")
    return x


def _tag(g):
    return f"n={g.n};code={canonical_code(g).decode()}"


def _orders(params, default_max, lo=1):
    if params.get("n") is not None:
        ns = [int(params["n"])]
    else:
        ns = list(range(lo, int(params.get("n_max", default_max)) + 1))
    if ns and max(ns) > MAX_ORDER:
        raise CapExceeded(f"tree checks are capped at n = {MAX_ORDER}")
    return [n for n in ns if n >= lo]


# --- checks -------------------------------------------------------------------


def check_thm32(rep, params):
    """Brute-force extremal caterpillars over all compositions."""
    if params.get("n") is not None and params.get("k") is not None:
        classes = [(int(params["n"]), int(params["k"]))]
    else:
        n_max = int(params.get("n_max", 12))
        k_max = int(params.get("k_max", 5))
        classes = [(n, k) for n in range(2, n_max + 1) for k in range(2, min(k_max, n) + 1)]
    for n, k in classes:
        if not 2 <= k <= n:
            raise OutOfRange(f"need 2 <= k <= n, got n={n}, k={k}")
        if math.comb(n - 1, k - 1) > MAX_COMPOSITIONS:
            raise CapExceeded(f"more than {MAX_COMPOSITIONS} compositions for n={n}, k={k}")
        values = {p: kappa_caterpillar(k, p) for p in compositions(n - k, k)}
        rep.instances_checked += len(values)
        lo, hi = min(values.values()), max(values.values())
        for which, target in (("min", lo), ("max", hi)):
            want = extremal_caterpillar(n, k, which).p
            got = {p for p, v in values.items() if v == target}
            if got != {want, want[::-1]}:
                rep.fail(f"n={n};k={k};{which}", [want, want[::-1]], sorted(got))
            if len(classes) == 1:
                rep.details[f"arg{which}"] = list(want)
                rep.details[f"{which}_value"] = format_rational(target)


def check_thm43(rep, params):
    for n in _orders(params, 10):
        classes = {}
        for g in enumerate_trees(n):
            classes.setdefault(diameter(g), []).append(g)
        for d, trees in sorted(classes.items()):
            rep.instances_checked += len(trees)
            values = [(kappa_combinatorial(g), canonical_code(g)) for g in trees]
            best = min(v for v, _ in values)
            winners = [c for v, c in values if v == best]
            want = canonical_code(min_diameter_tree(n, d))
            if winners != [want]:
                rep.fail(f"n={n};delta={d}", [want], winners)


def check_cor44(rep, params):
    for n in _orders(params, 10, lo=2):
        for g in enumerate_trees(n):
            rep.instances_checked += 1
            d = diameter(g)
            kappa = kappa_combinatorial(g)
            bound = kappa_lower_bound(n, d)
            is_min = canonical_code(g) == canonical_code(min_diameter_tree(n, d))
            if kappa < bound or (kappa == bound) != is_min:
                rep.fail(_tag(g), bound, kappa)


def check_thm51(rep, params):
    for n in _orders(params, 10):
        for g in enumerate_trees(n):
            rep.instances_checked += 1
            kappa, bound = kappa_combinatorial(g), kappa_upper_bound(n, diameter(g))
            if kappa > bound:
                rep.fail(_tag(g), bound, kappa)


def check_thm54(rep, params):
    for n in _orders(params, 10):
        for g in enumerate_trees(n):
            rep.instances_checked += 1
            d = diameter(g)
            kappa = kappa_combinatorial(g)
            lo, hi = kappa_simple_lower_bound(n, d), kappa_upper_bound(n, d)
            if not lo <= kappa <= hi:
                rep.fail(_tag(g), [lo, hi], kappa)


def bipartite_corpus(n_max):
    """Trees, complete bipartite graphs and K_{a,b} minus one edge, n <= n_max."""
    for n in range(2, n_max + 1):
        yield from enumerate_trees(n)
    for a in range(1, n_max):
        for b in range(a, n_max - a + 1):
            kab = CompleteBipartite(a, b).build()
            yield kab
            for e in kab.edges:
                g = build_graph(kab.n, [f for f in kab.edges if f != e])
                if g.is_connected:
                    yield g


def check_prop42(rep, params):
    n_max = int(params.get("n_max", 7))
    kab_max = int(params.get("kab_max", 12))
    for g in bipartite_corpus(n_max):
        rep.instances_checked += 1
        kappa = mfp_analysis(g).kappa
        bound = bipartite_lower_bound(g.n)
        if kappa < bound or (kappa == bound) != is_complete_bipartite(g):
            rep.fail(f"n={g.n};edges={list(g.edges)}", bound, kappa)
    for a in range(1, kab_max):
        for b in range(a, kab_max - a + 1):
            rep.instances_checked += 1
            kappa = mfp_analysis(CompleteBipartite(a, b).build()).kappa
            if kappa != a + b - Fraction(3, 2):
                rep.fail(f"K_{a},{b}", a + b - Fraction(3, 2), kappa)


def check_cor43star(rep, params):
    for n in _orders(params, 10, lo=2):
        values = [(kappa_combinatorial(g), canonical_code(g)) for g in enumerate_trees(n)]
        rep.instances_checked += len(values)
        best = min(v for v, _ in values)
        winners = [c for v, c in values if v == best]
        star = canonical_code(Star(n).build())
        if winners != [star] or best != n - Fraction(3, 2):
            rep.fail(f"n={n}", [star, n - Fraction(3, 2)], [winners, best])
        if params.get("n") is not None:
            rep.details.update(trees=len(values), min_value=format_rational(best))


def _rooted_trees(ns):
    for n in ns:
        for g in enumerate_trees(n):
            for r in range(g.n):
                yield RootedTree(g, r)


def check_lemma21(rep, params):
    for t in _rooted_trees(_orders(params, 8)):
        rep.instances_checked += 1
        n = t.tree.n
        mu = moment(t)
        centre_star = t.tree.degrees[t.root] == n - 1
        if mu < n - 1 or (mu == n - 1) != centre_star:
            rep.fail(f"{_tag(t.tree)};root={t.root}", n - 1, mu)


def check_prop53(rep, params):
    for t in _rooted_trees(_orders(params, 9)):
        rep.instances_checked += 1
        n = t.tree.n
        mu = moment(t)
        if n == 1:
            if mu != 0:
                rep.fail(f"{_tag(t.tree)};root=0", 0, mu)
            continue
        e = eccentricity(t.tree, t.root)
        bound = moment_upper_bound(n, e)
        broom = RootedBroom(e, n - e).rooted()
        is_broom = rooted_code(t.tree, t.root) == rooted_code(broom.tree, broom.root)
        if mu > bound or (mu == bound) != is_broom:
            rep.fail(f"{_tag(t.tree)};root={t.root};ecc={e}", bound, mu)


def check_oracle_eq(rep, params):
    for n in _orders(params, 9, lo=2):
        for g in enumerate_trees(n):
            rep.instances_checked += 1
            eq1 = kappa_combinatorial(g)
            mfp = mfp_analysis(g).kappa
            pend = kappa_pendent_removal(g)
            spec = kappa_spectral(g).kappa
            if not eq1 == mfp == pend:
                rep.fail(_tag(g), eq1, [mfp, pend])
            if abs(spec - float(eq1)) > SPECTRAL_RTOL * float(eq1):
                rep.fail(_tag(g) + ";spectral", eq1, spec)


def diam3_max_value(n: int) -> Fraction:
    if n % 2 == 0:
        return Fraction(3 * n, 2) - 3 + Fraction(1, 2 * n - 2)
    return Fraction(3 * n, 2) - 3


def check_diam3max(rep, params):
    for n in _orders(params, 12, lo=4):
        values = [kappa_combinatorial(g) for g in enumerate_trees(n) if diameter(g) == 3]
        rep.instances_checked += len(values)
        want = diam3_max_value(n)
        if max(values) != want:
            rep.fail(f"n={n}", want, max(values))
        if params.get("n") is not None:
            rep.details["max_value"] = format_rational(max(values))


CHECKS = {
    "thm32": check_thm32,
    "thm43": check_thm43,
    "cor44": check_cor44,
    "thm51": check_thm51,
    "thm54": check_thm54,
    "prop42": check_prop42,
    "cor43star": check_cor43star,
    "lemma21": check_lemma21,
    "prop53": check_prop53,
    "oracle_eq": check_oracle_eq,
    "diam3max": check_diam3max,
}


def verify(check_id: str, params: dict | None = None) -> VerificationReport:
    if check_id not in CHECKS:
        raise UnknownCheck(f"unknown check {check_id!r}; known: {', '.join(CHECKS)}")
    params = {k: v for k, v in (params or {}).items() if v is not None}
    rep = VerificationReport(check_id, params)
    CHECKS[check_id](rep, params)
    return rep
