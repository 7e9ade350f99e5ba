"""Bounds on Kemeny's constant of a tree in terms of order and diameter."""
from __future__ import annotations

from dataclasses import dataclass, asdict
from fractions import Fraction

from .errors import EmptyClass, NotATree, OutOfRange
from .families import class_nonempty
from .graph import Graph, diameter
from .kemeny import format_rational, kappa_broomstar, kappa_combinatorial

F = Fraction


def kappa_lower_bound(n: int, delta: int) -> Fraction:
    """Sharp lower bound over trees of order ``n >= 2`` and diameter ``delta``.

    Attained only by the caterpillar from
    :func:`~kemeny_trees.families.min_diameter_tree`.
    """
    if n < 2 or not class_nonempty(n, delta):
        raise EmptyClass(f"no nontrivial tree has n={n} and diameter {delta}")
    n, d = F(n), F(delta)
    common = n * d * d / 2 - d ** 3 / 6 + n * n - n * d - d * d / 2
    if delta % 2:
        tail = -2 * n + F(7, 6) * d + 1
    else:
        tail = -F(5, 2) * n + F(5, 3) * d + F(3, 2)
    return (common + tail) / (n - 1)


def kappa_upper_bound(n: int, delta: int) -> Fraction:
    return F(n * delta) - F(delta * delta, 2)


def kappa_simple_lower_bound(n: int, delta: int) -> Fraction:
    return n + F(delta * delta, 3) - delta - 1


def moment_upper_bound(n: int, delta: int) -> int:
    """Largest moment of a rooted tree of order ``n`` whose root reaches depth ``delta``.

    Equality holds only for the rooted broom ``B(delta, n - delta)``.
    """
    if not 1 <= delta <= n - 1:
        raise OutOfRange(f"need 1 <= delta <= n-1, got n={n}, delta={delta}")
    return 2 * n * delta - delta * delta - n - delta + 1


def bipartite_lower_bound(n: int) -> Fraction:
    if n < 2:
        raise OutOfRange("bipartite bound needs n >= 2")
    return n - F(3, 2)


# --- asymptotic sharpness -----------------------------------------------------


def ratio_instance(i: int) -> tuple[int, int]:
    """Order and diameter of the broom-star BS(i, i, i^2)."""
    return i ** 3 + i * i - i + 1, 2 * i


def asymptotic_ratio(i: int) -> Fraction:
    """``kappa(BS(i, i, i^2)) / (n delta - delta^2 / 2)`` exactly."""
    if i < 2:
        raise OutOfRange("ratio sequence starts at i = 2")
    n, d = ratio_instance(i)
    return kappa_broomstar(i, i, i * i) / kappa_upper_bound(n, d)


def asymptotic_ratio_expression(i: int) -> Fraction:
    """The same ratio as a single rational function of ``i``."""
    if i < 2:
        raise OutOfRange("ratio sequence starts at i = 2")
    i = F(i)
    num = (4 * i ** 4 - 4 * i ** 3 - 4 * i ** 2 + 7 * i - F(3, 2)
           + 2 * i ** 2 * (i ** 4 - 1) / (i ** 2 + i - 1)) / 3
    return num / (2 * i ** 4 + 2 * i ** 3 - 4 * i ** 2 + 2 * i)


RATIO_CSV_HEADER = "i,n,delta,kappa_num,kappa_den,bound_num,bound_den,ratio_decimal"


def ratio_rows(i_max: int):
    for i in range(2, i_max + 1):
        n, d = ratio_instance(i)
        kappa = kappa_broomstar(i, i, i * i)
        bound = kappa_upper_bound(n, d)
        yield i, n, d, kappa, bound, kappa / bound


def ratio_csv(i_max: int) -> str:
    lines = [RATIO_CSV_HEADER]
    for i, n, d, kappa, bound, r in ratio_rows(i_max):
        lines.append(f"{i},{n},{d},{kappa.numerator},{kappa.denominator},"
                     f"{bound.numerator},{bound.denominator},{float(r):.12g}")
    return "\n".join(lines) + "\n"


# --- per-tree report ----------------------------------------------------------


@dataclass(frozen=True)
class BoundsReport:
    n: int
    delta: int
    kappa: Fraction
    lower_cor44: Fraction
    lower_thm54: Fraction
    upper_thm51: Fraction
    lower_tight: bool
    sandwich_ok: bool

    def as_dict(self):
        out = asdict(self)
        for key, value in out.items():
            if isinstance(value, Fraction):
                out[key] = format_rational(value)
        return out


def bounds_report(g: Graph) -> BoundsReport:
    if not g.is_tree:
        raise NotATree("bounds apply to trees")
    if g.n < 2:
        raise OutOfRange("bounds report needs n >= 2")
    n, d = g.n, diameter(g)
    kappa = kappa_combinatorial(g)
    lower = kappa_lower_bound(n, d)
    simple = kappa_simple_lower_bound(n, d)
    upper = kappa_upper_bound(n, d)
    return BoundsReport(
        n=n,
        delta=d,
        kappa=kappa,
        lower_cor44=lower,
        lower_thm54=simple,
        upper_thm51=upper,
        lower_tight=kappa == lower,
        sandwich_ok=simple <= lower <= kappa <= upper,
    )
