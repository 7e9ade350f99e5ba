"""Command-line front end.

Exit status: 0 success, 1 usage or parse error, 2 verification failure,
3 domain error (disconnected input, empty class, out-of-range parameters).
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .bounds import (
    bounds_report,
    kappa_lower_bound,
    kappa_simple_lower_bound,
    kappa_upper_bound,
    ratio_csv,
)
from .errors import DomainError, GraphError, InvalidSpec, KemenyError
from .families import extremal_caterpillar, format_spec, min_diameter_spec, parse_spec
from .graph import diameter, read_graph
from .kemeny import (
    METHODS,
    format_decimal,
    format_rational,
    kappa,
    kappa_broomstar,
    kappa_caterpillar,
)
from .verify import CHECKS, verify

BROOMSTAR_CSV_HEADER = "t,q,p,n,kappa_recursive,kappa_closed,kappa_decimal"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _exact(x) -> str:
    return f"{format_rational(x)} ({format_decimal(x)})"


def _load_graph(args):
    if args.input is not None:
        try:
            return read_graph(args.input)
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    return parse_spec(args.spec).build()


def _emit(args, text):
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_source(p, required=True):
    src = p.add_mutually_exclusive_group(required=required)
    src.add_argument("--input", help="edge-list file (or .json)")
    src.add_argument("--spec", help="family spec, e.g. caterpillar:3:5,0,5")


# --- subcommands --------------------------------------------------------------


def cmd_kappa(args):
    g = _load_graph(args)
    value = kappa(g, args.method)
    if isinstance(value, float):
        text = f"{value:.12f}"
        payload = {"n": g.n, "method": args.method, "kappa_decimal": text}
    else:
        text = _exact(value)
        payload = {"n": g.n, "method": args.method, "kappa": format_rational(value),
                   "kappa_decimal": format_decimal(value)}
    if args.format == "json":
        _emit(args, json.dumps(payload) + "\n")
    else:
        _emit(args, text + "\n")


def cmd_family(args):
    g = parse_spec(args.spec).build()
    out = {"dot": g.to_dot, "edgelist": g.to_edgelist, "json": lambda: g.to_json() + "\n"}
    _emit(args, out[args.format]())


def cmd_extremal(args):
    spec = extremal_caterpillar(args.n, args.k, args.which)
    value = kappa_caterpillar(spec.k, spec.p)
    _emit(args, f"{format_spec(spec)}\nkappa {_exact(value)}\n")


def cmd_extremal_tree(args):
    spec = min_diameter_spec(args.n, args.diameter)
    value = kappa_caterpillar(spec.k, spec.p) if spec.order > 1 else 0
    _emit(args, f"{format_spec(spec)}\nkappa {_exact(value)}\n")


def cmd_bounds(args):
    g = None
    if args.input is not None or args.spec is not None:
        g = _load_graph(args)
    n, d = args.n, args.diameter
    if g is not None:
        gd = diameter(g)
        if (n is not None and n != g.n) or (d is not None and d != gd):
            raise DomainError(f"--n/--diameter disagree with the tree (n={g.n}, diameter={gd})")
        n, d = g.n, gd
    if n is None or d is None:
        raise UsageError("bounds: give --n and --diameter, or a tree via --input/--spec")
    rows = {
        "n": n,
        "diameter": d,
        "lower_cor44": kappa_lower_bound(n, d),
        "lower_thm54": kappa_simple_lower_bound(n, d),
        "upper_thm51": kappa_upper_bound(n, d),
    }
    if g is not None:
        rep = bounds_report(g)
        rows.update(kappa=rep.kappa, lower_tight=rep.lower_tight, sandwich_ok=rep.sandwich_ok)
    if args.format == "json":
        payload = {k: v if isinstance(v, (bool, int)) else format_rational(v)
                   for k, v in rows.items()}
        _emit(args, json.dumps(payload) + "\n")
        return
    lines = []
    for key, value in rows.items():
        if isinstance(value, bool):
            lines.append(f"{key} {str(value).lower()}")
        elif key in ("n", "diameter"):
            lines.append(f"{key} {value}")
        else:
            lines.append(f"{key} {_exact(value)}")
    _emit(args, "\n".join(lines) + "\n")


def cmd_verify(args):
    params = {"n": args.n, "k": args.k, "n_max": args.n_max, "k_max": args.k_max,
              "kab_max": args.kab_max}
    rep = verify(args.check, params)
    _emit(args, rep.to_json() + "\n")
    return 0 if rep.passed else 2


def cmd_table_broomstar(args):
    lines = [BROOMSTAR_CSV_HEADER]
    for t in range(2, args.t_max + 1):
        rec = kappa_broomstar(t, args.q, args.p, "recursive")
        closed = kappa_broomstar(t, args.q, args.p, "closed")
        n = t * args.p + t * args.q - t + 1
        lines.append(f"{t},{args.q},{args.p},{n},{format_rational(rec)},"
                     f"{format_rational(closed)},{float(closed):.12g}")
    _emit(args, "\n".join(lines) + "\n")


def cmd_table_ratio(args):
    _emit(args, ratio_csv(args.i_max))


def build_parser():
    parser = _Parser(prog="kemeny-trees", description="Kemeny's constant of trees, exactly.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("kappa", help="compute Kemeny's constant")
    _add_source(p)
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output")
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("family", help="build a named family member")
    p.add_argument("--spec", required=True)
    p.add_argument("--format", choices=("dot", "edgelist", "json"), default="edgelist")
    p.add_argument("--output")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("extremal", help="extremal caterpillar with k central vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--which", choices=("min", "max"), default="min")
    p.add_argument("--output")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("extremal-tree", help="minimiser among trees of given order and diameter")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--diameter", type=int, required=True)
    p.add_argument("--output")
    p.set_defaults(func=cmd_extremal_tree)

    p = sub.add_parser("bounds", help="lower/upper bounds for order and diameter")
    p.add_argument("--n", type=int)
    p.add_argument("--diameter", type=int)
    _add_source(p, required=False)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="exhaustive check of one result")
    p.add_argument("--check", required=True, choices=tuple(CHECKS))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--k-max", type=int)
    p.add_argument("--kab-max", type=int)
    p.add_argument("--output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="CSV tables")
    tables = p.add_subparsers(dest="table", required=True, parser_class=_Parser)
    t = tables.add_parser("broomstar", help="broom-star constants, recursive vs closed form")
    t.add_argument("--t-max", type=int, required=True)
    t.add_argument("--q", type=int, required=True)
    t.add_argument("--p", type=int, required=True)
    t.add_argument("--output")
    t.set_defaults(func=cmd_table_broomstar)
    t = tables.add_parser("ratio", help="upper-bound ratios for BS(i, i, i^2)")
    t.add_argument("--i-max", type=int, required=True)
    t.add_argument("--output")
    t.set_defaults(func=cmd_table_ratio)
    return parser


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        status = args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except (InvalidSpec, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except KemenyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    return status or 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
