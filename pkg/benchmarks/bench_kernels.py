"""Time the compiled and pure-Python kernels side by side.

    python benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import time

import numpy as np

from kemeny_trees import kernels
from kemeny_trees.families import BroomStar
from kemeny_trees.kemeny import kappa_broomstar


def best_of(fn, repeat):
    times = []
    out = None
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - start)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    g = BroomStar(10, 10, 100).build()
    indptr, indices = g.csr()
    deg = np.asarray(g.degrees, dtype=np.int64)
    rs = np.random.default_rng(0)
    sym = rs.uniform(-1, 1, (60, 60))
    sym = (sym + sym.T) / 2

    print(f"backends available: {', '.join(kernels.available_backends())}")
    print(f"{'kernel':<34}{'backend':<9}{'seconds':>10}")
    results = {}
    for name in kernels.available_backends():
        k = kernels.backend(name)
        t_bfs, dist = best_of(lambda: k.bfs_all_pairs(g.n, indptr, indices), args.repeat)
        t_q, q = best_of(lambda: k.degree_quadratic_form(dist, deg), args.repeat)
        t_j, (eigs, _, _) = best_of(lambda: k.jacobi_eigenvalues(sym, 1e-13, 100), args.repeat)
        results[name] = (q, np.sort(eigs))
        print(f"{'all-pairs BFS, n=1091':<34}{name:<9}{t_bfs:>10.4f}")
        print(f"{'degree quadratic form, n=1091':<34}{name:<9}{t_q:>10.4f}")
        print(f"{'Jacobi eigenvalues, 60x60':<34}{name:<9}{t_j:>10.4f}")

    qs = {q for q, _ in results.values()}
    assert len(qs) == 1
    q = qs.pop()
    assert q == kappa_broomstar(10, 10, 100) * 4 * (g.n - 1)
    eigs = list(results.values())
    assert all(np.allclose(e, eigs[0][1], atol=1e-10) for _, e in eigs)
    print("backends agree; quadratic form matches the closed form")


if __name__ == "__main__":
    main()
