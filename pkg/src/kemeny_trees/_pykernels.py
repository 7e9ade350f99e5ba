"""Pure-Python implementations of the hot kernels.

Used when the compiled ``_ckernels`` extension is unavailable, and as the
reference the extension is benchmarked and tested against.  The signatures
match ``_ckernels.pyx`` exactly.
"""
from collections import deque
import math

import numpy as np


def bfs_from(n, indptr, indices, source):
    """Hop distances from ``source``; unreachable vertices get -1."""
    dist = [-1] * n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for k in range(indptr[u], indptr[u + 1]):
            v = indices[k]
            if dist[v] < 0:
                dist[v] = du
                queue.append(v)
    return np.asarray(dist, dtype=np.int64)


def bfs_all_pairs(n, indptr, indices):
    indptr = [int(x) for x in indptr]
    indices = [int(x) for x in indices]
    out = np.empty((n, n), dtype=np.int64)
    for s in range(n):
        out[s] = bfs_from(n, indptr, indices, s)
    return out


def degree_quadratic_form(dist, deg):
    """Exact ``deg^T dist deg`` as a Python int."""
    deg = [int(x) for x in deg]
    total = 0
    for i, row in enumerate(dist.tolist()):
        di = deg[i]
        if di:
            total += di * sum(r * d for r, d in zip(row, deg))
    return total


def jacobi_eigenvalues(a, tol, max_sweeps):
    """Cyclic Jacobi on a symmetric float64 matrix.

    Returns ``(eigenvalues, sweeps, converged)``.  The input is copied.
    Rotations are applied with vectorised row/column updates.
    """
    a = np.array(a, dtype=np.float64, copy=True)
    n = a.shape[0]
    sweeps = 0
    while True:
        off = math.sqrt(float(np.sum(a[~np.eye(n, dtype=bool)] ** 2)))
        if off <= tol:
            return np.diag(a).copy(), sweeps, True
        if sweeps >= max_sweeps:
            return np.diag(a).copy(), sweeps, False
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:  # theta**2 would overflow
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                a[p, q] = a[q, p] = 0.0
