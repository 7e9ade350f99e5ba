# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels.  Same signatures as ``_pykernels``."""
import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, fabs, copysign

cnp.import_array()


cdef void _bfs(Py_ssize_t n, const long long[:] indptr, const long long[:] indices,
               Py_ssize_t source, long long[:] dist, long long[:] queue) noexcept nogil:
    cdef Py_ssize_t head = 0, tail = 0, u, k, v
    cdef long long du
    for v in range(n):
        dist[v] = -1
    dist[source] = 0
    queue[tail] = source
    tail += 1
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u] + 1
        for k in range(indptr[u], indptr[u + 1]):
            v = indices[k]
            if dist[v] < 0:
                dist[v] = du
                queue[tail] = v
                tail += 1


def bfs_from(Py_ssize_t n, indptr, indices, Py_ssize_t source):
    cdef long long[:] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef long long[:] ix = np.ascontiguousarray(indices, dtype=np.int64)
    out = np.empty(n, dtype=np.int64)
    cdef long long[:] d = out
    cdef long long[:] queue = np.empty(max(n, 1), dtype=np.int64)
    with nogil:
        _bfs(n, ip, ix, source, d, queue)
    return out


def bfs_all_pairs(Py_ssize_t n, indptr, indices):
    cdef long long[:] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef long long[:] ix = np.ascontiguousarray(indices, dtype=np.int64)
    out = np.empty((n, n), dtype=np.int64)
    cdef long long[:, ::1] d = out
    cdef long long[:] queue = np.empty(max(n, 1), dtype=np.int64)
    cdef Py_ssize_t s
    with nogil:
        for s in range(n):
            _bfs(n, ip, ix, s, d[s], queue)
    return out


def degree_quadratic_form(dist, deg):
    """Exact ``deg^T dist deg``.

    Row sums ``(dist @ deg)_i`` are accumulated in int64 (each is at most
    n * max_dist * max_deg, far below 2**63 for any graph that fits in memory);
    the outer sum is done in Python ints so the result cannot overflow.
    """
    cdef const long long[:, :] dm = np.asarray(dist, dtype=np.int64)
    cdef const long long[:] dv = np.ascontiguousarray(deg, dtype=np.int64)
    cdef Py_ssize_t n = dv.shape[0], i, j
    cdef long long acc
    rows = np.empty(n, dtype=np.int64)
    cdef long long[:] r = rows
    with nogil:
        for i in range(n):
            acc = 0
            for j in range(n):
                acc += dm[i, j] * dv[j]
            r[i] = acc
    total = 0
    for i in range(n):
        total += int(dv[i]) * int(r[i])
    return total


cdef double _offdiag(double[:, ::1] a, Py_ssize_t n) noexcept nogil:
    cdef double s = 0.0
    cdef Py_ssize_t i, j
    for i in range(n):
        for j in range(n):
            if i != j:
                s += a[i, j] * a[i, j]
    return sqrt(s)


def jacobi_eigenvalues(a_in, double tol, int max_sweeps):
    a_np = np.array(a_in, dtype=np.float64, copy=True, order="C")
    cdef double[:, ::1] a = a_np
    cdef Py_ssize_t n = a.shape[0], p, q, k
    cdef int sweeps = 0
    cdef double apq, theta, t, c, s, xp, xq
    cdef bint converged = False
    with nogil:
        while True:
            if _offdiag(a, n) <= tol:
                converged = True
                break
            if sweeps >= max_sweeps:
                break
            sweeps += 1
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if apq == 0.0:
                        continue
                    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                    if fabs(theta) > 1e150:  # theta**2 would overflow
                        t = 0.5 / theta
                    else:
                        t = copysign(1.0, theta) / (fabs(theta) + sqrt(theta * theta + 1.0))
                    c = 1.0 / sqrt(t * t + 1.0)
                    s = t * c
                    for k in range(n):
                        xp = a[k, p]
                        xq = a[k, q]
                        a[k, p] = c * xp - s * xq
                        a[k, q] = s * xp + c * xq
                    for k in range(n):
                        xp = a[p, k]
                        xq = a[q, k]
                        a[p, k] = c * xp - s * xq
                        a[q, k] = s * xp + c * xq
                    a[p, q] = 0.0
                    a[q, p] = 0.0
    return np.diag(a_np).copy(), sweeps, bool(converged)
