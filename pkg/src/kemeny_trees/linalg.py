"""Exact rational linear algebra and a symmetric eigenvalue wrapper."""
from fractions import Fraction

import numpy as np

from . import kernels
from .errors import ConvergenceFailure


def inverse(a):
    """Inverse of a square matrix of Fractions (list of lists), exactly.

    Gauss-Jordan elimination with partial pivoting on the largest absolute
    entry.  Raises ``ZeroDivisionError`` for a singular matrix.
    """
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(a)]
    for col in range(n):
        piv = max(range(col, n), key=lambda r: abs(aug[r][col]))
        if aug[piv][col] == 0:
            raise ZeroDivisionError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        prow = aug[col]
        inv_p = 1 / prow[col]
        for j in range(col, 2 * n):
            prow[j] *= inv_p
        for r in range(n):
            if r == col:
                continue
            f = aug[r][col]
            if f:
                row = aug[r]
                for j in range(col, 2 * n):
                    if prow[j]:
                        row[j] -= f * prow[j]
    return [row[n:] for row in aug]


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def symmetric_eigenvalues(a, tol=1e-13, max_sweeps=100):
    """Eigenvalues of a real symmetric matrix, sorted descending.

    Cyclic Jacobi; stops once the off-diagonal Frobenius norm is at most
    ``tol``.  Raises :class:`ConvergenceFailure` after ``max_sweeps``.
    """
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square matrix")
    if not np.allclose(a, a.T, rtol=0, atol=1e-14):
        raise ValueError("matrix is not symmetric")
    eig, sweeps, ok = kernels.jacobi_eigenvalues(a, float(tol), int(max_sweeps))
    if not ok:
        raise ConvergenceFailure(f"Jacobi did not converge in {sweeps} sweeps")
    return np.sort(eig)[::-1]
