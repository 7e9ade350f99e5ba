"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module is used.  ``BACKEND`` names the active one.  ``backend(name)`` returns
a specific implementation for benchmarks and cross-checks.
"""
from importlib import import_module

from . import _pykernels

try:
    from . import _ckernels as _active
    BACKEND = "cython"
except ImportError:  # extension not built
    _active = _pykernels
    BACKEND = "python"

bfs_from = _active.bfs_from
bfs_all_pairs = _active.bfs_all_pairs
degree_quadratic_form = _active.degree_quadratic_form
jacobi_eigenvalues = _active.jacobi_eigenvalues


def backend(name):
    if name == "python":
        return _pykernels
    if name == "cython":
        return import_module(f"{__package__}._ckernels")
    raise ValueError(f"unknown backend {name!r}")


def available_backends():
    names = ["python"]
    try:
        backend("cython")
    except ImportError:
        pass
    else:
        names.append("cython")
    return names
