import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from kemeny_trees import kernels
from kemeny_trees.enumeration import prufer_decode
from kemeny_trees.families import BroomStar
from kemeny_trees.graph import build_graph

BACKENDS = kernels.available_backends()


def test_python_backend_always_available():
    assert "python" in BACKENDS
    assert kernels.BACKEND in BACKENDS
    with pytest.raises(ValueError):
        kernels.backend("fortran")


def test_compiled_backend_built():
    # the extension builds in this environment; a missing one should be loud here
    assert "cython" in BACKENDS


def _csr(g):
    return g.csr()


@st.composite
def trees(draw, n_max=25):
    n = draw(st.integers(2, n_max))
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return build_graph(n, prufer_decode(seq, n))


@settings(max_examples=60, deadline=None)
@given(trees())
def test_backends_agree_on_bfs_and_quadratic_form(g):
    indptr, indices = _csr(g)
    results = []
    for name in BACKENDS:
        k = kernels.backend(name)
        dist = k.bfs_all_pairs(g.n, indptr, indices)
        deg = np.asarray(g.degrees, dtype=np.int64)
        results.append((dist.tolist(), int(k.degree_quadratic_form(dist, deg)),
                        k.bfs_from(g.n, indptr, indices, 0).tolist()))
    assert all(r == results[0] for r in results)
    dist, q, row0 = results[0]
    assert row0 == dist[0]
    assert q == sum(g.degrees[i] * dist[i][j] * g.degrees[j]
                    for i in range(g.n) for j in range(g.n))


def test_bfs_unreachable_marked():
    g = build_graph(4, [(0, 1), (2, 3)])
    indptr, indices = g.csr()
    for name in BACKENDS:
        assert kernels.backend(name).bfs_from(4, indptr, indices, 0).tolist() == [0, 1, -1, -1]


def test_quadratic_form_exact_on_large_tree():
    g = BroomStar(10, 10, 100).build()
    indptr, indices = g.csr()
    deg = np.asarray(g.degrees, dtype=np.int64)
    values = set()
    for name in BACKENDS:
        k = kernels.backend(name)
        values.add(k.degree_quadratic_form(k.bfs_all_pairs(g.n, indptr, indices), deg))
    assert len(values) == 1
    assert isinstance(values.pop(), int)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 20), st.integers(0, 2**32 - 1))
def test_backends_agree_on_jacobi(size, seed):
    rs = np.random.default_rng(seed)
    a = rs.uniform(-1, 1, (size, size))
    a = (a + a.T) / 2
    outs = []
    for name in BACKENDS:
        eigs, sweeps, converged = kernels.backend(name).jacobi_eigenvalues(a.copy(), 1e-13, 100)
        assert converged
        outs.append(np.sort(eigs))
    for o in outs[1:]:
        assert np.allclose(o, outs[0], atol=1e-11)
    assert np.allclose(outs[0], np.linalg.eigvalsh(a), atol=1e-10)
